#include "expr.hpp"

#include <cctype>
#include <cmath>
#include <utility>

#include "errors.hpp"
#include "util.hpp"

namespace hhv::expr {

namespace {

Expr make(NodeKind k, Expr l = nullptr, Expr r = nullptr, double value = 0.0,
          double exponent = 0.0, std::int32_t offset = -1) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->value = value;
  n->exponent = exponent;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  n->offset = offset;
  return n;
}

bool is_const_value(const Expr& e, double v) {
  return e->kind == NodeKind::Constant && e->value == v;
}

} // namespace

Expr constant(double v) { return make(NodeKind::Constant, nullptr, nullptr, v); }
Expr variable() { return make(NodeKind::Variable); }

Expr add(Expr l, Expr r) {
  if (l->kind == NodeKind::Constant && r->kind == NodeKind::Constant)
    return constant(l->value + r->value);
  if (is_const_value(l, 0.0)) return r;
  if (is_const_value(r, 0.0)) return l;
  return make(NodeKind::Add, std::move(l), std::move(r));
}

Expr sub(Expr l, Expr r) {
  if (l->kind == NodeKind::Constant && r->kind == NodeKind::Constant)
    return constant(l->value - r->value);
  if (is_const_value(r, 0.0)) return l;
  if (is_const_value(l, 0.0)) return neg(std::move(r));
  return make(NodeKind::Sub, std::move(l), std::move(r));
}

Expr mul(Expr l, Expr r) {
  if (l->kind == NodeKind::Constant && r->kind == NodeKind::Constant)
    return constant(l->value * r->value);
  if (is_const_value(l, 0.0) || is_const_value(r, 0.0)) return constant(0.0);
  if (is_const_value(l, 1.0)) return r;
  if (is_const_value(r, 1.0)) return l;
  return make(NodeKind::Mul, std::move(l), std::move(r));
}

Expr div(Expr l, Expr r) {
  if (is_const_value(l, 0.0)) return constant(0.0);
  if (is_const_value(r, 1.0)) return l;
  return make(NodeKind::Div, std::move(l), std::move(r));
}

Expr pow(Expr base, double exponent) {
  if (exponent == 1.0) return base;
  if (exponent == 0.0) return constant(1.0);
  return make(NodeKind::Pow, std::move(base), nullptr, 0.0, exponent);
}

Expr neg(Expr e) {
  if (e->kind == NodeKind::Constant) return constant(-e->value);
  return make(NodeKind::Neg, std::move(e));
}

Expr ln(Expr e) { return make(NodeKind::Ln, std::move(e)); }
Expr exp(Expr e) { return make(NodeKind::Exp, std::move(e)); }
Expr sqrt(Expr e) { return make(NodeKind::Sqrt, std::move(e)); }
Expr abs(Expr e) { return make(NodeKind::Abs, std::move(e)); }

bool is_constant(const Expr& e) {
  switch (e->kind) {
    case NodeKind::Constant: return true;
    case NodeKind::Variable: return false;
    default:
      if (e->lhs && !is_constant(e->lhs)) return false;
      if (e->rhs && !is_constant(e->rhs)) return false;
      return true;
  }
}

Expr substitute(const Expr& e, const Expr& replacement) {
  switch (e->kind) {
    case NodeKind::Constant: return e;
    case NodeKind::Variable: return replacement;
    case NodeKind::Pow: return make(NodeKind::Pow, substitute(e->lhs, replacement),
                                    nullptr, 0.0, e->exponent);
    default: {
      Expr l = e->lhs ? substitute(e->lhs, replacement) : nullptr;
      Expr r = e->rhs ? substitute(e->rhs, replacement) : nullptr;
      return make(e->kind, std::move(l), std::move(r), e->value, e->exponent);
    }
  }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr run() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("expected end of input or an operator ('+', '-', '*', '/', '^')");
    return e;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& expected) const {
    std::string got = pos_ < text_.size()
                          ? "'" + std::string(1, text_[pos_]) + "'"
                          : "end of input";
    throw ParseError("syntax error at offset " + std::to_string(pos_) + ": " +
                         expected + ", got " + got,
                     pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_expr() {
    Expr e = parse_term();
    for (;;) {
      if (consume('+')) e = make(NodeKind::Add, e, parse_term());
      else if (consume('-')) e = make(NodeKind::Sub, e, parse_term());
      else return e;
    }
  }

  Expr parse_term() {
    Expr e = parse_factor();
    for (;;) {
      if (consume('*')) e = make(NodeKind::Mul, e, parse_factor());
      else if (consume('/')) e = make(NodeKind::Div, e, parse_factor());
      else return e;
    }
  }

  Expr parse_factor() {
    skip_ws();
    std::size_t at = pos_;
    if (consume('-')) return make(NodeKind::Neg, parse_factor(), nullptr, 0, 0,
                                  static_cast<std::int32_t>(at));
    Expr base = parse_base();
    skip_ws();
    if (consume('^')) {
      std::size_t exp_at = pos_;
      Expr exponent = parse_factor();
      if (!is_constant(exponent))
        throw ParseError("syntax error at offset " + std::to_string(exp_at) +
                             ": exponent must be a constant expression",
                         exp_at);
      double folded;
      try {
        folded = eval(exponent, 0.0);
      } catch (const EvalError& err) {
        throw ParseError("syntax error at offset " + std::to_string(exp_at) +
                             ": exponent does not evaluate (" + err.what() + ")",
                         exp_at);
      }
      return make(NodeKind::Pow, base, nullptr, 0.0, folded, base->offset);
    }
    return base;
  }

  Expr parse_base() {
    skip_ws();
    if (pos_ >= text_.size())
      fail("expected a number, 'x', a function name, or '('");
    char c = text_[pos_];
    if (consume('(')) {
      Expr e = parse_expr();
      if (!consume(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalpha(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      std::string_view ident = text_.substr(start, pos_ - start);
      if (ident == "x")
        return make(NodeKind::Variable, nullptr, nullptr, 0, 0,
                    static_cast<std::int32_t>(start));
      NodeKind kind;
      if (ident == "ln") kind = NodeKind::Ln;
      else if (ident == "exp") kind = NodeKind::Exp;
      else if (ident == "sqrt") kind = NodeKind::Sqrt;
      else if (ident == "abs") kind = NodeKind::Abs;
      else
        throw ParseError("syntax error at offset " + std::to_string(start) +
                             ": unknown function '" + std::string(ident) +
                             "' (expected ln, exp, sqrt, or abs)",
                         start);
      if (!consume('(')) fail("expected '(' after function name");
      Expr arg = parse_expr();
      if (!consume(')')) fail("expected ')'");
      return make(kind, arg, nullptr, 0, 0, static_cast<std::int32_t>(start));
    }
    fail("expected a number, 'x', a function name, or '('");
  }

  Expr parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        pos_ = mark; // not an exponent after all
      else
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
    }
    std::string token(text_.substr(start, pos_ - start));
    if (token.empty() || token == ".")
      throw ParseError("syntax error at offset " + std::to_string(start) +
                           ": malformed number",
                       start);
    return make(NodeKind::Constant, nullptr, nullptr, std::strtod(token.c_str(), nullptr),
                0, static_cast<std::int32_t>(start));
  }
};

} // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

// Precedence levels: additive 1, multiplicative 2, unary minus 3, power 4.
int precedence(const Expr& e) {
  switch (e->kind) {
    case NodeKind::Add:
    case NodeKind::Sub: return 1;
    case NodeKind::Mul:
    case NodeKind::Div: return 2;
    case NodeKind::Neg: return 3;
    case NodeKind::Pow: return 4;
    default: return 5;
  }
}

void print(const Expr& e, std::string& out, int parent_prec, bool right_side) {
  int prec = precedence(e);
  bool parens = prec < parent_prec || (prec == parent_prec && right_side);
  if (e->kind == NodeKind::Constant && e->value < 0.0) parens = parent_prec > 1;
  if (parens) out += '(';
  switch (e->kind) {
    case NodeKind::Constant: out += shortest_double(e->value); break;
    case NodeKind::Variable: out += 'x'; break;
    case NodeKind::Add:
      print(e->lhs, out, 1, false);
      out += " + ";
      print(e->rhs, out, 1, true);
      break;
    case NodeKind::Sub:
      print(e->lhs, out, 1, false);
      out += " - ";
      print(e->rhs, out, 1, true);
      break;
    case NodeKind::Mul:
      print(e->lhs, out, 2, false);
      out += '*';
      print(e->rhs, out, 2, true);
      break;
    case NodeKind::Div:
      print(e->lhs, out, 2, false);
      out += '/';
      print(e->rhs, out, 2, true);
      break;
    case NodeKind::Pow:
      print(e->lhs, out, 5, false); // base parenthesized unless atomic
      out += '^';
      out += shortest_double(e->exponent);
      break;
    case NodeKind::Neg:
      out += '-';
      print(e->lhs, out, 3, true);
      break;
    case NodeKind::Ln:
    case NodeKind::Exp:
    case NodeKind::Sqrt:
    case NodeKind::Abs: {
      out += e->kind == NodeKind::Ln    ? "ln"
             : e->kind == NodeKind::Exp ? "exp"
             : e->kind == NodeKind::Sqrt ? "sqrt"
                                          : "abs";
      out += '(';
      print(e->lhs, out, 0, false);
      out += ')';
      break;
    }
  }
  if (parens) out += ')';
}

} // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out, 0, false);
  return out;
}

// ---------------------------------------------------------------------------
// Differentiation
// ---------------------------------------------------------------------------

Expr differentiate(const Expr& e) {
  switch (e->kind) {
    case NodeKind::Constant: return constant(0.0);
    case NodeKind::Variable: return constant(1.0);
    case NodeKind::Add: return add(differentiate(e->lhs), differentiate(e->rhs));
    case NodeKind::Sub: return sub(differentiate(e->lhs), differentiate(e->rhs));
    case NodeKind::Mul:
      return add(mul(differentiate(e->lhs), e->rhs), mul(e->lhs, differentiate(e->rhs)));
    case NodeKind::Div:
      // (u/v)' = (u'v - uv') / v^2
      return div(sub(mul(differentiate(e->lhs), e->rhs), mul(e->lhs, differentiate(e->rhs))),
                 pow(e->rhs, 2.0));
    case NodeKind::Pow:
      // (u^c)' = c u^{c-1} u'
      return mul(constant(e->exponent),
                 mul(pow(e->lhs, e->exponent - 1.0), differentiate(e->lhs)));
    case NodeKind::Neg: return neg(differentiate(e->lhs));
    case NodeKind::Ln: return div(differentiate(e->lhs), e->lhs);
    case NodeKind::Exp: return mul(exp(e->lhs), differentiate(e->lhs));
    case NodeKind::Sqrt:
      return div(differentiate(e->lhs), mul(constant(2.0), sqrt(e->lhs)));
    case NodeKind::Abs:
      // |u|' = u u' / |u|; undefined at u = 0, surfaces as a division error.
      return div(mul(e->lhs, differentiate(e->lhs)), abs(e->lhs));
  }
  throw InternalError("unreachable expression kind");
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void eval_fail(const Expr& e, const std::string& what) {
  std::string where = e->offset >= 0 ? " at offset " + std::to_string(e->offset) : "";
  throw EvalError(what + " in subexpression '" + to_string(e) + "'" + where);
}

Dual eval_impl(const Expr& e, double x, bool with_deriv) {
  switch (e->kind) {
    case NodeKind::Constant: return {e->value, 0.0};
    case NodeKind::Variable: return {x, 1.0};
    case NodeKind::Add: {
      Dual l = eval_impl(e->lhs, x, with_deriv), r = eval_impl(e->rhs, x, with_deriv);
      return {l.value + r.value, l.deriv + r.deriv};
    }
    case NodeKind::Sub: {
      Dual l = eval_impl(e->lhs, x, with_deriv), r = eval_impl(e->rhs, x, with_deriv);
      return {l.value - r.value, l.deriv - r.deriv};
    }
    case NodeKind::Mul: {
      Dual l = eval_impl(e->lhs, x, with_deriv), r = eval_impl(e->rhs, x, with_deriv);
      return {l.value * r.value, l.deriv * r.value + l.value * r.deriv};
    }
    case NodeKind::Div: {
      Dual l = eval_impl(e->lhs, x, with_deriv), r = eval_impl(e->rhs, x, with_deriv);
      if (r.value == 0.0) eval_fail(e, "division by zero");
      double v = l.value / r.value;
      return {v, with_deriv ? (l.deriv - v * r.deriv) / r.value : 0.0};
    }
    case NodeKind::Pow: {
      Dual u = eval_impl(e->lhs, x, with_deriv);
      double c = e->exponent;
      if (u.value < 0.0 && c != std::floor(c))
        eval_fail(e, "fractional power of a negative base");
      if (u.value == 0.0 && c < 0.0) eval_fail(e, "zero raised to a negative power");
      double v = std::pow(u.value, c);
      double dv = 0.0;
      if (with_deriv && u.deriv != 0.0 && c != 0.0)
        dv = c * std::pow(u.value, c - 1.0) * u.deriv;
      return {v, dv};
    }
    case NodeKind::Neg: {
      Dual u = eval_impl(e->lhs, x, with_deriv);
      return {-u.value, -u.deriv};
    }
    case NodeKind::Ln: {
      Dual u = eval_impl(e->lhs, x, with_deriv);
      if (u.value <= 0.0) eval_fail(e, "logarithm of a nonpositive value");
      return {std::log(u.value), with_deriv ? u.deriv / u.value : 0.0};
    }
    case NodeKind::Exp: {
      Dual u = eval_impl(e->lhs, x, with_deriv);
      double v = std::exp(u.value);
      return {v, with_deriv ? v * u.deriv : 0.0};
    }
    case NodeKind::Sqrt: {
      Dual u = eval_impl(e->lhs, x, with_deriv);
      if (u.value < 0.0) eval_fail(e, "square root of a negative value");
      double v = std::sqrt(u.value);
      return {v, with_deriv && u.deriv != 0.0 ? u.deriv / (2.0 * v) : 0.0};
    }
    case NodeKind::Abs: {
      Dual u = eval_impl(e->lhs, x, with_deriv);
      if (u.value < 0.0) return {-u.value, -u.deriv};
      if (u.value == 0.0) return {0.0, 0.0};
      return {u.value, u.deriv};
    }
  }
  throw InternalError("unreachable expression kind");
}

} // namespace

Dual eval_dual(const Expr& e, double x) { return eval_impl(e, x, true); }
double eval(const Expr& e, double x) { return eval_impl(e, x, false).value; }

} // namespace hhv::expr
