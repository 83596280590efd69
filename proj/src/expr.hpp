#ifndef HHV_EXPR_HPP
#define HHV_EXPR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace hhv::expr {

enum class NodeKind : std::uint8_t {
  Constant, // value
  Variable, // x
  Add,      // lhs + rhs
  Sub,      // lhs - rhs
  Mul,      // lhs * rhs
  Div,      // lhs / rhs
  Pow,      // lhs ^ exponent (real constant exponent)
  Neg,      // -lhs
  Ln,       // ln(lhs)
  Exp,      // exp(lhs)
  Sqrt,     // sqrt(lhs)
  Abs,      // abs(lhs)
};

struct Node;
using Expr = std::shared_ptr<const Node>;

/// Immutable expression node.  `offset` is the byte position in the source
/// text for parsed nodes (used in evaluation diagnostics); synthesized nodes
/// (derivatives, substitutions) carry offset -1.
struct Node {
  NodeKind kind;
  double value = 0.0;    // Constant
  double exponent = 0.0; // Pow
  Expr lhs, rhs;
  std::int32_t offset = -1;
};

Expr constant(double v);
Expr variable();
Expr add(Expr l, Expr r);
Expr sub(Expr l, Expr r);
Expr mul(Expr l, Expr r);
Expr div(Expr l, Expr r);
Expr pow(Expr base, double exponent);
Expr neg(Expr e);
Expr ln(Expr e);
Expr exp(Expr e);
Expr sqrt(Expr e);
Expr abs(Expr e);

/// Parse the expression grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := "-" factor | base ("^" factor)?
///   base   := number | "x" | ident "(" expr ")" | "(" expr ")"
///   ident  := "ln" | "exp" | "sqrt" | "abs"
/// Power binds tightest and is right-associative.  The exponent must fold to
/// a constant (it may not contain x).  Throws ParseError with a byte offset.
Expr parse(std::string_view text);

/// Canonical text form; parse(to_string(e)) reproduces e.
std::string to_string(const Expr& e);

/// Exact symbolic derivative with light constant folding.
Expr differentiate(const Expr& e);

struct Dual {
  double value;
  double deriv;
};

/// Value and first derivative at x by dual-number propagation.
/// Throws EvalError naming the offending subexpression on domain errors.
Dual eval_dual(const Expr& e, double x);

/// Value only (cheaper; same domain checks).
double eval(const Expr& e, double x);

/// True when the expression does not reference x.
bool is_constant(const Expr& e);

/// Replace every occurrence of x with the given expression.
Expr substitute(const Expr& e, const Expr& replacement);

} // namespace hhv::expr

#endif
