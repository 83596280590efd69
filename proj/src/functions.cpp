#include "functions.hpp"

#include <cmath>

#include "errors.hpp"
#include "util.hpp"

namespace hhv::functions {

FunctionSpec make_function(std::string name, std::string_view text, double lo,
                           double hi, std::vector<std::string> claims) {
  if (!(lo >= 0.0) || !(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi))
    throw InvalidArgument("function domain requires 0 <= lo < hi, got [" +
                          shortest_double(lo) + ", " + shortest_double(hi) + "]");
  FunctionSpec f;
  f.body = expr::parse(text);
  f.derivative = expr::differentiate(f.body);
  f.source = expr::to_string(f.body);
  f.name = name.empty() ? f.source : std::move(name);
  f.domain_lo = lo;
  f.domain_hi = hi;
  f.claims = std::move(claims);
  return f;
}

const std::vector<FunctionSpec>& catalog() {
  static const std::vector<FunctionSpec> entries = [] {
    std::vector<FunctionSpec> v;
    v.push_back(make_function("one", "1", 1e-9, 1e6,
                              {"convex", "s-second", "GA", "GA-s-first", "GA-s-second"}));
    v.push_back(make_function("linear", "x", 1e-9, 1e6,
                              {"convex", "s-second", "GA", "GA-s-first", "GA-s-second"}));
    v.push_back(make_function("square", "x^2", 1e-9, 1e6,
                              {"convex", "s-second", "GA", "GA-s-first", "GA-s-second"}));
    v.push_back(make_function("power_3_2", "x^1.5", 1e-9, 1e6,
                              {"convex", "GA", "GA-s-first", "GA-s-second"}));
    v.push_back(make_function("sqrt", "sqrt(x)", 1e-9, 1e6,
                              {"GA", "GA-s-first", "GA-s-second"}));
    v.push_back(make_function("reciprocal", "1/x", 1e-9, 1e6, {"convex", "GA"}));
    v.push_back(make_function("log", "ln(x)", 1e-9, 1e6, {"GA", "GA-concave"}));
    v.push_back(make_function("exp_half", "exp(x/2)", 1e-9, 1e6, {"convex", "GA"}));
    v.push_back(make_function("neg_linear", "-x", 1e-9, 1e6, {"GA-concave"}));
    return v;
  }();
  return entries;
}

const FunctionSpec* find_in_catalog(std::string_view name) {
  for (const FunctionSpec& f : catalog())
    if (f.name == name) return &f;
  return nullptr;
}

FunctionSpec lift_second_sense(const FunctionSpec& g, double s) {
  if (!(s > 0.0 && s <= 1.0))
    throw InvalidArgument("lift requires s in (0, 1]");
  double lo = std::exp(g.domain_lo);
  if (lo < 1.0)
    throw InvalidArgument("lifted domain must not extend below 1");
  FunctionSpec f;
  f.body = expr::substitute(g.body, expr::ln(expr::variable()));
  f.derivative = expr::differentiate(f.body);
  f.source = expr::to_string(f.body);
  f.name = g.name + "_lifted";
  f.domain_lo = lo;
  f.domain_hi = std::exp(g.domain_hi);
  f.claims = {s == 1.0 ? std::string("GA")
                       : "GA-s-second (s=" + shortest_double(s) + ")"};
  return f;
}

FunctionSpec power_function(double alpha, double lo, double hi) {
  if (!(alpha > 0.0)) throw InvalidArgument("power function requires alpha > 0");
  return make_function("x^" + shortest_double(alpha), "x^" + shortest_double(alpha),
                       lo, hi, {"GA", "GA-s-first", "GA-s-second"});
}

FunctionSpec constant_function(double c, double lo, double hi) {
  return make_function("const_" + shortest_double(c), shortest_double(c), lo, hi,
                       {"convex", "s-second", "GA", "GA-s-first", "GA-s-second"});
}

FunctionSpec log_power_function(double s, double hi) {
  if (!(s > 0.0 && s <= 1.0))
    throw InvalidArgument("log power function requires s in (0, 1]");
  FunctionSpec g = make_function("u^s", "x^" + shortest_double(s), 0.0, std::log(hi),
                                 {"s-second"});
  return lift_second_sense(g, s);
}

FunctionSpec abs_deriv_power(const FunctionSpec& f, double q) {
  if (!(q > 0.0)) throw InvalidArgument("|f'|^q requires q > 0");
  FunctionSpec g;
  g.body = expr::pow(expr::abs(f.derivative), q);
  g.derivative = expr::differentiate(g.body);
  g.source = expr::to_string(g.body);
  g.name = "|" + f.name + "'|^" + shortest_double(q);
  g.domain_lo = f.domain_lo;
  g.domain_hi = f.domain_hi;
  return g;
}

FunctionSpec negate(const FunctionSpec& f) {
  FunctionSpec g;
  g.body = expr::neg(f.body);
  g.derivative = expr::differentiate(g.body);
  g.source = expr::to_string(g.body);
  g.name = "-" + f.name;
  g.domain_lo = f.domain_lo;
  g.domain_hi = f.domain_hi;
  return g;
}

} // namespace hhv::functions
