#ifndef HHV_FUNCTIONS_HPP
#define HHV_FUNCTIONS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "expr.hpp"

namespace hhv::functions {

/// A named function of one positive variable together with its machine-derived
/// first derivative and informal convexity-class claims.  The claims are
/// metadata; certification (certify.hpp) is the authoritative check.
struct FunctionSpec {
  std::string name;
  std::string source; // canonical expression text
  expr::Expr body;
  expr::Expr derivative;
  double domain_lo = 0.0;
  double domain_hi = 0.0;
  std::vector<std::string> claims;

  double value(double x) const { return expr::eval(body, x); }
  expr::Dual value_and_deriv(double x) const { return expr::eval_dual(body, x); }
};

/// Parse `text` and derive its first derivative.  The domain must satisfy
/// 0 <= lo < hi; integral and theorem operations additionally require lo > 0.
FunctionSpec make_function(std::string name, std::string_view text, double lo,
                           double hi, std::vector<std::string> claims = {});

/// Built-in test functions (linear, square, reciprocal, log, ...).
const std::vector<FunctionSpec>& catalog();
const FunctionSpec* find_in_catalog(std::string_view name);

/// f(x) = g(ln x) for g claimed s-convex in the second sense on [0, inf).
/// The result is claimed GA-s-convex in the second sense on [1, B] where
/// B = exp(g.domain_hi); domains extending below 1 are rejected.
FunctionSpec lift_second_sense(const FunctionSpec& g, double s);

/// x^alpha on [lo, hi] (alpha > 0), named "x^alpha".
FunctionSpec power_function(double alpha, double lo, double hi);

/// Constant function with value c.
FunctionSpec constant_function(double c, double lo, double hi);

/// ln(x)^s on [1, hi]; the standard second-sense lift of u^s.
FunctionSpec log_power_function(double s, double hi);

/// |f'|^q as a FunctionSpec (value-only use; its own derivative involves a
/// division by |f'| and is undefined at zeros of f').
FunctionSpec abs_deriv_power(const FunctionSpec& f, double q);

/// -f, used for concave-direction certification.
FunctionSpec negate(const FunctionSpec& f);

} // namespace hhv::functions

#endif
