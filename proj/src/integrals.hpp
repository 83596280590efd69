#ifndef HHV_INTEGRALS_HPP
#define HHV_INTEGRALS_HPP

#include "functions.hpp"
#include "quadrature.hpp"

namespace hhv::integrals {

using quadrature::QuadResult;

/// Geometric-mean-weighted average: (1/(ln b - ln a)) int_a^b f(x)/x dx,
/// computed on the substitution x = a^{1-t} b^t as int_0^1 f(a^{1-t} b^t) dt.
QuadResult gm_average(const functions::FunctionSpec& f, double a, double b);

/// Arithmetic average: (1/(b-a)) int_a^b f(x) dx.
QuadResult am_average(const functions::FunctionSpec& f, double a, double b);

/// int_a^b f(x) dx (un-normalized).
QuadResult integral(const functions::FunctionSpec& f, double a, double b);

enum class IdentityKind { Zhang, IscanMidpoint, IscanTrapezoid };

IdentityKind identity_from_name(std::string_view name);
const char* identity_name(IdentityKind k);

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;   // |lhs - rhs|
  double quad_error = 0.0; // summed error estimates of all quadratures used
  bool converged = true;
};

/// Evaluate both sides of one of the three integral identities with
/// independent adaptive quadratures:
///   Zhang:      b f(b) - a f(a) - int_a^b f
///               = (ln b - ln a) int_0^1 (b^t a^{1-t})^2 f'(b^t a^{1-t}) dt
///   midpoint:   f(sqrt(ab)) - gm_average(f)
///               = (ln(b/a)/4) [ a int t (b/a)^{t/2} f'(a^{1-t}(ab)^{t/2}) dt
///                             - b int t (a/b)^{t/2} f'(b^{1-t}(ab)^{t/2}) dt ]
///   trapezoid:  (f(a)+f(b))/2 - gm_average(f)
///               = (ln(b/a)/2) [ a int t (b/a)^t f'(a^{1-t} b^t) dt
///                             - b int t (a/b)^t f'(b^{1-t} a^t) dt ]
IdentityCheck identity_residual(IdentityKind kind, const functions::FunctionSpec& f,
                                double a, double b);

/// Shared validation: 0 < a < b and f differentiable metadata present.
void require_interval(double a, double b);

} // namespace hhv::integrals

#endif
