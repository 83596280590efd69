#ifndef HHV_QUADRATURE_HPP
#define HHV_QUADRATURE_HPP

#include <functional>

namespace hhv::quadrature {

/// Integral value with an a-posteriori error bound from the adaptive scheme.
/// Consumers treat results whose error_estimate exceeds a tenth of their own
/// tolerance as inconclusive.
struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
  bool converged = false;
};

struct Tolerance {
  double absolute = 1e-12;
  double relative = 1e-13;
};

/// Maximum number of leaf panels before the scheme gives up.
inline constexpr int kPanelBudget = 1 << 14;

/// Adaptive integration of f over [lo, hi]: 15-point Gauss-Kronrod per
/// panel, bisection of the panel with the largest error indicator until
/// the summed indicators fall below max(tol.absolute, tol.relative*|I|).
/// The returned value is accumulated in a deterministic order (panels
/// sorted by position), so results do not depend on refinement schedule.
QuadResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     Tolerance tol = {});

} // namespace hhv::quadrature

#endif
