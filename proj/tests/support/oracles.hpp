#ifndef HHV_TESTS_ORACLES_HPP
#define HHV_TESTS_ORACLES_HPP

// Independent oracles used by the unit and acceptance suites.  These
// deliberately share no code with the library's evaluation paths.

#include <cmath>
#include <cstdint>
#include <functional>

namespace oracles {

// Composite Simpson with n subintervals (n forced even), Kahan-summed.
inline double simpson(const std::function<double(double)>& f, double lo, double hi,
                      std::int64_t n) {
  if (n % 2) ++n;
  double h = (hi - lo) / static_cast<double>(n);
  double sum = 0.0, c = 0.0;
  auto accumulate = [&](double term) {
    double y = term - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  };
  accumulate(f(lo));
  accumulate(f(hi));
  for (std::int64_t i = 1; i < n; ++i)
    accumulate((i % 2 ? 4.0 : 2.0) * f(lo + h * static_cast<double>(i)));
  return sum * h / 3.0;
}

// Brute-force Simpson on [0, 1] for integrands with algebraic endpoint
// behavior (t^s, (1-t)^s with s >= 1/4): each half is mapped through a
// quartic substitution (t = u^4/2 on the left, t = 1 - v^4/2 on the right)
// that makes the integrand smooth, then composite Simpson is applied with
// one million panels total.
inline double substituted_simpson(const std::function<double(double)>& g,
                                  std::int64_t panels_per_half = 500000) {
  auto left = [&](double u) {
    double u3 = u * u * u;
    return g(0.5 * u3 * u) * 2.0 * u3;
  };
  auto right = [&](double v) {
    double v3 = v * v * v;
    return g(1.0 - 0.5 * v3 * v) * 2.0 * v3;
  };
  std::int64_t n = 2 * panels_per_half; // subintervals per half
  return simpson(left, 0.0, 1.0, n) + simpson(right, 0.0, 1.0, n);
}

inline double endpoint_power(double base, double e) {
  if (base <= 0.0) return e == 0.0 ? 1.0 : 0.0;
  return std::pow(base, e);
}

// K(alpha,beta,lambda) = int_0^1 t^alpha (1-t)^beta e^{lambda t} dt.
inline double kernel_simpson(double alpha, double beta, double lambda,
                             std::int64_t panels_per_half = 500000) {
  return substituted_simpson(
      [&](double t) {
        return endpoint_power(t, alpha) * endpoint_power(1.0 - t, beta) *
               std::exp(lambda * t);
      },
      panels_per_half);
}

// The defining integrands of the twelve coefficient integrals, without going
// through the kernel mapping; lambda = q ln(b/a).
inline double coefficient_simpson(int index, double s, double q, double a, double b,
                                  std::int64_t panels_per_half = 500000) {
  double lambda = q * std::log(b / a);
  auto g = [&](double t) -> double {
    double w = std::exp(lambda * t);    // (b/a)^{qt}
    double wm = std::exp(-lambda * t);  // (a/b)^{qt}
    switch (index) {
      case 1: return t * endpoint_power(1 - t, s) * w;
      case 2: return endpoint_power(t, s + 1) * w;
      case 3: return t * endpoint_power(1 - t, s) * wm;
      case 4: return endpoint_power(t, s + 1) * wm;
      case 5: return t * (1 - endpoint_power(t, s)) * w;
      case 6: return t * (1 - endpoint_power(t, s)) * wm;
      case 7: return endpoint_power(1 - t, s) * w;
      case 8: return endpoint_power(t, s) * w;
      case 9: return endpoint_power(1 - t, s) * wm;
      case 10: return endpoint_power(t, s) * wm;
      case 11: return (1 - endpoint_power(t, s)) * w;
      default: return (1 - endpoint_power(t, s)) * wm;
    }
  };
  return substituted_simpson(g, panels_per_half);
}

// Central finite difference.
inline double central_diff(const std::function<double(double)>& f, double x,
                           double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

} // namespace oracles

#endif
