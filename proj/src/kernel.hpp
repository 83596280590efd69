#ifndef HHV_KERNEL_HPP
#define HHV_KERNEL_HPP

#include <string>

namespace hhv::kernel {

/// Parameters of the master kernel K(alpha, beta, lambda) =
/// int_0^1 t^alpha (1-t)^beta e^{lambda t} dt with alpha, beta >= 0 and
/// |lambda| <= 700 (overflow guard for e^lambda).
struct KernelParams {
  double alpha;
  double beta;
  double lambda;
};

enum class Method { Series, Quadrature };

struct KernelValue {
  double value;
  Method method;
};

const char* method_name(Method m);

/// Evaluate the kernel.  Negative lambda is first mapped through the
/// reflection K(a,b,l) = e^l K(b,a,-l) so the series has positive terms;
/// |lambda| <= 30 uses the Beta-weighted exponential series, larger values
/// the adaptive quadrature.  The result is always positive.
KernelValue evaluate(const KernelParams& p);

/// One of the twelve coefficient integrals, all expressed through the
/// kernel with lambda = q ln(b/a):
///   c1 = K(1,s,l)    c2 = K(s+1,0,l)    c3 = K(1,s,-l)   c4 = K(s+1,0,-l)
///   c5 = K(1,0,l) - K(s+1,0,l)          c6 = K(1,0,-l) - K(s+1,0,-l)
///   c7 = K(0,s,l)    c8 = K(s,0,l)      c9 = K(0,s,-l)   c10 = K(s,0,-l)
///   c11 = K(0,0,l) - K(s,0,l)           c12 = K(0,0,-l) - K(s,0,-l)
struct CoefficientId {
  int index;  // 1..12
  double s;   // in (0, 1]
  double q;   // > 0
  double a;   // 0 < a < b
  double b;
};

KernelValue coefficient(const CoefficientId& id);

/// lambda = q ln(b/a) shared by the coefficient mapping.
double coefficient_lambda(double q, double a, double b);

} // namespace hhv::kernel

#endif
