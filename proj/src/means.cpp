#include "means.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "util.hpp"

namespace hhv::means {

namespace {

// Threshold on u = ln(b/a) below which the diagonal series is used for
// L and I.  Keeps relative error <= 1e-14 near a = b where the direct
// formulas cancel.
constexpr double kSeriesThreshold = 1e-4;

struct Ordered {
  double lo, hi; // 0 < lo <= hi
  double u;      // ln(hi/lo) >= 0
};

Ordered ordered(const MeanPair& p) {
  Ordered o;
  o.lo = std::min(p.a, p.b);
  o.hi = std::max(p.a, p.b);
  o.u = std::log1p((o.hi - o.lo) / o.lo);
  return o;
}

} // namespace

MeanPair::MeanPair(double a_, double b_) : a(a_), b(b_) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw InvalidArgument("mean pair requires finite positive a and b, got a=" +
                          shortest_double(a_) + " b=" + shortest_double(b_));
}

double geometric(const MeanPair& p) {
  double prod = p.a * p.b;
  if (std::isfinite(prod) && prod > 0.0) return std::sqrt(prod);
  return std::sqrt(p.a) * std::sqrt(p.b); // overflow/underflow fallback
}

double arithmetic(const MeanPair& p) { return 0.5 * (p.a + p.b); }

double logarithmic(const MeanPair& p) {
  if (p.a == p.b) return p.a;
  Ordered o = ordered(p);
  if (o.u < kSeriesThreshold) {
    // L = G * sinh(w)/w with w = u/2.
    double w = 0.5 * o.u, w2 = w * w;
    return geometric(p) * (1.0 + w2 / 6.0 * (1.0 + w2 / 20.0 * (1.0 + w2 / 42.0)));
  }
  return (o.hi - o.lo) / o.u;
}

double identric(const MeanPair& p) {
  if (p.a == p.b) return p.a;
  Ordered o = ordered(p);
  if (o.u < kSeriesThreshold) {
    // ln I = ln G + (w coth w - 1) = ln G + w^2/3 - w^4/45 + 2w^6/945 - ...
    double w = 0.5 * o.u, w2 = w * w;
    return geometric(p) * std::exp(w2 / 3.0 - w2 * w2 / 45.0 + 2.0 * w2 * w2 * w2 / 945.0);
  }
  double num = o.hi * std::log(o.hi) - o.lo * std::log(o.lo);
  return std::exp(num / (o.hi - o.lo) - 1.0);
}

double p_logarithmic(const MeanPair& pair, double p) {
  if (!std::isfinite(p) || p == -1.0 || p == 0.0)
    throw InvalidArgument(
        p == -1.0 ? "p = -1 is excluded; that limit is the logarithmic mean"
        : p == 0.0 ? "p = 0 is excluded; that limit is the identric mean"
                   : "p-logarithmic mean requires a finite exponent");
  if (pair.a == pair.b) return pair.a;
  Ordered o = ordered(pair);
  // ln L_p = (1/p) [ (p+1) ln lo + ln|expm1(w)| - ln|(p+1)(hi-lo)| ],
  // w = (p+1) u; the two signed factors are negative together when p < -1.
  double w = (p + 1.0) * o.u;
  double log_num; // ln |lo^{p+1} (e^w - 1)|
  if (w > 0.0) {
    log_num = w > 700.0 ? w + std::log1p(-std::exp(-w)) : std::log(std::expm1(w));
  } else {
    log_num = std::log1p(-std::exp(w)); // ln(1 - e^w), w < 0
  }
  log_num += (p + 1.0) * std::log(o.lo);
  double log_den = std::log(std::fabs(p + 1.0) * (o.hi - o.lo));
  return std::exp((log_num - log_den) / p);
}

ChainReport mean_chain(const MeanPair& p) {
  if (p.a == p.b)
    throw InvalidArgument("mean chain requires a != b");
  ChainReport r;
  r.min = std::min(p.a, p.b);
  r.max = std::max(p.a, p.b);
  r.g = geometric(p);
  r.l = logarithmic(p);
  r.i = identric(p);
  r.a = arithmetic(p);
  r.strict = r.min < r.g && r.g < r.l && r.l < r.i && r.i < r.a && r.a < r.max;
  return r;
}

} // namespace hhv::means
