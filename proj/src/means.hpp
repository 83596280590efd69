#ifndef HHV_MEANS_HPP
#define HHV_MEANS_HPP

#include <array>

namespace hhv::means {

/// A pair of positive reals.  Construction validates positivity; operations
/// that additionally require a != b or a < b check that themselves.
struct MeanPair {
  double a;
  double b;
  MeanPair(double a_, double b_);
};

double geometric(const MeanPair& p);
double arithmetic(const MeanPair& p);

/// (b - a) / (ln b - ln a), continuously extended with L(a,a) = a.  Switches
/// to a series in u = ln(b/a) near the diagonal to avoid 0/0 cancellation.
double logarithmic(const MeanPair& p);

/// exp((b ln b - a ln a)/(b - a) - 1), extended with I(a,a) = a.  Evaluated
/// in log space so b^b never overflows.
double identric(const MeanPair& p);

/// ((b^{p+1} - a^{p+1}) / ((p+1)(b-a)))^{1/p} for p not in {-1, 0}.
/// The limits p -> -1 and p -> 0 are the logarithmic and identric means;
/// those values are exposed as the dedicated calls, not silently here.
double p_logarithmic(const MeanPair& pair, double p);

/// All five chain members for a != b, ordered min < G < L < I < A < max.
struct ChainReport {
  double min, g, l, i, a, max;
  bool strict; // true when the computed values are strictly increasing
  std::array<double, 6> values() const { return {min, g, l, i, a, max}; }
};

ChainReport mean_chain(const MeanPair& p);

} // namespace hhv::means

#endif
