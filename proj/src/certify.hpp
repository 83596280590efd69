#ifndef HHV_CERTIFY_HPP
#define HHV_CERTIFY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "functions.hpp"

namespace hhv::certify {

/// The convexity classes under test.  For the GA variants the input
/// combination is the weighted geometric mean x^t y^{1-t}; for the plain
/// variants it is the weighted arithmetic combination of Definitions 1-2.
enum class ClassKind {
  Convex,      // f(tx+(1-t)y)        <= t f(x) + (1-t) f(y)
  SFirst,      // f(ax+by), a^s+b^s=1 <= a^s f(x) + b^s f(y)
  SSecond,     // f(tx+(1-t)y)        <= t^s f(x) + (1-t)^s f(y)
  GA,          // f(x^t y^{1-t})      <= t f(x) + (1-t) f(y)
  GASFirst,    // f(x^t y^{1-t})      <= t^s f(x) + (1-t^s) f(y)
  GASSecond,   // f(x^t y^{1-t})      <= t^s f(x) + (1-t)^s f(y)
};

struct ConvexityClass {
  ClassKind kind;
  double s = 1.0; // in (0, 1]; ignored for Convex and GA
};

ConvexityClass class_from_name(std::string_view name, double s);
std::string class_name(const ConvexityClass& c);

struct SamplingPlan {
  unsigned grid = 64;           // grid*grid low-discrepancy (x, y) pairs
  unsigned t_steps = 33;        // equispaced t in [0, 1]
  unsigned randoms = 10000;     // uniform random (x, y, t) triples
  std::uint64_t seed = 0;
  double tolerance = 1e-10;     // margins below -tolerance are violations
};

enum class CertStatus { CertifiedEmpirically, Violated };

/// Result of empirical membership testing.  `witness` is present exactly
/// when the certificate is violated and holds the worst (x, y, t) triple.
struct Certificate {
  ConvexityClass cls;
  std::size_t samples = 0;
  double worst_margin = 0.0;
  std::optional<std::array<double, 3>> witness;
  CertStatus status = CertStatus::CertifiedEmpirically;

  bool certified() const { return status == CertStatus::CertifiedEmpirically; }
};

/// margin = RHS - f(combination) for one (x, y, t) triple.
double class_margin(const functions::FunctionSpec& f, const ConvexityClass& cls,
                    double x, double y, double t);

/// Scan margins over the sampling plan on [lo, hi] and certify when the
/// minimum stays above -tolerance.  Evaluation domain errors are rethrown
/// with the triple appended.
Certificate run(const functions::FunctionSpec& f, const ConvexityClass& cls,
                double lo, double hi, const SamplingPlan& plan = {});

} // namespace hhv::certify

#endif
