#ifndef HHV_THEOREMS_HPP
#define HHV_THEOREMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "certify.hpp"
#include "functions.hpp"

namespace hhv::theorems {

enum class Status { Holds, Violated, Inconclusive };
enum class Sense { First, Second };
enum class Target { Trapezoid, Midpoint };
enum class ZhangVariant { PowerMean, Hoelder, TwoParam };
enum class Direction { Convex, Concave };

const char* status_name(Status s);
const char* sense_name(Sense s);
const char* target_name(Target t);

struct NamedValue {
  std::string name;
  double value;
};

struct Options {
  double tol = 1e-9; // margins below -tol classify as violated
  std::optional<bool> hypothesis_certified;
};

/// One verified inequality instance: every side evaluated, signed margins
/// (bound minus bounded quantity), and a holds/violated/inconclusive status.
/// A record is inconclusive when the summed quadrature error estimates
/// exceed tol/10.
struct VerificationRecord {
  std::string theorem_id;
  std::string f_name;
  std::string f_source;
  double a = 0.0, b = 0.0;
  std::optional<double> s, q, p;
  std::optional<std::string> sense, target, direction;
  std::vector<NamedValue> sides;
  std::vector<NamedValue> margins;
  Status status = Status::Holds;
  double quad_error = 0.0;
  double tolerance = 1e-9;
  std::optional<bool> hypothesis_certified;

  double worst_margin() const;
};

/// 2^{s-1} f((a+b)/2) <= (1/(b-a)) int f <= (f(a)+f(b))/(s+1).
VerificationRecord hh_s_convex(const functions::FunctionSpec& f, double a, double b,
                               double s, const Options& opt = {});

/// First sense:  f(sqrt(ab)) <= gm_average(f) <= (f(a)+s f(b))/(s+1).
/// Second sense: 2^{s-1} f(sqrt(ab)) <= gm_average(f) <= (f(a)+f(b))/(s+1).
VerificationRecord ga_s_hh(const functions::FunctionSpec& f, double a, double b,
                           double s, Sense sense, const Options& opt = {});

/// |b f(b) - a f(a) - int f| bounded through L-mean combinations of
/// |f'(a)|^q, |f'(b)|^q.  PowerMean needs q >= 1, Hoelder q > 1,
/// TwoParam q > 1 and 0 < p < 2q.
VerificationRecord zhang_bounds(const functions::FunctionSpec& f, double a, double b,
                                double q, ZhangVariant variant, double p = 0.0,
                                const Options& opt = {});

/// f(I(a,b)) <= am_average(f) <= ((b-L) f(b) + (L-a) f(a))/(b-a),
/// reversed for the concave direction.
VerificationRecord zcz_bound(const functions::FunctionSpec& f, double a, double b,
                             Direction direction, const Options& opt = {});

/// Trapezoid/midpoint gap bounds assembled from coefficients c1..c6 with the
/// power-mean prefactor (1/2)^{2-1/q} or (1/2)^{3-1/q}; midpoint uses
/// coefficient arguments (s, q/2).  Requires q >= 1.
VerificationRecord thm21(const functions::FunctionSpec& f, double a, double b,
                         double s, double q, Sense sense, Target target,
                         const Options& opt = {});

/// Same gaps bounded through c7..c12 with the Hoelder prefactor
/// ((q-1)/(2q-1))^{1-1/q}; requires q > 1.
VerificationRecord thm22(const functions::FunctionSpec& f, double a, double b,
                         double s, double q, Sense sense, Target target,
                         const Options& opt = {});

/// Special-means bounds on |A-L| and |G-L| (f(x) = x specialization).
/// which = 1 needs q >= 1; which = 2 needs q > 1 and b <= 1.
VerificationRecord prop_means(double a, double b, double q, int which,
                              const Options& opt = {});

/// Assembled right-hand sides, exposed for specialization checks.
double thm21_rhs(const functions::FunctionSpec& f, double a, double b, double s,
                 double q, Sense sense, Target target);
double thm22_rhs(const functions::FunctionSpec& f, double a, double b, double s,
                 double q, Sense sense, Target target);

/// Corollary right-hand sides evaluated from their printed formulas.
double corollary_s1_rhs_thm21(const functions::FunctionSpec& f, double a, double b,
                              double q, Target target);
double corollary_s1_rhs_thm22(const functions::FunctionSpec& f, double a, double b,
                              double q, Target target);
double corollary_q1_rhs(const functions::FunctionSpec& f, double a, double b,
                        double s, Sense sense, Target target);

/// Compare the theorem bounds specialized at s=1 / q=1 against the printed
/// corollary formulas; agreement is required to relative 1e-12.
struct ConsistencyRow {
  std::string name;
  double theorem_value;
  double corollary_value;
  double rel_diff;
};

struct ConsistencyReport {
  std::vector<ConsistencyRow> rows;
  bool ok = true;
  double worst_rel_diff = 0.0;
};

ConsistencyReport corollary_consistency(const functions::FunctionSpec& f, double a,
                                        double b, double q, double s,
                                        double rel_tol = 1e-12);

/// A single verification request as it arrives from the CLI or a scan grid:
/// theorem id plus parameters.  `run` validates preconditions, certifies the
/// hypothesis class when asked, evaluates, and stamps the record.
struct Request {
  std::string theorem; // hh-s zhang-pm zhang-hoelder zhang-2p zcz ga-s-hh
                       // thm21 thm22 prop1 prop2
  const functions::FunctionSpec* f = nullptr;
  double a = 0.0, b = 0.0;
  std::optional<double> s, q, p;
  std::optional<Sense> sense;
  std::optional<Target> target;
  std::optional<Direction> direction;
  double tol = 1e-9;
  bool certify_hypothesis = true;
  certify::SamplingPlan plan;
};

VerificationRecord run(const Request& req);

/// The convexity class a theorem assumes of its hypothesis function, and the
/// hypothesis function itself (f, |f'|^q, or -f).  Exposed for reporting.
struct Hypothesis {
  functions::FunctionSpec function;
  certify::ConvexityClass cls;
  bool trivially_true = false; // props: |f'|^q of f(x)=x is constant
};

Hypothesis hypothesis_for(const Request& req);

} // namespace hhv::theorems

#endif
