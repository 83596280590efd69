#include "theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "integrals.hpp"
#include "kernel.hpp"
#include "means.hpp"
#include "util.hpp"

namespace hhv::theorems {

namespace {

using functions::FunctionSpec;
using integrals::QuadResult;

constexpr double kLambdaGuard = 700.0;

double abs_deriv_pow(const FunctionSpec& f, double x, double q) {
  return std::pow(std::fabs(expr::eval_dual(f.body, x).deriv), q);
}

void require_s(double s) {
  if (!(s > 0.0 && s <= 1.0))
    throw InvalidArgument("requires s in (0, 1], got s=" + shortest_double(s));
}

void check_lambda_guard(double q, double a, double b) {
  if (q * std::log(b / a) > kLambdaGuard)
    throw InvalidArgument("b/a too large for the coefficient integrals: requires "
                          "q ln(b/a) <= " + shortest_double(kLambdaGuard));
}

struct RecordBuilder {
  VerificationRecord rec;

  RecordBuilder(std::string id, const Options& opt) {
    rec.theorem_id = std::move(id);
    rec.tolerance = opt.tol;
    rec.hypothesis_certified = opt.hypothesis_certified;
  }

  void function(const FunctionSpec& f) {
    rec.f_name = f.name;
    rec.f_source = f.source;
  }

  double quad(const QuadResult& r) {
    rec.quad_error += r.error_estimate;
    return r.value;
  }

  void side(std::string name, double v) { rec.sides.push_back({std::move(name), v}); }
  void margin(std::string name, double v) { rec.margins.push_back({std::move(name), v}); }

  VerificationRecord finish() {
    if (rec.quad_error > rec.tolerance / 10.0) {
      rec.status = Status::Inconclusive;
    } else {
      rec.status = Status::Holds;
      for (const NamedValue& m : rec.margins)
        if (!(m.value >= -rec.tolerance)) rec.status = Status::Violated;
    }
    return std::move(rec);
  }
};

} // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Violated: return "violated";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* sense_name(Sense s) { return s == Sense::First ? "first" : "second"; }
const char* target_name(Target t) {
  return t == Target::Trapezoid ? "trapezoid" : "midpoint";
}

double VerificationRecord::worst_margin() const {
  double worst = std::numeric_limits<double>::infinity();
  for (const NamedValue& m : margins) worst = std::min(worst, m.value);
  return worst;
}

VerificationRecord hh_s_convex(const FunctionSpec& f, double a, double b, double s,
                               const Options& opt) {
  integrals::require_interval(a, b);
  require_s(s);
  RecordBuilder rb("hh-s", opt);
  rb.function(f);
  rb.rec.a = a;
  rb.rec.b = b;
  rb.rec.s = s;

  double lhs = std::pow(2.0, s - 1.0) * f.value(0.5 * (a + b));
  double middle = rb.quad(integrals::am_average(f, a, b));
  double rhs = (f.value(a) + f.value(b)) / (s + 1.0);
  rb.side("lhs", lhs);
  rb.side("middle", middle);
  rb.side("rhs", rhs);
  rb.margin("lower", middle - lhs);
  rb.margin("upper", rhs - middle);
  return rb.finish();
}

VerificationRecord ga_s_hh(const FunctionSpec& f, double a, double b, double s,
                           Sense sense, const Options& opt) {
  integrals::require_interval(a, b);
  require_s(s);
  RecordBuilder rb("ga-s-hh", opt);
  rb.function(f);
  rb.rec.a = a;
  rb.rec.b = b;
  rb.rec.s = s;
  rb.rec.sense = sense_name(sense);

  double fg = f.value(std::sqrt(a * b));
  double lhs = sense == Sense::First ? fg : std::pow(2.0, s - 1.0) * fg;
  double middle = rb.quad(integrals::gm_average(f, a, b));
  double rhs = sense == Sense::First ? (f.value(a) + s * f.value(b)) / (s + 1.0)
                                     : (f.value(a) + f.value(b)) / (s + 1.0);
  rb.side("lhs", lhs);
  rb.side("middle", middle);
  rb.side("rhs", rhs);
  rb.margin("lower", middle - lhs);
  rb.margin("upper", rhs - middle);
  return rb.finish();
}

VerificationRecord zhang_bounds(const FunctionSpec& f, double a, double b, double q,
                                ZhangVariant variant, double p, const Options& opt) {
  integrals::require_interval(a, b);
  switch (variant) {
    case ZhangVariant::PowerMean:
      if (!(q >= 1.0)) throw InvalidArgument("power-mean variant requires q >= 1");
      break;
    case ZhangVariant::Hoelder:
      if (!(q > 1.0)) throw InvalidArgument("Hoelder variant requires q > 1");
      break;
    case ZhangVariant::TwoParam:
      if (!(q > 1.0) || !(p > 0.0 && p < 2.0 * q))
        throw InvalidArgument("two-parameter variant requires q > 1 and 0 < p < 2q");
      break;
  }

  const char* id = variant == ZhangVariant::PowerMean  ? "zhang-pm"
                   : variant == ZhangVariant::Hoelder  ? "zhang-hoelder"
                                                       : "zhang-2p";
  RecordBuilder rb(id, opt);
  rb.function(f);
  rb.rec.a = a;
  rb.rec.b = b;
  rb.rec.q = q;
  if (variant == ZhangVariant::TwoParam) rb.rec.p = p;

  double lhs = std::fabs(b * f.value(b) - a * f.value(a) -
                         rb.quad(integrals::integral(f, a, b)));
  double fa_q = abs_deriv_pow(f, a, q);
  double fb_q = abs_deriv_pow(f, b, q);
  double u = std::log(b / a);

  double rhs = 0.0;
  switch (variant) {
    case ZhangVariant::PowerMean: {
      double l2 = means::logarithmic({a * a, b * b});
      rhs = std::pow((b - a) * means::arithmetic({a, b}), 1.0 - 1.0 / q) /
            std::pow(2.0, 1.0 / q) *
            std::pow((l2 - a * a) * fa_q + (b * b - l2) * fb_q, 1.0 / q);
      break;
    }
    case ZhangVariant::Hoelder: {
      // Hoelder applied to the Zhang identity gives
      //   |...| <= u [int (a^{1-t}b^t)^{2q/(q-1)} dt]^{1-1/q} [A(|f'|^q)]^{1/q}
      // and the first integral is exactly L(a^r, b^r) with r = 2q/(q-1).
      double r = 2.0 * q / (q - 1.0);
      double lr = means::logarithmic({std::pow(a, r), std::pow(b, r)});
      rhs = u * std::pow(lr, 1.0 - 1.0 / q) *
            std::pow(means::arithmetic({fa_q, fb_q}), 1.0 / q);
      break;
    }
    case ZhangVariant::TwoParam: {
      double r = (2.0 * q - p) / (q - 1.0);
      double lr = means::logarithmic({std::pow(a, r), std::pow(b, r)});
      double lp = means::logarithmic({std::pow(a, p), std::pow(b, p)});
      rhs = std::pow(u, 1.0 - 1.0 / q) / std::pow(p, 1.0 / q) *
            std::pow(lr, 1.0 - 1.0 / q) *
            std::pow((lp - std::pow(a, p)) * fa_q + (std::pow(b, p) - lp) * fb_q,
                     1.0 / q);
      break;
    }
  }
  rb.side("lhs", lhs);
  rb.side("rhs", rhs);
  rb.margin("margin", rhs - lhs);
  return rb.finish();
}

VerificationRecord zcz_bound(const FunctionSpec& f, double a, double b,
                             Direction direction, const Options& opt) {
  integrals::require_interval(a, b);
  RecordBuilder rb("zcz", opt);
  rb.function(f);
  rb.rec.a = a;
  rb.rec.b = b;
  rb.rec.direction = direction == Direction::Convex ? "convex" : "concave";

  double i_mean = means::identric({a, b});
  double l_mean = means::logarithmic({a, b});
  double lhs = f.value(i_mean);
  double middle = rb.quad(integrals::am_average(f, a, b));
  double rhs = ((b - l_mean) * f.value(b) + (l_mean - a) * f.value(a)) / (b - a);
  rb.side("lhs", lhs);
  rb.side("middle", middle);
  rb.side("rhs", rhs);
  if (direction == Direction::Convex) {
    rb.margin("lower", middle - lhs);
    rb.margin("upper", rhs - middle);
  } else {
    rb.margin("lower", lhs - middle);
    rb.margin("upper", middle - rhs);
  }
  return rb.finish();
}

namespace {

double coeff(int index, double s, double q, double a, double b) {
  return kernel::coefficient({index, s, q, a, b}).value;
}

// Shared assembly for the thm21/thm22 bounds: prefactor * [a Sa^{1/q} + b Sb^{1/q}].
double assemble_bound(double prefactor, double a, double sa, double b, double sb,
                      double q) {
  return prefactor * (a * std::pow(sa, 1.0 / q) + b * std::pow(sb, 1.0 / q));
}

} // namespace

double thm21_rhs(const FunctionSpec& f, double a, double b, double s, double q,
                 Sense sense, Target target) {
  double u = std::log(b / a);
  double fa_q = abs_deriv_pow(f, a, q);
  double fb_q = abs_deriv_pow(f, b, q);
  double qq = target == Target::Midpoint ? q / 2.0 : q;
  double expo = target == Target::Midpoint ? 3.0 - 1.0 / q : 2.0 - 1.0 / q;
  double prefactor = u * std::pow(0.5, expo);

  double sa, sb;
  if (target == Target::Trapezoid) {
    if (sense == Sense::Second) {
      sa = coeff(1, s, qq, a, b) * fa_q + coeff(2, s, qq, a, b) * fb_q;
      sb = coeff(3, s, qq, a, b) * fb_q + coeff(4, s, qq, a, b) * fa_q;
    } else {
      sa = coeff(5, s, qq, a, b) * fa_q + coeff(2, s, qq, a, b) * fb_q;
      sb = coeff(6, s, qq, a, b) * fb_q + coeff(4, s, qq, a, b) * fa_q;
    }
  } else {
    double fg_q = abs_deriv_pow(f, std::sqrt(a * b), q);
    if (sense == Sense::Second) {
      sa = coeff(1, s, qq, a, b) * fa_q + coeff(2, s, qq, a, b) * fg_q;
      sb = coeff(3, s, qq, a, b) * fb_q + coeff(4, s, qq, a, b) * fg_q;
    } else {
      sa = coeff(5, s, qq, a, b) * fa_q + coeff(2, s, qq, a, b) * fg_q;
      sb = coeff(6, s, qq, a, b) * fb_q + coeff(4, s, qq, a, b) * fg_q;
    }
  }
  return assemble_bound(prefactor, a, sa, b, sb, q);
}

double thm22_rhs(const FunctionSpec& f, double a, double b, double s, double q,
                 Sense sense, Target target) {
  double u = std::log(b / a);
  double fa_q = abs_deriv_pow(f, a, q);
  double fb_q = abs_deriv_pow(f, b, q);
  double qq = target == Target::Midpoint ? q / 2.0 : q;
  double prefactor = (target == Target::Midpoint ? u / 4.0 : u / 2.0) *
                     std::pow((q - 1.0) / (2.0 * q - 1.0), 1.0 - 1.0 / q);

  double sa, sb;
  if (target == Target::Trapezoid) {
    if (sense == Sense::Second) {
      sa = coeff(7, s, qq, a, b) * fa_q + coeff(8, s, qq, a, b) * fb_q;
      sb = coeff(9, s, qq, a, b) * fb_q + coeff(10, s, qq, a, b) * fa_q;
    } else {
      sa = coeff(11, s, qq, a, b) * fa_q + coeff(8, s, qq, a, b) * fb_q;
      sb = coeff(12, s, qq, a, b) * fb_q + coeff(10, s, qq, a, b) * fa_q;
    }
  } else {
    double fg_q = abs_deriv_pow(f, std::sqrt(a * b), q);
    if (sense == Sense::Second) {
      sa = coeff(7, s, qq, a, b) * fa_q + coeff(8, s, qq, a, b) * fg_q;
      sb = coeff(9, s, qq, a, b) * fb_q + coeff(10, s, qq, a, b) * fg_q;
    } else {
      sa = coeff(11, s, qq, a, b) * fa_q + coeff(8, s, qq, a, b) * fg_q;
      sb = coeff(12, s, qq, a, b) * fb_q + coeff(10, s, qq, a, b) * fg_q;
    }
  }
  return assemble_bound(prefactor, a, sa, b, sb, q);
}

namespace {

VerificationRecord gap_bound_record(const char* id, const FunctionSpec& f, double a,
                                    double b, double s, double q, Sense sense,
                                    Target target, double rhs, const Options& opt) {
  RecordBuilder rb(id, opt);
  rb.function(f);
  rb.rec.a = a;
  rb.rec.b = b;
  rb.rec.s = s;
  rb.rec.q = q;
  rb.rec.sense = sense_name(sense);
  rb.rec.target = target_name(target);

  double gm = rb.quad(integrals::gm_average(f, a, b));
  double lhs = target == Target::Trapezoid
                   ? std::fabs(0.5 * (f.value(a) + f.value(b)) - gm)
                   : std::fabs(f.value(std::sqrt(a * b)) - gm);
  rb.side("lhs", lhs);
  rb.side("rhs", rhs);
  rb.margin("margin", rhs - lhs);
  return rb.finish();
}

} // namespace

VerificationRecord thm21(const FunctionSpec& f, double a, double b, double s,
                         double q, Sense sense, Target target, const Options& opt) {
  integrals::require_interval(a, b);
  require_s(s);
  if (!(q >= 1.0)) throw InvalidArgument("thm21 requires q >= 1");
  check_lambda_guard(q, a, b);
  double rhs = thm21_rhs(f, a, b, s, q, sense, target);
  return gap_bound_record("thm21", f, a, b, s, q, sense, target, rhs, opt);
}

VerificationRecord thm22(const FunctionSpec& f, double a, double b, double s,
                         double q, Sense sense, Target target, const Options& opt) {
  integrals::require_interval(a, b);
  require_s(s);
  if (!(q > 1.0)) throw InvalidArgument("thm22 requires q > 1");
  check_lambda_guard(q, a, b);
  double rhs = thm22_rhs(f, a, b, s, q, sense, target);
  return gap_bound_record("thm22", f, a, b, s, q, sense, target, rhs, opt);
}

VerificationRecord prop_means(double a, double b, double q, int which,
                              const Options& opt) {
  integrals::require_interval(a, b);
  if (which == 1) {
    if (!(q >= 1.0)) throw InvalidArgument("prop1 requires q >= 1");
  } else if (which == 2) {
    if (!(q > 1.0)) throw InvalidArgument("prop2 requires q > 1");
    if (!(b <= 1.0)) throw InvalidArgument("prop2 requires b <= 1");
  } else {
    throw InvalidArgument("proposition index must be 1 or 2");
  }

  RecordBuilder rb(which == 1 ? "prop1" : "prop2", opt);
  rb.rec.f_name = "linear";
  rb.rec.f_source = "x";
  rb.rec.a = a;
  rb.rec.b = b;
  rb.rec.q = q;
  rb.rec.hypothesis_certified = opt.hypothesis_certified.value_or(true);

  double u = std::log(b / a);
  double am_gap = std::fabs(means::arithmetic({a, b}) - means::logarithmic({a, b}));
  double gm_gap = std::fabs(means::geometric({a, b}) - means::logarithmic({a, b}));
  double rhs_am, rhs_gm;
  if (which == 1) {
    double lq = means::logarithmic({std::pow(a, q), std::pow(b, q)});
    rhs_am = std::pow(u, 1.0 - 1.0 / q) * std::pow(0.5, 2.0 - 1.0 / q) *
             std::pow(1.0 / q, 1.0 / q) *
             (std::pow(std::pow(b, q) - lq, 1.0 / q) +
              std::pow(lq - std::pow(a, q), 1.0 / q));
    double lq2 = means::logarithmic({std::pow(a, q / 2.0), std::pow(b, q / 2.0)});
    rhs_gm = std::pow(u, 1.0 - 1.0 / q) * std::pow(0.5, 3.0 - 1.0 / q) *
             std::pow(2.0 / q, 1.0 / q) *
             (std::sqrt(a) * std::pow(std::pow(b, q / 2.0) - lq2, 1.0 / q) +
              std::sqrt(b) * std::pow(lq2 - std::pow(a, q / 2.0), 1.0 / q));
  } else {
    double lq = means::logarithmic({std::pow(a, q), std::pow(b, q)});
    double hoelder = std::pow((q - 1.0) / (2.0 * q - 1.0), 1.0 - 1.0 / q);
    rhs_am = u * hoelder * std::pow(lq, 1.0 / q);
    rhs_gm = 0.5 * u * hoelder * std::pow(lq, 1.0 / q) *
             means::arithmetic({std::sqrt(a), std::sqrt(b)});
  }
  rb.side("lhs_am", am_gap);
  rb.side("rhs_am", rhs_am);
  rb.side("lhs_gm", gm_gap);
  rb.side("rhs_gm", rhs_gm);
  rb.margin("margin_am", rhs_am - am_gap);
  rb.margin("margin_gm", rhs_gm - gm_gap);
  return rb.finish();
}

// ---------------------------------------------------------------------------
// Printed corollary formulas
// ---------------------------------------------------------------------------

double corollary_s1_rhs_thm21(const FunctionSpec& f, double a, double b, double q,
                              Target target) {
  double u = std::log(b / a);
  double fa_q = abs_deriv_pow(f, a, q);
  double fb_q = abs_deriv_pow(f, b, q);
  if (target == Target::Trapezoid) {
    double sa = coeff(1, 1.0, q, a, b) * fa_q + coeff(2, 1.0, q, a, b) * fb_q;
    double sb = coeff(3, 1.0, q, a, b) * fb_q + coeff(4, 1.0, q, a, b) * fa_q;
    return assemble_bound(u * std::pow(0.5, 2.0 - 1.0 / q), a, sa, b, sb, q);
  }
  double fg_q = abs_deriv_pow(f, std::sqrt(a * b), q);
  double sa = coeff(1, 1.0, q / 2.0, a, b) * fa_q + coeff(2, 1.0, q / 2.0, a, b) * fg_q;
  double sb = coeff(3, 1.0, q / 2.0, a, b) * fb_q + coeff(4, 1.0, q / 2.0, a, b) * fg_q;
  return assemble_bound(u * std::pow(0.5, 3.0 - 1.0 / q), a, sa, b, sb, q);
}

double corollary_s1_rhs_thm22(const FunctionSpec& f, double a, double b, double q,
                              Target target) {
  double u = std::log(b / a);
  double fa_q = abs_deriv_pow(f, a, q);
  double fb_q = abs_deriv_pow(f, b, q);
  double hoelder = std::pow((q - 1.0) / (2.0 * q - 1.0), 1.0 - 1.0 / q);
  if (target == Target::Trapezoid) {
    double sa = coeff(7, 1.0, q, a, b) * fa_q + coeff(8, 1.0, q, a, b) * fb_q;
    double sb = coeff(9, 1.0, q, a, b) * fb_q + coeff(10, 1.0, q, a, b) * fa_q;
    return assemble_bound(u / 2.0 * hoelder, a, sa, b, sb, q);
  }
  double fg_q = abs_deriv_pow(f, std::sqrt(a * b), q);
  double sa = coeff(7, 1.0, q / 2.0, a, b) * fa_q + coeff(8, 1.0, q / 2.0, a, b) * fg_q;
  double sb = coeff(9, 1.0, q / 2.0, a, b) * fb_q + coeff(10, 1.0, q / 2.0, a, b) * fg_q;
  return assemble_bound(u / 4.0 * hoelder, a, sa, b, sb, q);
}

double corollary_q1_rhs(const FunctionSpec& f, double a, double b, double s,
                        Sense sense, Target target) {
  double u = std::log(b / a);
  double fa = std::fabs(expr::eval_dual(f.body, a).deriv);
  double fb = std::fabs(expr::eval_dual(f.body, b).deriv);
  if (target == Target::Trapezoid) {
    if (sense == Sense::Second)
      return u / 2.0 *
             ((a * coeff(1, s, 1.0, a, b) + b * coeff(4, s, 1.0, a, b)) * fa +
              (b * coeff(3, s, 1.0, a, b) + a * coeff(2, s, 1.0, a, b)) * fb);
    return u / 2.0 *
           ((a * coeff(5, s, 1.0, a, b) + b * coeff(4, s, 1.0, a, b)) * fa +
            (a * coeff(2, s, 1.0, a, b) + b * coeff(6, s, 1.0, a, b)) * fb);
  }
  double fg = std::fabs(expr::eval_dual(f.body, std::sqrt(a * b)).deriv);
  if (sense == Sense::Second)
    return u / 4.0 *
           (a * coeff(1, s, 0.5, a, b) * fa + b * coeff(3, s, 0.5, a, b) * fb +
            (a * coeff(2, s, 0.5, a, b) + b * coeff(4, s, 0.5, a, b)) * fg);
  return u / 4.0 *
         (a * coeff(5, s, 0.5, a, b) * fa + b * coeff(6, s, 0.5, a, b) * fb +
          (a * coeff(2, s, 0.5, a, b) + b * coeff(4, s, 0.5, a, b)) * fg);
}

ConsistencyReport corollary_consistency(const FunctionSpec& f, double a, double b,
                                        double q, double s, double rel_tol) {
  integrals::require_interval(a, b);
  require_s(s);
  if (!(q >= 1.0)) throw InvalidArgument("corollary consistency requires q >= 1");
  ConsistencyReport report;

  auto compare = [&](std::string name, double theorem_value, double corollary_value) {
    double scale = std::max({1.0, std::fabs(theorem_value), std::fabs(corollary_value)});
    ConsistencyRow row{std::move(name), theorem_value, corollary_value,
                       std::fabs(theorem_value - corollary_value) / scale};
    report.worst_rel_diff = std::max(report.worst_rel_diff, row.rel_diff);
    if (row.rel_diff > rel_tol) report.ok = false;
    report.rows.push_back(std::move(row));
  };

  for (Target tgt : {Target::Trapezoid, Target::Midpoint}) {
    compare(std::string("thm21_s1_") + target_name(tgt),
            thm21_rhs(f, a, b, 1.0, q, Sense::Second, tgt),
            corollary_s1_rhs_thm21(f, a, b, q, tgt));
    if (q > 1.0)
      compare(std::string("thm22_s1_") + target_name(tgt),
              thm22_rhs(f, a, b, 1.0, q, Sense::Second, tgt),
              corollary_s1_rhs_thm22(f, a, b, q, tgt));
    for (Sense sense : {Sense::Second, Sense::First})
      compare(std::string("thm21_q1_") + sense_name(sense) + "_" + target_name(tgt),
              thm21_rhs(f, a, b, s, 1.0, sense, tgt),
              corollary_q1_rhs(f, a, b, s, sense, tgt));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Request dispatch
// ---------------------------------------------------------------------------

namespace {

double need(const std::optional<double>& v, const char* what) {
  if (!v) throw InvalidArgument(std::string("missing parameter: ") + what);
  return *v;
}

} // namespace

Hypothesis hypothesis_for(const Request& req) {
  Hypothesis h;
  const std::string& t = req.theorem;
  if (t == "prop1" || t == "prop2") {
    h.function = functions::make_function("one", "1", req.a, req.b);
    h.cls = {certify::ClassKind::GA, 1.0};
    h.trivially_true = true; // |f'|^q of f(x) = x is the constant 1
    return h;
  }
  if (!req.f) throw InvalidArgument("theorem '" + t + "' requires a function");
  if (t == "hh-s") {
    h.function = *req.f;
    h.cls = {certify::ClassKind::SSecond, need(req.s, "s")};
  } else if (t == "ga-s-hh") {
    Sense sense = req.sense.value_or(Sense::Second);
    h.function = *req.f;
    h.cls = {sense == Sense::First ? certify::ClassKind::GASFirst
                                   : certify::ClassKind::GASSecond,
             need(req.s, "s")};
  } else if (t == "zhang-pm" || t == "zhang-hoelder" || t == "zhang-2p") {
    h.function = functions::abs_deriv_power(*req.f, need(req.q, "q"));
    h.cls = {certify::ClassKind::GA, 1.0};
  } else if (t == "zcz") {
    Direction dir = req.direction.value_or(Direction::Convex);
    h.function = dir == Direction::Convex ? *req.f : functions::negate(*req.f);
    h.cls = {certify::ClassKind::GA, 1.0};
  } else if (t == "thm21" || t == "thm22") {
    Sense sense = req.sense.value_or(Sense::Second);
    h.function = functions::abs_deriv_power(*req.f, need(req.q, "q"));
    h.cls = {sense == Sense::First ? certify::ClassKind::GASFirst
                                   : certify::ClassKind::GASSecond,
             need(req.s, "s")};
  } else {
    throw InvalidArgument(
        "unknown theorem '" + t +
        "' (expected hh-s, ga-s-hh, zhang-pm, zhang-hoelder, zhang-2p, zcz, "
        "thm21, thm22, prop1, prop2)");
  }
  return h;
}

VerificationRecord run(const Request& req) {
  Options opt;
  opt.tol = req.tol;

  Hypothesis hyp = hypothesis_for(req); // also validates the theorem id
  if (req.certify_hypothesis) {
    if (hyp.trivially_true) {
      opt.hypothesis_certified = true;
    } else {
      certify::Certificate cert =
          certify::run(hyp.function, hyp.cls, req.a, req.b, req.plan);
      opt.hypothesis_certified = cert.certified();
    }
  }

  const std::string& t = req.theorem;
  if (t == "hh-s") return hh_s_convex(*req.f, req.a, req.b, need(req.s, "s"), opt);
  if (t == "ga-s-hh")
    return ga_s_hh(*req.f, req.a, req.b, need(req.s, "s"),
                   req.sense.value_or(Sense::Second), opt);
  if (t == "zhang-pm")
    return zhang_bounds(*req.f, req.a, req.b, need(req.q, "q"),
                        ZhangVariant::PowerMean, 0.0, opt);
  if (t == "zhang-hoelder")
    return zhang_bounds(*req.f, req.a, req.b, need(req.q, "q"), ZhangVariant::Hoelder,
                        0.0, opt);
  if (t == "zhang-2p")
    return zhang_bounds(*req.f, req.a, req.b, need(req.q, "q"), ZhangVariant::TwoParam,
                        need(req.p, "p"), opt);
  if (t == "zcz")
    return zcz_bound(*req.f, req.a, req.b, req.direction.value_or(Direction::Convex),
                     opt);
  if (t == "thm21")
    return thm21(*req.f, req.a, req.b, need(req.s, "s"), need(req.q, "q"),
                 req.sense.value_or(Sense::Second),
                 req.target.value_or(Target::Trapezoid), opt);
  if (t == "thm22")
    return thm22(*req.f, req.a, req.b, need(req.s, "s"), need(req.q, "q"),
                 req.sense.value_or(Sense::Second),
                 req.target.value_or(Target::Trapezoid), opt);
  if (t == "prop1") return prop_means(req.a, req.b, need(req.q, "q"), 1, opt);
  if (t == "prop2") return prop_means(req.a, req.b, need(req.q, "q"), 2, opt);
  throw InternalError("unreachable theorem id");
}

} // namespace hhv::theorems
