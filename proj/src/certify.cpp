#include "certify.hpp"

#include <cmath>
#include <random>

#include "errors.hpp"
#include "util.hpp"

namespace hhv::certify {

namespace {

bool needs_s(ClassKind k) {
  return k != ClassKind::Convex && k != ClassKind::GA;
}

bool geometric_combination(ClassKind k) {
  return k == ClassKind::GA || k == ClassKind::GASFirst || k == ClassKind::GASSecond;
}

double halton(std::uint64_t index, unsigned base) {
  double result = 0.0, f = 1.0 / base;
  for (std::uint64_t i = index + 1; i > 0; i /= base) {
    result += f * static_cast<double>(i % base);
    f /= base;
  }
  return result;
}

} // namespace

ConvexityClass class_from_name(std::string_view name, double s) {
  ConvexityClass c;
  c.s = s;
  if (name == "convex") c.kind = ClassKind::Convex;
  else if (name == "s-first") c.kind = ClassKind::SFirst;
  else if (name == "s-second") c.kind = ClassKind::SSecond;
  else if (name == "ga") c.kind = ClassKind::GA;
  else if (name == "ga-s-first") c.kind = ClassKind::GASFirst;
  else if (name == "ga-s-second") c.kind = ClassKind::GASSecond;
  else
    throw InvalidArgument("unknown convexity class '" + std::string(name) +
                          "' (expected convex, s-first, s-second, ga, ga-s-first, "
                          "ga-s-second)");
  if (needs_s(c.kind) && !(s > 0.0 && s <= 1.0))
    throw InvalidArgument("class '" + std::string(name) + "' requires s in (0, 1]");
  return c;
}

std::string class_name(const ConvexityClass& c) {
  switch (c.kind) {
    case ClassKind::Convex: return "convex";
    case ClassKind::SFirst: return "s-first";
    case ClassKind::SSecond: return "s-second";
    case ClassKind::GA: return "ga";
    case ClassKind::GASFirst: return "ga-s-first";
    case ClassKind::GASSecond: return "ga-s-second";
  }
  return "?";
}

double class_margin(const functions::FunctionSpec& f, const ConvexityClass& cls,
                    double x, double y, double t) {
  double fx = f.value(x);
  double fy = f.value(y);
  double comb, rhs;
  switch (cls.kind) {
    case ClassKind::Convex:
      comb = t * x + (1.0 - t) * y;
      rhs = t * fx + (1.0 - t) * fy;
      break;
    case ClassKind::SFirst: {
      // alpha^s = t, beta^s = 1 - t keeps alpha^s + beta^s = 1.
      double alpha = std::pow(t, 1.0 / cls.s);
      double beta = std::pow(1.0 - t, 1.0 / cls.s);
      comb = alpha * x + beta * y;
      rhs = t * fx + (1.0 - t) * fy;
      break;
    }
    case ClassKind::SSecond:
      comb = t * x + (1.0 - t) * y;
      rhs = std::pow(t, cls.s) * fx + std::pow(1.0 - t, cls.s) * fy;
      break;
    case ClassKind::GA:
      comb = std::exp(t * std::log(x) + (1.0 - t) * std::log(y));
      rhs = t * fx + (1.0 - t) * fy;
      break;
    case ClassKind::GASFirst: {
      double ts = std::pow(t, cls.s);
      comb = std::exp(t * std::log(x) + (1.0 - t) * std::log(y));
      rhs = ts * fx + (1.0 - ts) * fy;
      break;
    }
    case ClassKind::GASSecond:
      comb = std::exp(t * std::log(x) + (1.0 - t) * std::log(y));
      rhs = std::pow(t, cls.s) * fx + std::pow(1.0 - t, cls.s) * fy;
      break;
    default:
      throw InternalError("unreachable class kind");
  }
  return rhs - f.value(comb);
}

Certificate run(const functions::FunctionSpec& f, const ConvexityClass& cls,
                double lo, double hi, const SamplingPlan& plan) {
  if (!(lo < hi))
    throw InvalidArgument("certification interval requires lo < hi");
  if (geometric_combination(cls.kind) && !(lo > 0.0))
    throw InvalidArgument("GA classes require a positive interval");
  if (!geometric_combination(cls.kind) && !(lo >= 0.0))
    throw InvalidArgument("s-convexity classes require an interval inside [0, inf)");
  if (needs_s(cls.kind) && !(cls.s > 0.0 && cls.s <= 1.0))
    throw InvalidArgument("certification requires s in (0, 1]");

  Certificate cert;
  cert.cls = cls;

  bool have_best = false;
  double best_margin = 0.0;
  std::array<double, 3> best_point{};

  auto visit = [&](double x, double y, double t) {
    double m;
    try {
      m = class_margin(f, cls, x, y, t);
    } catch (const EvalError& err) {
      throw EvalError(std::string(err.what()) + " while certifying at (x=" +
                      shortest_double(x) + ", y=" + shortest_double(y) +
                      ", t=" + shortest_double(t) + ")");
    }
    ++cert.samples;
    std::array<double, 3> point{x, y, t};
    if (!have_best || m < best_margin ||
        (m == best_margin && point < best_point)) {
      have_best = true;
      best_margin = m;
      best_point = point;
    }
  };

  double span = hi - lo;
  std::uint64_t pairs = static_cast<std::uint64_t>(plan.grid) * plan.grid;
  for (std::uint64_t k = 0; k < pairs; ++k) {
    double x = lo + span * halton(k, 2);
    double y = lo + span * halton(k, 3);
    for (unsigned j = 0; j < plan.t_steps; ++j) {
      double t = plan.t_steps > 1 ? static_cast<double>(j) / (plan.t_steps - 1) : 0.5;
      visit(x, y, t);
    }
  }

  std::mt19937_64 rng(plan.seed);
  std::uniform_real_distribution<double> interval(lo, hi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (unsigned k = 0; k < plan.randoms; ++k) {
    double x = interval(rng);
    double y = interval(rng);
    double t = unit(rng);
    visit(x, y, t);
  }

  cert.worst_margin = best_margin;
  if (best_margin < -plan.tolerance) {
    cert.status = CertStatus::Violated;
    cert.witness = best_point;
  } else {
    cert.status = CertStatus::CertifiedEmpirically;
  }
  return cert;
}

} // namespace hhv::certify
