#include "integrals.hpp"

#include <cmath>

#include "errors.hpp"
#include "util.hpp"

namespace hhv::integrals {

namespace {

using functions::FunctionSpec;

double deriv_at(const FunctionSpec& f, double x) {
  return expr::eval_dual(f.body, x).deriv;
}

} // namespace

void require_interval(double a, double b) {
  if (!(a > 0.0) || !(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw InvalidArgument("interval requires 0 < a < b, got a=" +
                          shortest_double(a) + " b=" + shortest_double(b));
}

QuadResult gm_average(const FunctionSpec& f, double a, double b) {
  require_interval(a, b);
  double la = std::log(a), lb = std::log(b);
  return quadrature::integrate(
      [&](double t) { return f.value(std::exp((1.0 - t) * la + t * lb)); }, 0.0, 1.0);
}

QuadResult am_average(const FunctionSpec& f, double a, double b) {
  require_interval(a, b);
  return quadrature::integrate([&](double t) { return f.value(a + (b - a) * t); },
                               0.0, 1.0);
}

QuadResult integral(const FunctionSpec& f, double a, double b) {
  QuadResult r = am_average(f, a, b);
  r.value *= (b - a);
  r.error_estimate *= (b - a);
  return r;
}

IdentityKind identity_from_name(std::string_view name) {
  if (name == "zhang") return IdentityKind::Zhang;
  if (name == "iscan-midpoint") return IdentityKind::IscanMidpoint;
  if (name == "iscan-trapezoid") return IdentityKind::IscanTrapezoid;
  throw InvalidArgument("unknown identity '" + std::string(name) +
                        "' (expected zhang, iscan-midpoint, iscan-trapezoid)");
}

const char* identity_name(IdentityKind k) {
  switch (k) {
    case IdentityKind::Zhang: return "zhang";
    case IdentityKind::IscanMidpoint: return "iscan-midpoint";
    case IdentityKind::IscanTrapezoid: return "iscan-trapezoid";
  }
  return "?";
}

IdentityCheck identity_residual(IdentityKind kind, const FunctionSpec& f, double a,
                                double b) {
  require_interval(a, b);
  double la = std::log(a), lb = std::log(b);
  double u = lb - la;
  IdentityCheck out;

  auto track = [&out](const QuadResult& r) {
    out.quad_error += r.error_estimate;
    out.converged = out.converged && r.converged;
    return r.value;
  };

  switch (kind) {
    case IdentityKind::Zhang: {
      out.lhs = b * f.value(b) - a * f.value(a) - track(integral(f, a, b));
      QuadResult rhs = quadrature::integrate(
          [&](double t) {
            double point = std::exp(t * lb + (1.0 - t) * la);
            return point * point * deriv_at(f, point);
          },
          0.0, 1.0);
      out.rhs = u * track(rhs);
      break;
    }
    case IdentityKind::IscanMidpoint: {
      // LHS average computed on the arithmetic parameterization so the two
      // sides share no quadrature path.
      QuadResult avg = quadrature::integrate(
          [&](double t) {
            double x = a + (b - a) * t;
            return f.value(x) / x;
          },
          0.0, 1.0);
      out.lhs = f.value(std::sqrt(a * b)) - (b - a) * track(avg) / u;
      QuadResult left = quadrature::integrate(
          [&](double t) {
            double point = std::exp((1.0 - 0.5 * t) * la + 0.5 * t * lb);
            return t * std::exp(0.5 * t * u) * deriv_at(f, point);
          },
          0.0, 1.0);
      QuadResult right = quadrature::integrate(
          [&](double t) {
            double point = std::exp((1.0 - 0.5 * t) * lb + 0.5 * t * la);
            return t * std::exp(-0.5 * t * u) * deriv_at(f, point);
          },
          0.0, 1.0);
      out.rhs = u / 4.0 * (a * track(left) - b * track(right));
      break;
    }
    case IdentityKind::IscanTrapezoid: {
      QuadResult avg = quadrature::integrate(
          [&](double t) {
            double x = a + (b - a) * t;
            return f.value(x) / x;
          },
          0.0, 1.0);
      out.lhs = 0.5 * (f.value(a) + f.value(b)) - (b - a) * track(avg) / u;
      QuadResult left = quadrature::integrate(
          [&](double t) {
            double point = std::exp((1.0 - t) * la + t * lb);
            return t * std::exp(t * u) * deriv_at(f, point);
          },
          0.0, 1.0);
      QuadResult right = quadrature::integrate(
          [&](double t) {
            double point = std::exp((1.0 - t) * lb + t * la);
            return t * std::exp(-t * u) * deriv_at(f, point);
          },
          0.0, 1.0);
      out.rhs = u / 2.0 * (a * track(left) - b * track(right));
      break;
    }
  }
  out.residual = std::fabs(out.lhs - out.rhs);
  return out;
}

} // namespace hhv::integrals
