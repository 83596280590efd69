#include "kernel.hpp"

#include <cmath>

#include "errors.hpp"
#include "quadrature.hpp"
#include "util.hpp"

namespace hhv::kernel {

namespace {

constexpr double kLambdaGuard = 700.0; // e^lambda overflow guard
constexpr double kSeriesLimit = 30.0;  // series/quadrature switch
constexpr double kTermRatio = 1e-18;   // series truncation

void validate(const KernelParams& p) {
  if (!(p.alpha >= 0.0) || !(p.beta >= 0.0) || !std::isfinite(p.alpha) ||
      !std::isfinite(p.beta))
    throw InvalidArgument("kernel requires finite alpha, beta >= 0");
  if (!std::isfinite(p.lambda) || std::fabs(p.lambda) > kLambdaGuard)
    throw InvalidArgument("kernel requires |lambda| <= " +
                          shortest_double(kLambdaGuard) + ", got lambda=" +
                          shortest_double(p.lambda));
}

double log_beta(double x, double y) {
  return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

// Sum_n lambda^n / n! * B(alpha+n+1, beta+1); all terms positive for
// lambda >= 0.  The Beta factors follow the recurrence
// B(alpha+n+2, beta+1) = B(alpha+n+1, beta+1) (alpha+n+1)/(alpha+beta+n+2).
double series(double alpha, double beta, double lambda) {
  double term = std::exp(log_beta(alpha + 1.0, beta + 1.0));
  double sum = term;
  for (int n = 0; n < 1000; ++n) {
    term *= lambda / (n + 1.0) * (alpha + n + 1.0) / (alpha + beta + n + 2.0);
    sum += term;
    if (term < kTermRatio * sum && n > lambda) return sum;
  }
  throw InternalError("kernel series failed to converge for alpha=" +
                      shortest_double(alpha) + " beta=" + shortest_double(beta) +
                      " lambda=" + shortest_double(lambda));
}

double by_quadrature(double alpha, double beta, double lambda) {
  auto integrand = [=](double t) {
    double tt = t <= 0.0 ? (alpha == 0.0 ? 1.0 : 0.0) : std::pow(t, alpha);
    double omt = t >= 1.0 ? (beta == 0.0 ? 1.0 : 0.0) : std::pow(1.0 - t, beta);
    return tt * omt * std::exp(lambda * t);
  };
  quadrature::QuadResult r = quadrature::integrate(integrand, 0.0, 1.0);
  if (!r.converged)
    throw InternalError("kernel quadrature did not converge for alpha=" +
                        shortest_double(alpha) + " beta=" + shortest_double(beta) +
                        " lambda=" + shortest_double(lambda));
  return r.value;
}

} // namespace

const char* method_name(Method m) {
  return m == Method::Series ? "series" : "quadrature";
}

KernelValue evaluate(const KernelParams& p) {
  validate(p);
  double alpha = p.alpha, beta = p.beta, lambda = p.lambda;
  double scale = 1.0;
  if (lambda < 0.0) { // reflect t -> 1-t so the series has positive terms
    scale = std::exp(lambda);
    std::swap(alpha, beta);
    lambda = -lambda;
  }
  KernelValue out;
  if (lambda <= kSeriesLimit) {
    out.value = scale * series(alpha, beta, lambda);
    out.method = Method::Series;
  } else {
    out.value = scale * by_quadrature(alpha, beta, lambda);
    out.method = Method::Quadrature;
  }
  if (!(out.value > 0.0) || !std::isfinite(out.value))
    throw InternalError("kernel produced a nonpositive value");
  return out;
}

double coefficient_lambda(double q, double a, double b) {
  return q * std::log(b / a);
}

KernelValue coefficient(const CoefficientId& id) {
  if (id.index < 1 || id.index > 12)
    throw InvalidArgument("coefficient index must be c1..c12");
  if (!(id.s > 0.0 && id.s <= 1.0))
    throw InvalidArgument("coefficient requires s in (0, 1]");
  if (!(id.q > 0.0))
    throw InvalidArgument("coefficient requires q > 0");
  if (!(id.a > 0.0) || !(id.a < id.b))
    throw InvalidArgument("coefficient requires 0 < a < b");

  double l = coefficient_lambda(id.q, id.a, id.b);
  double s = id.s;
  auto K = [](double alpha, double beta, double lambda) {
    return evaluate({alpha, beta, lambda});
  };

  KernelValue v;
  switch (id.index) {
    case 1: v = K(1.0, s, l); break;
    case 2: v = K(s + 1.0, 0.0, l); break;
    case 3: v = K(1.0, s, -l); break;
    case 4: v = K(s + 1.0, 0.0, -l); break;
    case 5: {
      KernelValue whole = K(1.0, 0.0, l), part = K(s + 1.0, 0.0, l);
      v = {whole.value - part.value, whole.method};
      break;
    }
    case 6: {
      KernelValue whole = K(1.0, 0.0, -l), part = K(s + 1.0, 0.0, -l);
      v = {whole.value - part.value, whole.method};
      break;
    }
    case 7: v = K(0.0, s, l); break;
    case 8: v = K(s, 0.0, l); break;
    case 9: v = K(0.0, s, -l); break;
    case 10: v = K(s, 0.0, -l); break;
    case 11: {
      KernelValue whole = K(0.0, 0.0, l), part = K(s, 0.0, l);
      v = {whole.value - part.value, whole.method};
      break;
    }
    case 12: {
      KernelValue whole = K(0.0, 0.0, -l), part = K(s, 0.0, -l);
      v = {whole.value - part.value, whole.method};
      break;
    }
    default: throw InternalError("unreachable coefficient index");
  }
  if (!(v.value > 0.0))
    throw InternalError("coefficient c" + std::to_string(id.index) +
                        " evaluated nonpositive; this indicates a bug");
  return v;
}

} // namespace hhv::kernel
