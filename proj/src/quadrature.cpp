#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace hhv::quadrature {

namespace {

// 15-point Kronrod extension of 7-point Gauss (positive abscissae).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss-7 weights, applied at xgk indices 1, 3, 5, 7.
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi;
  double value; // Kronrod estimate
  double error; // |Kronrod - Gauss|
};

Panel evaluate_panel(const std::function<double(double)>& f, double lo, double hi) {
  double center = 0.5 * (lo + hi);
  double half = 0.5 * (hi - lo);
  double fc = f(center);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    double dx = half * kXgk[j];
    double sum = f(center - dx) + f(center + dx);
    kron += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  Panel p;
  p.lo = lo;
  p.hi = hi;
  p.value = kron * half;
  p.error = std::fabs((kron - gauss) * half);
  return p;
}

struct WorstFirst {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.lo > y.lo; // deterministic tie-break
  }
};

double kahan_sum(const std::vector<double>& xs) {
  double sum = 0.0, c = 0.0;
  for (double x : xs) {
    double y = x - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum;
}

} // namespace

QuadResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     Tolerance tol) {
  std::priority_queue<Panel, std::vector<Panel>, WorstFirst> queue;
  queue.push(evaluate_panel(f, lo, hi));
  double total_value = queue.top().value;
  double total_error = queue.top().error;
  int panels = 1;
  std::vector<Panel> frozen; // panels too narrow to bisect at rounding

  auto bound = [&] { return std::max(tol.absolute, tol.relative * std::fabs(total_value)); };

  while (total_error > bound() && panels < kPanelBudget && !queue.empty()) {
    Panel worst = queue.top();
    queue.pop();
    double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      frozen.push_back(worst);
      continue;
    }
    Panel left = evaluate_panel(f, worst.lo, mid);
    Panel right = evaluate_panel(f, mid, worst.hi);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }

  // Deterministic final accumulation, sorted by panel position.
  std::vector<Panel> leaves = std::move(frozen);
  leaves.reserve(static_cast<std::size_t>(panels));
  while (!queue.empty()) {
    leaves.push_back(queue.top());
    queue.pop();
  }
  std::sort(leaves.begin(), leaves.end(),
            [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
  std::vector<double> values, errors;
  values.reserve(leaves.size());
  errors.reserve(leaves.size());
  for (const Panel& p : leaves) {
    values.push_back(p.value);
    errors.push_back(p.error);
  }

  QuadResult r;
  r.value = kahan_sum(values);
  r.error_estimate = kahan_sum(errors);
  r.panels = panels;
  r.converged = r.error_estimate <= std::max(tol.absolute, tol.relative * std::fabs(r.value));
  return r;
}

} // namespace hhv::quadrature
