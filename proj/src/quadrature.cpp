#include "ingham/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "ingham/errors.hpp"

namespace ingham {
namespace {

// Gauss-Kronrod 15-point nodes/weights on [-1,1] (Kronrod weights wk, the
// embedded 7-point Gauss rule uses the odd-indexed nodes with weights wg).
constexpr double kNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
  double a, b, value, err;
  bool operator<(const Panel& o) const {
    if (err != o.err) return err < o.err;
    return a < o.a;  // deterministic tie-break
  }
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kNodes[i]);
    fv[14 - i] = f(c + h * kNodes[i]);
  }
  fv[7] = f(c);
  double k15 = 0.0, g7 = 0.0;
  for (int i = 0; i < 7; ++i) k15 += kWk[i] * (fv[i] + fv[14 - i]);
  k15 += kWk[7] * fv[7];
  for (int i = 0; i < 3; ++i) g7 += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  g7 += kWg[3] * fv[7];
  k15 *= h;
  g7 *= h;
  if (!std::isfinite(k15))
    throw NonFiniteError("non-finite integrand on [" + std::to_string(a) + "," +
                         std::to_string(b) + "]");
  const double diff = std::abs(k15 - g7);
  // QUADPACK-style sharpened error estimate.
  const double mean = k15 / (b - a);
  double asc = 0.0;
  for (int i = 0; i < 15; ++i) {
    double w = (i <= 7) ? kWk[i] : kWk[14 - i];
    asc += h * w * std::abs(fv[i] - mean);
  }
  double err = diff;
  if (asc > 0.0 && diff > 0.0)
    err = asc * std::min(1.0, std::pow(200.0 * diff / asc, 1.5));
  return {a, b, k15, err};
}

}  // namespace

Bracket gk15_panel(const std::function<double(double)>& f, double a, double b) {
  Panel p = eval_panel(f, a, b);
  return {p.value, p.err};
}

Bracket integrate_finite(const std::function<double(double)>& f, double a, double b,
                         const QuadratureConfig& cfg) {
  if (!(a <= b)) throw DomainError("integrate_finite: a > b");
  if (a == b) return {0.0, 0.0};
  std::priority_queue<Panel> heap;
  heap.push(eval_panel(f, a, b));
  double total_val = heap.top().value, total_err = heap.top().err;
  int splits = 0;
  auto tol = [&] { return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total_val)); };
  while (total_err > tol()) {
    if (++splits > cfg.max_subdivisions)
      throw BudgetExceededError("integrate_finite: subdivision budget exceeded");
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval at machine resolution
      heap.push({worst.a, worst.b, worst.value, 0.0});
      continue;
    }
    Panel l = eval_panel(f, worst.a, mid);
    Panel r = eval_panel(f, mid, worst.b);
    total_val += l.value + r.value - worst.value;
    total_err += l.err + r.err - worst.err;
    heap.push(l);
    heap.push(r);
  }
  // Recompute value with compensated summation over final panels for stability.
  KahanSum vs, es;
  while (!heap.empty()) {
    vs.add(heap.top().value);
    es.add(heap.top().err);
    heap.pop();
  }
  return {vs.total(), std::max(es.total(), 0.0)};
}

Bracket integrate_exp_weighted(const std::function<double(double)>& g, double lower,
                               const QuadratureConfig& cfg) {
  auto f = [&](double u) { return std::exp(-u) * g(u); };
  // Locate a truncation point: past u*, exp(-u)|g(u)| must stay below abs_tol.
  double u = std::max(lower, 1.0);
  double prev_peak = std::numeric_limits<double>::infinity();
  int rises = 0;
  while (true) {
    double peak = 0.0;
    for (int i = 0; i <= 8; ++i) {
      double x = u + cfg.tail_step * i / 8.0;
      double v = f(x);
      if (!std::isfinite(v)) throw NonFiniteError("integrate_exp_weighted: non-finite tail");
      peak = std::max(peak, std::abs(v));
    }
    if (peak * cfg.tail_step < 0.01 * cfg.abs_tol && u > lower) break;
    if (peak > prev_peak) {
      if (++rises >= 3)
        throw TailNotConvergentError("integrate_exp_weighted: tail not decaying");
    } else {
      rises = 0;
    }
    prev_peak = peak;
    u += cfg.tail_step;
    if (u > cfg.tail_limit)
      throw TailNotConvergentError("integrate_exp_weighted: tail probe exceeded limit");
  }
  Bracket body = integrate_finite(f, lower, u + cfg.tail_step, cfg);
  // Fold the (already tiny) truncation remainder into the error estimate.
  return {body.value, body.abs_err + 0.1 * cfg.abs_tol};
}

}  // namespace ingham
