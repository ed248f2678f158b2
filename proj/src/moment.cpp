#include "ingham/moment.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "ingham/constants.hpp"
#include "ingham/errors.hpp"
#include "ingham/zeta.hpp"

namespace ingham {
namespace {

double integrand(double k, double t) {
  double a2 = zeta_half_abs2(t);
  if (k == 2.0) return a2 * a2;
  if (k == 1.0) return a2;
  return std::pow(a2, k);
}

}  // namespace

Bracket moment_numeric(double k, double A, double B, const QuadratureConfig& cfg,
                       int threads, double ceiling) {
  if (k <= 0.0) throw DomainError("moment_numeric: k must be positive");
  if (A < 0.0 || B < A) throw DomainError("moment_numeric: need 0 <= A <= B");
  if (B > ceiling) throw BudgetExceededError("moment_numeric: B above configured ceiling");
  if (A == B) return {0.0, 0.0};

  // Fixed panel grid: width <= 2 pi / (4 log t) to resolve oscillation between
  // zeros; each panel is then refined adaptively (bounded depth).
  std::vector<std::pair<double, double>> panels;
  double t = A;
  while (t < B) {
    double w = 2.0 * constants::pi / (4.0 * std::log(std::max(t, std::exp(2.0))));
    double next = std::min(B, t + w);
    panels.emplace_back(t, next);
    t = next;
  }

  auto f = [k](double x) { return integrand(k, x); };
  std::vector<Bracket> results(panels.size());
  QuadratureConfig pc = cfg;
  pc.max_subdivisions = 64;  // per-panel refinement budget
  pc.rel_tol = std::max(cfg.rel_tol, 1e-9);
  pc.abs_tol = std::max(cfg.abs_tol, 1e-9);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      results[i] = integrate_finite(f, panels[i].first, panels[i].second, pc);
  };
  int nthreads = std::max(1, threads);
  if (nthreads == 1 || panels.size() < 64) {
    work(0, panels.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (panels.size() + nthreads - 1) / nthreads;
    for (int i = 0; i < nthreads; ++i) {
      std::size_t lo = std::min(panels.size(), static_cast<std::size_t>(i) * chunk);
      std::size_t hi = std::min(panels.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  // Deterministic ordered reduction.
  KahanSum vs, es;
  for (const auto& r : results) {
    vs.add(r.value);
    es.add(r.abs_err);
  }
  // Propagate the pointwise zeta error: d|z|^{2k} = 2k|z|^{2k-1} d|z|; estimate
  // with the scheme-level bound on the Riemann-Siegel truncation error.
  double zerr = (B > kZetaSchemeSwitch) ? 0.06 * std::pow(kZetaSchemeSwitch / (2 * constants::pi), -1.75)
                                        : 1e-11;
  double val = vs.total();
  // Hoelder: int |z|^{2k-1} <= (int |z|^{2k})^{(2k-1)/2k} (B-A)^{1/2k}.
  double prop = 2.0 * k * zerr *
                std::pow(std::max(val, 0.0), (2.0 * k - 1.0) / (2.0 * k)) *
                std::pow(B - A, 1.0 / (2.0 * k));
  return {val, es.total() + prop};
}

}  // namespace ingham
