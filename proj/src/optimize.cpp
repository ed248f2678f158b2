#include "ingham/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "ingham/errors.hpp"
#include "ingham/moment4.hpp"
#include "ingham/zerodensity.hpp"

namespace ingham {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool in_box(const OptimizationProblem& prob, const std::vector<double>& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] >= prob.box[i].first && x[i] <= prob.box[i].second))
      return false;
  return true;
}

// Box membership + user feasibility + rejection of thrown domain errors.
double penalized(const OptimizationProblem& prob, const std::vector<double>& x,
                 long& evals) {
  if (!in_box(prob, x)) return kInf;
  if (prob.feasible && !prob.feasible(x)) return kInf;
  ++evals;
  try {
    double v = prob.objective(x);
    return std::isfinite(v) ? v : kInf;
  } catch (const NumericalError&) {
    return kInf;
  }
}

double simplex_diameter(const std::vector<std::vector<double>>& s) {
  double d = 0.0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      double r = 0.0;
      for (std::size_t k = 0; k < s[i].size(); ++k)
        r += (s[i][k] - s[j][k]) * (s[i][k] - s[j][k]);
      d = std::max(d, std::sqrt(r));
    }
  return d;
}

} // namespace

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

std::uint64_t SplitMix64::substream(std::uint64_t seed, std::uint64_t trial) {
  return mix64(mix64(seed) ^ mix64(trial + 0x9e3779b97f4a7c15ULL));
}

void OptimizationProblem::validate() const {
  if (!objective) throw DomainError("OptimizationProblem: objective required");
  if (box.empty()) throw DomainError("OptimizationProblem: empty box");
  for (const auto& [lo, hi] : box)
    if (!(lo < hi)) throw DomainError("OptimizationProblem: lo < hi required");
  if (trials < 1) throw DomainError("OptimizationProblem: trials >= 1 required");
  if (samples_per_trial < 1)
    throw DomainError("OptimizationProblem: samples_per_trial >= 1 required");
}

OptResult nelder_mead(const OptimizationProblem& prob,
                      const std::vector<double>& x0) {
  prob.validate();
  if (x0.size() != prob.box.size())
    throw DomainError("nelder_mead: x0 dimension mismatch");
  long evals = 0;
  double f0 = penalized(prob, x0, evals);
  if (!std::isfinite(f0)) throw InfeasibleStartError("nelder_mead: x0 infeasible");

  const std::size_t n = x0.size();
  std::vector<std::vector<double>> simplex(n + 1, x0);
  std::vector<double> fv(n + 1);
  fv[0] = f0;
  for (std::size_t i = 0; i < n; ++i) {
    double step = 0.05 * (prob.box[i].second - prob.box[i].first);
    // Step toward the interior if the start sits on the upper face.
    if (x0[i] + step > prob.box[i].second) step = -step;
    simplex[i + 1][i] += step;
    fv[i + 1] = penalized(prob, simplex[i + 1], evals);
  }

  auto order = [&] {
    std::vector<std::size_t> idx(n + 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> s2(n + 1);
    std::vector<double> f2(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      s2[i] = simplex[idx[i]];
      f2[i] = fv[idx[i]];
    }
    simplex.swap(s2);
    fv.swap(f2);
  };
  order();

  while (evals < prob.max_evaluations && simplex_diameter(simplex) >= 1e-8) {
    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / n;

    auto along = [&](double t) {
      std::vector<double> x(n);
      for (std::size_t k = 0; k < n; ++k)
        x[k] = centroid[k] + t * (centroid[k] - simplex[n][k]);
      return x;
    };

    std::vector<double> xr = along(1.0);
    double fr = penalized(prob, xr, evals);
    if (fr < fv[0]) {
      std::vector<double> xe = along(2.0);
      double fe = penalized(prob, xe, evals);
      if (fe < fr) { simplex[n] = xe; fv[n] = fe; }
      else { simplex[n] = xr; fv[n] = fr; }
    } else if (fr < fv[n - 1]) {
      simplex[n] = xr;
      fv[n] = fr;
    } else {
      std::vector<double> xc = along(fr < fv[n] ? 0.5 : -0.5);
      double fc = penalized(prob, xc, evals);
      if (fc < std::min(fr, fv[n])) {
        simplex[n] = xc;
        fv[n] = fc;
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t k = 0; k < n; ++k)
            simplex[i][k] = simplex[0][k] + 0.5 * (simplex[i][k] - simplex[0][k]);
          fv[i] = penalized(prob, simplex[i], evals);
        }
      }
    }
    order();
  }

  OptResult r;
  r.best_params = simplex[0];
  r.evaluations = evals;
  long dummy = 0;
  r.best_value = penalized(prob, r.best_params, dummy);
  r.feasible = std::isfinite(r.best_value);
  return r;
}

OptResult random_multistart(const OptimizationProblem& prob, bool polish,
                            int threads) {
  prob.validate();
  const std::size_t n = prob.box.size();
  std::vector<double> trial_best(prob.trials, kInf);
  std::vector<std::vector<double>> trial_arg(prob.trials);
  std::vector<long> trial_evals(prob.trials, 0);

  auto run_trial = [&](int t) {
    SplitMix64 rng(SplitMix64::substream(prob.seed, static_cast<std::uint64_t>(t)));
    for (int s = 0; s < prob.samples_per_trial; ++s) {
      std::vector<double> x(n);
      for (std::size_t k = 0; k < n; ++k)
        x[k] = rng.uniform(prob.box[k].first, prob.box[k].second);
      double f = penalized(prob, x, trial_evals[t]);
      if (f < trial_best[t]) {
        trial_best[t] = f;
        trial_arg[t] = std::move(x);
      }
    }
  };

  int nthreads = std::max(1, std::min<int>(threads, prob.trials));
  if (nthreads == 1) {
    for (int t = 0; t < prob.trials; ++t) run_trial(t);
  } else {
    std::vector<std::thread> pool;
    std::mutex m;
    int next = 0;
    for (int w = 0; w < nthreads; ++w)
      pool.emplace_back([&] {
        for (;;) {
          int t;
          { std::lock_guard<std::mutex> g(m); if (next >= prob.trials) return; t = next++; }
          run_trial(t);
        }
      });
    for (auto& th : pool) th.join();
  }

  int best_t = -1;
  for (int t = 0; t < prob.trials; ++t)
    if (std::isfinite(trial_best[t]) &&
        (best_t < 0 || trial_best[t] < trial_best[best_t]))
      best_t = t;
  if (best_t < 0)
    throw NoFeasiblePointError("random_multistart: every sample infeasible");

  OptResult r;
  r.best_params = trial_arg[best_t];
  r.best_value = trial_best[best_t];
  r.evaluations = std::accumulate(trial_evals.begin(), trial_evals.end(), 0L);
  r.feasible = true;
  r.trace.assign(trial_best.begin(), trial_best.end());

  if (polish) {
    OptResult local = nelder_mead(prob, r.best_params);
    if (local.feasible && local.best_value < r.best_value) {
      r.best_params = local.best_params;
      r.best_value = local.best_value;
    }
    r.evaluations += local.evaluations;
  }
  return r;
}

OptimizationProblem c1_problem(double T0, const QuadratureConfig& cfg) {
  OptimizationProblem prob;
  prob.box = {{-0.99, -0.51}, {0.01, 0.49}, {0.4, 3.0},
              {1.05, 2.0},    {0.4, 3.0},   {1.05, 2.0}};
  prob.objective = [T0, cfg](const std::vector<double>& x) {
    MomentParams p;
    p.T0 = T0;
    p.c1 = x[0]; p.c2 = x[1];
    p.a1 = x[2]; p.a2 = x[3];
    p.b1 = x[4]; p.b2 = x[5];
    p.validate();
    VerificationReport rep = check_growth_conditions(p, T0, true);
    if (!rep.holds) throw DomainError("growth conditions fail");
    return j_constant("C1", p, cfg);
  };
  return prob;
}

OptimizationProblem f1_problem(double T0, const QuadratureConfig& cfg) {
  OptimizationProblem prob;
  prob.box = {{-0.99, -0.51}, {0.01, 0.49},  {0.05, 0.45}, {0.55, 0.95},
              {0.05, 0.45},   {0.55, 0.95},  {0.05, 0.45}, {0.4, 3.0},
              {1.05, 2.0},    {0.4, 3.0},    {1.05, 2.0}};
  prob.objective = [T0, cfg](const std::vector<double>& x) {
    MomentParams p;
    p.T0 = T0;
    p.c1 = x[0]; p.c2 = x[1];
    p.sigma1 = x[2]; p.sigma2 = x[3]; p.sigma3 = x[4];
    p.sigma4 = x[5]; p.sigma5 = x[6];
    p.a1 = x[7]; p.a2 = x[8];
    p.b1 = x[9]; p.b2 = x[10];
    p.validate();
    VerificationReport rep = check_growth_conditions(p, T0, true);
    if (!rep.holds) throw DomainError("growth conditions fail");
    return j_constant("F1", p, cfg);
  };
  return prob;
}

OptimizationProblem table1_problem(int row, const QuadratureConfig& cfg) {
  ZDParams base = table1_params(row); // validates the row index
  OptimizationProblem prob;
  prob.box = {{0.005, 0.89}, {0.005, 1.0}, {0.0005, 0.5}, {10.0, 11.5}};
  prob.objective = [base, cfg](const std::vector<double>& x) {
    ZDParams p = base;
    p.d = x[0];
    p.kappa = x[1];
    p.delta = x[2];
    p.A0 = std::pow(10.0, x[3]);
    Corollary1Coeffs c = corollary1_coeffs(p, cfg);
    if (!c.patch_holds) throw DomainError("near-critical-line patch fails");
    return c.B1;
  };
  return prob;
}

std::vector<double> c1_seed_point() {
  return {-0.923364, 0.161176, 0.531241, 1.52906, 0.754804, 1.68921};
}

std::vector<double> f1_seed_point() {
  MomentParams p; // defaults are the published T0 = 1e5 choice
  return {p.c1, p.c2, p.sigma1, p.sigma2, p.sigma3,
          p.sigma4, p.sigma5, p.a1, p.a2, p.b1, p.b2};
}

std::vector<double> table1_seed_point(int row) {
  const Table1Row& r = table1_rows().at(static_cast<std::size_t>(row - 1));
  return {r.d, r.kappa, r.delta, r.log10_A0};
}

OptResult optimize_table1(int row, const OptimizationProblem& prob) {
  OptResult best = nelder_mead(prob, table1_seed_point(row));
  if (prob.trials > 0) {
    OptResult ms = random_multistart(prob, /*polish=*/true);
    long total = best.evaluations + ms.evaluations;
    if (ms.best_value < best.best_value) best = std::move(ms);
    else best.trace = std::move(ms.trace);
    best.evaluations = total;
  }
  return best;
}

std::string opt_result_json(const OptResult& r,
                            const std::vector<std::string>& names) {
  std::ostringstream out;
  out.precision(12);
  out << "{\"best_value\":" << r.best_value << ",\"feasible\":"
      << (r.feasible ? "true" : "false") << ",\"evaluations\":" << r.evaluations
      << ",\"best_params\":{";
  for (std::size_t i = 0; i < r.best_params.size(); ++i) {
    std::string key = i < names.size() ? names[i] : "x" + std::to_string(i);
    out << "\"" << key << "\":" << r.best_params[i];
    if (i + 1 < r.best_params.size()) out << ",";
  }
  out << "},\"trace\":[";
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    out << r.trace[i];
    if (i + 1 < r.trace.size()) out << ",";
  }
  out << "]}";
  return out.str();
}

} // namespace ingham
