#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ingham/quadrature.hpp"

namespace ingham {

// Counter-based splittable PRNG (SplitMix64). Specified by algorithm so that
// search traces are reproducible across platforms and languages.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform(); // in [0, 1)
  double uniform(double lo, double hi);
  // Per-trial substream seed = hash(seed, trial index).
  static std::uint64_t substream(std::uint64_t seed, std::uint64_t trial);

 private:
  std::uint64_t state_;
};

struct OptimizationProblem {
  std::function<double(const std::vector<double>&)> objective;
  std::vector<std::pair<double, double>> box; // per-coordinate (lo, hi)
  // Optional extra feasibility predicate; box membership is always enforced.
  std::function<bool(const std::vector<double>&)> feasible;
  std::uint64_t seed = 0;
  int trials = 50;
  int samples_per_trial = 100;
  int max_evaluations = 20000; // Nelder-Mead budget per start

  void validate() const;
};

struct OptResult {
  std::vector<double> best_params;
  double best_value = 0.0; // objective re-evaluated at best_params
  long evaluations = 0;
  bool feasible = false;
  std::vector<double> trace; // per-trial best values (multistart only)
};

// Local minimization from feasible x0; infeasible trial points are rejected
// (objective = +inf). Stops when the simplex diameter drops below 1e-8 or the
// evaluation budget is exhausted. Throws InfeasibleStartError.
OptResult nelder_mead(const OptimizationProblem& prob,
                      const std::vector<double>& x0);

// prob.trials independent substreams, prob.samples_per_trial uniform draws
// over the box each; best sample overall, optionally polished by nelder_mead.
// Throws NoFeasiblePointError if every sample is infeasible.
OptResult random_multistart(const OptimizationProblem& prob, bool polish = true,
                            int threads = 1);

// Ready-made problems. Objectives treat thrown domain errors as infeasible.

// C1 over x = (c1, c2, a1, a2, b1, b2) at fixed T0 (= T0').
OptimizationProblem c1_problem(double T0 = 3000.0,
                               const QuadratureConfig& cfg = {});
// F1 over x = (c1, c2, sigma1..sigma5, a1, a2, b1, b2), fixed T0.
OptimizationProblem f1_problem(double T0 = 1e5,
                               const QuadratureConfig& cfg = {});
// B1 of the given row over x = (d, kappa, delta, log10 A0).
OptimizationProblem table1_problem(int row, const QuadratureConfig& cfg = {});

// Seed points matching the published parameter choices.
std::vector<double> c1_seed_point();
std::vector<double> f1_seed_point();
std::vector<double> table1_seed_point(int row);

// Polished local search seeded at the published row parameters; when
// prob.trials > 0 a multistart is run as well and the better result returned.
OptResult optimize_table1(int row, const OptimizationProblem& prob);

std::string opt_result_json(const OptResult& r,
                            const std::vector<std::string>& names);

} // namespace ingham
