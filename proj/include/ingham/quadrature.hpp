#pragma once
#include <functional>

#include "ingham/bracket.hpp"

namespace ingham {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 20000;
  // Tail handling for integrate_exp_weighted: probe in steps of tail_step
  // until exp(-u)*|g| stays below abs_tol, give up past tail_limit.
  double tail_step = 8.0;
  double tail_limit = 800.0;
};

// Single Gauss-Kronrod 15(7) panel: returns K15 estimate, err = |K15-G7| based.
Bracket gk15_panel(const std::function<double(double)>& f, double a, double b);

// Adaptive bisection over [a,b]. Deterministic (worst-panel-first refinement).
// Throws NonFiniteError / BudgetExceededError.
Bracket integrate_finite(const std::function<double(double)>& f, double a, double b,
                         const QuadratureConfig& cfg = {});

//  integral_{lower}^{infinity} exp(-u) g(u) du.
// g must be evaluable on [lower, inf); the tail is located by probing and the
// truncation remainder is folded into abs_err. Throws TailNotConvergentError.
Bracket integrate_exp_weighted(const std::function<double(double)>& g, double lower,
                               const QuadratureConfig& cfg = {});

}  // namespace ingham
