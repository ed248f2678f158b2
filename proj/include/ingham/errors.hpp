#pragma once
#include <stdexcept>
#include <string>

namespace ingham {

// All recoverable numerical failures derive from NumericalError so the CLI
// can map them to a single exit code.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside a documented precondition (bad parameter range, invalid row, ...).
struct DomainError : NumericalError {
  using NumericalError::NumericalError;
};

// Adaptive quadrature exhausted its subdivision budget before meeting tolerance.
struct BudgetExceededError : NumericalError {
  using NumericalError::NumericalError;
};

// A semi-infinite integral whose tail probe never decayed below tolerance.
struct TailNotConvergentError : NumericalError {
  using NumericalError::NumericalError;
};

// An integrand returned NaN/Inf inside the integration range.
struct NonFiniteError : NumericalError {
  using NumericalError::NumericalError;
};

// Truncated sum where the requested cutoff provably leaves a non-negligible tail.
struct CutoffTooSmallError : NumericalError {
  using NumericalError::NumericalError;
};

// Local optimizer started from a point that violates the constraints.
struct InfeasibleStartError : NumericalError {
  using NumericalError::NumericalError;
};

// Every sampled point of a multistart search was infeasible.
struct NoFeasiblePointError : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace ingham
