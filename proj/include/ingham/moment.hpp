#pragma once
#include "ingham/bracket.hpp"
#include "ingham/quadrature.hpp"

namespace ingham {

// M_k(A,B) = int_A^B |zeta(1/2+it)|^{2k} dt, panel width tied to the local
// zero spacing ~ 2 pi / log t. Throws BudgetExceededError for B above ceiling.
Bracket moment_numeric(double k, double A, double B, const QuadratureConfig& cfg = {},
                       int threads = 1, double ceiling = 1e5);

}  // namespace ingham
