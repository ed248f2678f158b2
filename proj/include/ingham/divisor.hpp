#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ingham/bracket.hpp"

namespace ingham {

// Exact divisor-function table: d(n), prefix sums of d and d^2 for n <= limit.
// Immutable after construction; safe for concurrent reads.
struct DivisorTable {
  std::uint64_t limit = 0;
  std::vector<std::uint32_t> d;         // d[n-1] = d(n)
  std::vector<std::uint64_t> prefix;    // prefix[n-1] = sum_{m<=n} d(m)
  std::vector<std::uint64_t> prefix_sq; // prefix_sq[n-1] = sum_{m<=n} d(m)^2

  std::uint32_t at(std::uint64_t n) const { return d[n - 1]; }
  // Summatory functions D(x) and sum of d^2 up to x (x >= 0, floor semantics).
  std::uint64_t sum_d(double x) const;
  std::uint64_t sum_d2(double x) const;
};

DivisorTable divisor_sieve(std::uint64_t N, std::uint64_t ceiling = 100000000ULL);

// As divisor_sieve, but backed by a binary file cache. If cache_path is empty
// the EXPLICIT_INGHAM_CACHE environment variable is consulted; if neither
// names a usable path the sieve runs uncached.
DivisorTable divisor_sieve_cached(std::uint64_t N, const std::string& cache_path = "");

enum class DivisorWeight { One, Exp, OneMinusExp, ExpMinusOneSq, Exp2 };
enum class SumSide { UpToX, AboveX };

// Exact (to rounding) weighted divisor sum: sum over n of d(n)^power / n^sigma
// times the chosen weight w(n/x). Side UpToX sums n <= floor(x); AboveX sums
// x < n <= cutoff (cutoff defaults to min(40x, table.limit) and requires an
// exponentially decaying weight, else the truncated tail is unbounded).
double weighted_divisor_sum(const DivisorTable& table, double x, double sigma,
                            int power, DivisorWeight weight, SumSide side,
                            double cutoff = 0.0);

enum class DivisorConstant { D1, D2, D3, D4, D5, D6, D7 };

// The closed-form constants as printed; D2 and D5 are returned without the
// (sigma0-1)^2 resp. (sigma-1)^4 divisor that appears in the lemma bounds.
double divisor_constant(DivisorConstant name, double x0, double sigma = 0.0);

// Four-term main value of sum_{n<=x} d^2(n) with abs_err = 9.73 x^{3/4} log x.
Bracket d2_summatory(double x);

struct VerificationReport {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double margin = 0.0; // rhs - lhs
};

// lemma_id in {"d", "dExp", "d2", "d2Exp1", "d2Exp2", "d2Exp3"}. For "d" and
// "d2" the side is selected by sigma (tail sums for sigma > 1). "dExp" checks
// both of its inequalities and reports the smaller margin.
VerificationReport verify_divisor_lemma(const std::string& lemma_id,
                                        const DivisorTable& table, double x,
                                        double sigma, double x0);

// Dirichlet-polynomial mean value over [T1, T2]: bracket centered at
// (T2-T1) * sum |a_n|^2 with radius 2 pi m0 * sum (n + 1/2) |a_n|^2.
Bracket mean_value_bracket(const std::vector<std::pair<double, double>>& coeffs,
                           double T1, double T2);

} // namespace ingham
