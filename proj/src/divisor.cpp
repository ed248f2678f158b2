#include "ingham/divisor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "ingham/constants.hpp"
#include "ingham/errors.hpp"

namespace ingham {
namespace {

constexpr char kCacheMagic[8] = {'I', 'N', 'G', 'H', 'D', 'S', 'V', '1'};
constexpr std::uint32_t kCacheVersion = 1;

void build_prefixes(DivisorTable& t) {
  t.prefix.resize(t.d.size());
  t.prefix_sq.resize(t.d.size());
  std::uint64_t s = 0, s2 = 0;
  for (std::size_t i = 0; i < t.d.size(); ++i) {
    std::uint64_t v = t.d[i];
    s += v;
    s2 += v * v;
    t.prefix[i] = s;
    t.prefix_sq[i] = s2;
  }
}

// tail sum_{j>=1} r^j with r = e^{-g}, bounded by 1/g for g > 0.
double geometric_tail(double g) { return (g > 0.0) ? 1.0 / g : HUGE_VAL; }

// J(k, s) = int_M^inf u^{-s} (log u)^k du, s > 1, k in {0,..,4}.
double power_log_tail(int k, double s, double M) {
  double lm = std::log(M);
  double base = std::pow(M, 1.0 - s) / (s - 1.0);
  double sum = 0.0, binom = 1.0, fact = 1.0;
  for (int j = 0; j <= k; ++j) {
    if (j > 0) {
      binom = binom * (k - j + 1) / j;
      fact *= j;
    }
    sum += binom * std::pow(lm, k - j) * fact / std::pow(s - 1.0, j);
  }
  return base * sum;
}

} // namespace

std::uint64_t DivisorTable::sum_d(double x) const {
  if (x < 1.0) return 0;
  std::uint64_t n = std::min<std::uint64_t>(static_cast<std::uint64_t>(std::floor(x)), limit);
  return prefix[n - 1];
}

std::uint64_t DivisorTable::sum_d2(double x) const {
  if (x < 1.0) return 0;
  std::uint64_t n = std::min<std::uint64_t>(static_cast<std::uint64_t>(std::floor(x)), limit);
  return prefix_sq[n - 1];
}

DivisorTable divisor_sieve(std::uint64_t N, std::uint64_t ceiling) {
  if (N < 1 || N > ceiling)
    throw BudgetExceededError("divisor_sieve: N outside [1, ceiling]");
  DivisorTable t;
  t.limit = N;
  t.d.assign(N, 0);
  for (std::uint64_t k = 1; k <= N; ++k)
    for (std::uint64_t m = k; m <= N; m += k) ++t.d[m - 1];
  build_prefixes(t);
  return t;
}

DivisorTable divisor_sieve_cached(std::uint64_t N, const std::string& cache_path) {
  std::string path = cache_path;
  if (path.empty()) {
    const char* env = std::getenv("EXPLICIT_INGHAM_CACHE");
    if (env != nullptr) path = env;
  }
  if (path.empty()) return divisor_sieve(N);

  if (std::FILE* f = std::fopen(path.c_str(), "rb")) {
    char magic[8];
    std::uint32_t version = 0;
    std::uint64_t stored = 0;
    bool ok = std::fread(magic, 1, 8, f) == 8 &&
              std::memcmp(magic, kCacheMagic, 8) == 0 &&
              std::fread(&version, sizeof version, 1, f) == 1 &&
              version == kCacheVersion &&
              std::fread(&stored, sizeof stored, 1, f) == 1 && stored >= N;
    if (ok) {
      DivisorTable t;
      t.limit = N;
      t.d.resize(N);
      ok = std::fread(t.d.data(), sizeof(std::uint32_t), N, f) == N;
      std::fclose(f);
      if (ok) {
        build_prefixes(t);
        return t;
      }
    } else {
      std::fclose(f);
    }
  }
  DivisorTable t = divisor_sieve(N);
  if (std::FILE* f = std::fopen(path.c_str(), "wb")) {
    std::fwrite(kCacheMagic, 1, 8, f);
    std::fwrite(&kCacheVersion, sizeof kCacheVersion, 1, f);
    std::fwrite(&t.limit, sizeof t.limit, 1, f);
    std::fwrite(t.d.data(), sizeof(std::uint32_t), t.d.size(), f);
    std::fclose(f);
  }
  return t;
}

double weighted_divisor_sum(const DivisorTable& table, double x, double sigma,
                            int power, DivisorWeight weight, SumSide side,
                            double cutoff) {
  if (power != 1 && power != 2)
    throw DomainError("weighted_divisor_sum: power must be 1 or 2");
  if (x < 1.0 || x > static_cast<double>(table.limit))
    throw DomainError("weighted_divisor_sum: x outside table range");

  auto w = [&](double n) -> double {
    switch (weight) {
      case DivisorWeight::One: return 1.0;
      case DivisorWeight::Exp: return std::exp(-n / x);
      case DivisorWeight::OneMinusExp: return 1.0 - std::exp(-n / x);
      case DivisorWeight::ExpMinusOneSq: {
        double e = std::expm1(-n / x);
        return e * e;
      }
      case DivisorWeight::Exp2: return std::exp(-2.0 * n / x);
    }
    return 0.0;
  };

  KahanSum acc;
  if (side == SumSide::UpToX) {
    std::uint64_t n1 = static_cast<std::uint64_t>(std::floor(x));
    for (std::uint64_t n = 1; n <= n1; ++n) {
      double dn = table.at(n);
      double num = (power == 2) ? dn * dn : dn;
      acc.add(num * std::pow(static_cast<double>(n), -sigma) * w(static_cast<double>(n)));
    }
    return acc.total();
  }

  // Tail side: x < n <= cutoff, exponential weights only.
  double beta;
  switch (weight) {
    case DivisorWeight::Exp: beta = 1.0 / x; break;
    case DivisorWeight::Exp2: beta = 2.0 / x; break;
    default:
      throw DomainError("weighted_divisor_sum: tail side needs a decaying weight");
  }
  if (cutoff <= 0.0) cutoff = std::min(40.0 * x, static_cast<double>(table.limit));
  if (cutoff > static_cast<double>(table.limit))
    throw DomainError("weighted_divisor_sum: cutoff beyond table limit");
  std::uint64_t n0 = static_cast<std::uint64_t>(std::floor(x)) + 1;
  std::uint64_t n1 = static_cast<std::uint64_t>(std::floor(cutoff));
  for (std::uint64_t n = n0; n <= n1; ++n) {
    double dn = table.at(n);
    double num = (power == 2) ? dn * dn : dn;
    acc.add(num * std::pow(static_cast<double>(n), -sigma) * w(static_cast<double>(n)));
  }
  double value = acc.total();
  // Truncation bound from d(n) <= 2 sqrt(n): terms beyond C = cutoff are at
  // most 2^p C^a e^{-beta n} growth-adjusted, summing to a geometric tail.
  double C = static_cast<double>(n1);
  double a = 0.5 * power - sigma;
  double g = beta - std::max(a, 0.0) / C;
  double tail = std::pow(2.0, power) * std::pow(C, a) * std::exp(-beta * C) *
                geometric_tail(g);
  if (!(tail <= 1e-9 * std::max(std::fabs(value), 1e-300)))
    throw CutoffTooSmallError("weighted_divisor_sum: truncation tail too large");
  return value;
}

double divisor_constant(DivisorConstant name, double x0, double sigma) {
  using constants::euler_gamma;
  if (x0 < 2.0) throw DomainError("divisor_constant: x0 >= 2 required");
  double L = std::log(x0);
  switch (name) {
    case DivisorConstant::D1: {
      double s0 = sigma;
      if (s0 > 0.0) throw DomainError("divisor_constant: D1 needs sigma0 <= 0");
      return 1.0 + (2.0 * euler_gamma - 1.0 - s0 / (1.0 - s0)) / L +
             (1.0 - s0) * (0.5 + std::fabs(s0) - s0) / std::sqrt(x0) +
             (1.0 - 2.0 * euler_gamma * s0) / (std::sqrt(x0) * L);
    }
    case DivisorConstant::D2: {
      double s0 = sigma;
      if (s0 <= 1.0 + 1e-9) throw DomainError("divisor_constant: D2 needs sigma0 > 1");
      return s0 - 1.0 + (1.0 + 2.0 * euler_gamma * (s0 - 1.0)) / L +
             (4.0 * s0 - 1.0) / ((2.0 * s0 - 1.0) * std::sqrt(x0) * L);
    }
    case DivisorConstant::D3:
      return 1.0 / M_E + (1.0 + 2.0 * euler_gamma) / (M_E * L) +
             5.0 / (2.0 * M_E * std::sqrt(x0) * L);
    case DivisorConstant::D4: {
      double s = sigma;
      if (s < -3.0 || s >= 1.0)
        throw DomainError("divisor_constant: D4 needs sigma in [-3, 1)");
      if (s < 0.0) {
        double q = 1.0 - s;
        return 1.0 / (q * M_PI * M_PI) +
               (-3.0 * s / (q * q * M_PI * M_PI) + 0.744342 / q) / L +
               (6.0 * s / (q * q * q * M_PI * M_PI) - 1.488684 * s / (q * q) +
                0.823266 / q) / (L * L) +
               (-6.0 * s / (q * q * q * q * M_PI * M_PI) +
                1.488684 * s / (q * q * q) - 0.823266 * s / (q * q) +
                0.460324 / q) / (L * L * L) +
               17.52 / (std::pow(x0, 0.25) * L * L);
      }
      double d42 = 1.0 / (M_PI * M_PI) + 0.744342 / L + 0.823266 / (L * L) +
                   0.460324 / (L * L * L) +
                   9.73 * s * (1.0 - s) /
                       (std::pow(x0, std::min(0.25, 1.0 - s)) * L) +
                   9.73 * (1.0 - s) / (std::pow(x0, 0.25) * L * L);
      return d42 / (1.0 - s);
    }
    case DivisorConstant::D5: {
      double s = sigma;
      if (s <= 1.0 + 1e-9) throw DomainError("divisor_constant: D5 needs sigma > 1");
      double p = s - 1.0;
      return p * p * p / (M_PI * M_PI) +
             p * p * (3.0 * s / (M_PI * M_PI) + 0.744342 * p) / L +
             p * (6.0 * s / (M_PI * M_PI) + 1.488684 * s * p +
                  0.823266 * p * p) / (L * L) +
             (6.0 * s / (M_PI * M_PI) + 1.488684 * s * p + 0.823266 * s * p * p +
              0.460324 * p * p * p) / (L * L * L) +
             (1.0 + (s / (s - 0.75)) * (1.0 + 1.0 / ((s - 0.75) * L))) * 9.73 *
                 p * p * p * p / (std::pow(x0, 0.25) * L * L);
    }
    case DivisorConstant::D6:
      return 0.349436 + 1.155975 / L + 1.28359 / (L * L) + 154.0 / (L * L * L) +
             9.73 / (std::pow(x0, 0.25) * L * L);
    case DivisorConstant::D7: {
      if (x0 < std::exp(4.0) - 1e-9)
        throw DomainError("divisor_constant: D7 needs x0 >= e^4");
      double c = 2.0 * M_E * M_PI;
      return 3.0 / (c * c) + 0.12441 / L + 0.364 / (L * L) + 0.3 / (L * L * L) +
             4.61 / (std::pow(x0, 0.25) * L * L);
    }
  }
  throw DomainError("divisor_constant: unknown name");
}

Bracket d2_summatory(double x) {
  if (x < 2.0) throw DomainError("d2_summatory: x >= 2 required");
  double L = std::log(x);
  double main = x / (M_PI * M_PI) * L * L * L +
                0.5 * (constants::D2_lo + constants::D2_hi) * x * L * L +
                0.5 * (constants::D3_lo + constants::D3_hi) * x * L +
                0.5 * (constants::D4_lo + constants::D4_hi) * x;
  // The coefficient enclosures contribute < 1e-6 x (log^2 x + ...); fold them
  // into the remainder envelope, which dominates by many orders of magnitude.
  double coeff_slack = 0.5 * ((constants::D2_hi - constants::D2_lo) * L * L +
                              (constants::D3_hi - constants::D3_lo) * L +
                              (constants::D4_hi - constants::D4_lo)) * x;
  return {main, 9.73 * std::pow(x, 0.75) * L + coeff_slack};
}

namespace {

// Upper bound for the infinite tail sum_{n>x} d(n)/n^sigma, sigma > 1, via
// Abel summation with the exact partial sum at floor(x) and the summatory
// envelope u log u + (2 gamma - 1) u + sqrt(u).
double d_tail_upper(const DivisorTable& t, double x, double sigma) {
  double S = static_cast<double>(t.sum_d(x));
  double M = x;
  double g = 2.0 * constants::euler_gamma - 1.0;
  return -S * std::pow(M, -sigma) +
         sigma * (power_log_tail(1, sigma, M) + g * power_log_tail(0, sigma, M) +
                  power_log_tail(0, sigma + 0.5, M));
}

// Same for sum_{n>x} d^2(n)/n^sigma with the four-term envelope.
double d2_tail_upper(const DivisorTable& t, double x, double sigma) {
  double S = static_cast<double>(t.sum_d2(x));
  double M = x;
  return -S * std::pow(M, -sigma) +
         sigma * ((1.0 / (M_PI * M_PI)) * power_log_tail(3, sigma, M) +
                  constants::D2_hi * power_log_tail(2, sigma, M) +
                  constants::D3_hi * power_log_tail(1, sigma, M) +
                  constants::D4_hi * power_log_tail(0, sigma, M) +
                  9.73 * power_log_tail(1, sigma + 0.25, M));
}

VerificationReport make_report(const std::string& id, double lhs, double rhs) {
  VerificationReport r;
  r.id = id;
  r.lhs = lhs;
  r.rhs = rhs;
  r.holds = lhs <= rhs;
  r.margin = rhs - lhs;
  return r;
}

} // namespace

VerificationReport verify_divisor_lemma(const std::string& lemma_id,
                                        const DivisorTable& table, double x,
                                        double sigma, double x0) {
  if (!(x >= x0 && x0 >= 2.0))
    throw DomainError("verify_divisor_lemma: need x >= x0 >= 2");
  double L = std::log(x);

  if (lemma_id == "d") {
    if (sigma <= 0.5) {
      double s0 = std::min(sigma, 0.0);
      double lhs = weighted_divisor_sum(table, x, sigma, 1, DivisorWeight::One,
                                        SumSide::UpToX);
      double rhs = divisor_constant(DivisorConstant::D1, x0, s0) /
                   (1.0 - sigma) * std::pow(x, 1.0 - sigma) * L;
      return make_report(lemma_id, lhs, rhs);
    }
    if (sigma > 1.0) {
      double lhs = d_tail_upper(table, x, sigma);
      double rhs = divisor_constant(DivisorConstant::D2, x0, sigma) /
                   ((sigma - 1.0) * (sigma - 1.0)) * std::pow(x, 1.0 - sigma) * L;
      return make_report(lemma_id, lhs, rhs);
    }
    throw DomainError("verify_divisor_lemma: d needs sigma <= 1/2 or sigma > 1");
  }

  if (lemma_id == "dExp") {
    if (sigma < 0.0 || sigma > 1.0)
      throw DomainError("verify_divisor_lemma: dExp needs sigma in [0, 1]");
    double lhs1 = weighted_divisor_sum(table, x, sigma, 1,
                                       DivisorWeight::OneMinusExp, SumSide::UpToX);
    double rhs1 = divisor_constant(DivisorConstant::D1, x0, sigma - 1.0) /
                  (2.0 - sigma) * std::pow(x, 1.0 - sigma) * L;
    double lhs2 = weighted_divisor_sum(table, x, sigma, 1, DivisorWeight::Exp,
                                       SumSide::AboveX);
    double rhs2 = divisor_constant(DivisorConstant::D3, x0) *
                  std::pow(x, 1.0 - sigma) * L;
    VerificationReport a = make_report(lemma_id, lhs1, rhs1);
    VerificationReport b = make_report(lemma_id, lhs2, rhs2);
    return (a.margin <= b.margin) ? a : b;
  }

  if (lemma_id == "d2") {
    if (sigma >= -3.0 && sigma < 1.0) {
      double lhs = weighted_divisor_sum(table, x, sigma, 2, DivisorWeight::One,
                                        SumSide::UpToX);
      double rhs = divisor_constant(DivisorConstant::D4, x0, sigma) *
                   std::pow(x, 1.0 - sigma) * L * L * L;
      return make_report(lemma_id, lhs, rhs);
    }
    if (sigma > 1.0) {
      double lhs = d2_tail_upper(table, x, sigma);
      double rhs = divisor_constant(DivisorConstant::D5, x0, sigma) /
                   std::pow(sigma - 1.0, 4) * std::pow(x, 1.0 - sigma) * L * L * L;
      return make_report(lemma_id, lhs, rhs);
    }
    throw DomainError("verify_divisor_lemma: d2 needs sigma in [-3,1) or > 1");
  }

  if (lemma_id == "d2Exp1") {
    double s = weighted_divisor_sum(table, x, 1.0, 2, DivisorWeight::One,
                                    SumSide::UpToX);
    double lhs = std::fabs(s - L * L * L * L / (4.0 * M_PI * M_PI));
    double rhs = divisor_constant(DivisorConstant::D6, x0) * L * L * L;
    return make_report(lemma_id, lhs, rhs);
  }

  if (lemma_id == "d2Exp2") {
    if (sigma < -1.0)
      throw DomainError("verify_divisor_lemma: d2Exp2 needs sigma >= -1");
    double lhs = weighted_divisor_sum(table, x, sigma, 2, DivisorWeight::Exp2,
                                      SumSide::AboveX,
                                      std::min(25.0 * x, static_cast<double>(table.limit)));
    double rhs = divisor_constant(DivisorConstant::D7, x0) *
                 std::pow(x, 1.0 - sigma) * L * L * L;
    return make_report(lemma_id, lhs, rhs);
  }

  if (lemma_id == "d2Exp3") {
    if (sigma < -1.0 || sigma > 2.0)
      throw DomainError("verify_divisor_lemma: d2Exp3 needs sigma in [-1, 2]");
    double lhs = weighted_divisor_sum(table, x, sigma, 2,
                                      DivisorWeight::ExpMinusOneSq, SumSide::UpToX);
    double rhs = divisor_constant(DivisorConstant::D4, x0, sigma - 2.0) *
                 std::pow(x, 1.0 - sigma) * L * L * L;
    return make_report(lemma_id, lhs, rhs);
  }

  throw DomainError("verify_divisor_lemma: unknown lemma id: " + lemma_id);
}

Bracket mean_value_bracket(const std::vector<std::pair<double, double>>& coeffs,
                           double T1, double T2) {
  if (!(T2 >= T1 && T1 > 0.0))
    throw DomainError("mean_value_bracket: need T2 >= T1 > 0");
  KahanSum center, radius;
  for (const auto& [n, a] : coeffs) {
    center.add((T2 - T1) * a * a);
    radius.add((n + 0.5) * a * a);
  }
  return {center.total(), 2.0 * M_PI * constants::m0 * radius.total()};
}

} // namespace ingham
