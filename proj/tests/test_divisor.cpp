#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>

#include "doctest.h"
#include "ingham/divisor.hpp"
#include "ingham/errors.hpp"

using namespace ingham;

namespace {
const DivisorTable& table() {
  static DivisorTable t = divisor_sieve(2'000'000);
  return t;
}

int d_naive(std::uint64_t n) {
  int c = 0;
  for (std::uint64_t i = 1; i * i <= n; ++i)
    if (n % i == 0) c += (i * i == n) ? 1 : 2;
  return c;
}
} // namespace

TEST_CASE("sieve matches trial division") {
  const std::uint32_t expected[] = {1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6};
  for (std::uint64_t n = 1; n <= 12; ++n) CHECK(table().at(n) == expected[n - 1]);
  std::uint64_t n = 12345;
  for (int i = 0; i < 50; ++i, n = (n * 2862933555777941757ULL + 3037000493ULL))
    CHECK(table().at(n % 2'000'000 + 1) ==
          static_cast<std::uint32_t>(d_naive(n % 2'000'000 + 1)));
}

TEST_CASE("prefix sums are consistent") {
  CHECK(table().sum_d(100.0) == doctest::Approx(482.0));
  double s = 0.0, s2 = 0.0;
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    s += table().at(n);
    s2 += static_cast<double>(table().at(n)) * table().at(n);
  }
  CHECK(table().sum_d(1000.0) == doctest::Approx(s));
  CHECK(table().sum_d2(1000.0) == doctest::Approx(s2));
}

TEST_CASE("binary cache round-trips") {
  std::string path = "divisor_cache_test.bin";
  std::remove(path.c_str());
  DivisorTable a = divisor_sieve_cached(50'000, path);
  DivisorTable b = divisor_sieve_cached(50'000, path); // reloaded from disk
  CHECK(a.limit == b.limit);
  for (std::uint64_t n = 1; n <= 50'000; n += 997) CHECK(a.at(n) == b.at(n));
  std::remove(path.c_str());
}

TEST_CASE("all six lemma checks hold on a small grid") {
  const double x0 = 100.0;
  for (double x : {150.0, 1e3, 1e4}) {
    CHECK(verify_divisor_lemma("d", table(), x, 0.25, x0).holds);
    CHECK(verify_divisor_lemma("d", table(), x, -1.0, x0).holds);
    CHECK(verify_divisor_lemma("d", table(), x, 1.5, x0).holds);
    CHECK(verify_divisor_lemma("dExp", table(), x, 0.5, x0).holds);
    CHECK(verify_divisor_lemma("d2", table(), x, 0.0, x0).holds);
    CHECK(verify_divisor_lemma("d2", table(), x, 2.0, x0).holds);
    CHECK(verify_divisor_lemma("d2Exp1", table(), x, 0.0, x0).holds);
    CHECK(verify_divisor_lemma("d2Exp2", table(), x, 0.5, x0).holds);
    CHECK(verify_divisor_lemma("d2Exp3", table(), x, 1.0, x0).holds);
  }
}

TEST_CASE("exp-weighted tails refuse cutoffs that cannot certify") {
  // x at the table limit leaves the e^{-n/x} tail visibly truncated.
  CHECK_THROWS_AS(
      weighted_divisor_sum(table(), 1.9e6, 0.5, 1, DivisorWeight::Exp,
                           SumSide::AboveX),
      CutoffTooSmallError);
}

TEST_CASE("d^2 summatory bracket contains the exact sum") {
  for (double x : {1e4, 1e5, 1e6}) {
    Bracket pred = d2_summatory(x);
    CHECK(std::fabs(table().sum_d2(x) - pred.value) <= pred.abs_err);
  }
}

TEST_CASE("mean value bracket: single-term polynomial is exact") {
  // |a * 1^{it}|^2 integrates to a^2 (T2 - T1); n=1 contributes radius too,
  // but the true value must sit inside.
  Bracket b = mean_value_bracket({{1.0, 2.0}}, 1.0, 11.0);
  CHECK(b.value == doctest::Approx(40.0));
  CHECK(std::fabs(40.0 - b.value) <= b.abs_err);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(verify_divisor_lemma("d", table(), 1e3, 0.75, 100.0),
                  DomainError);
  CHECK_THROWS_AS(verify_divisor_lemma("nope", table(), 1e3, 0.0, 100.0),
                  DomainError);
  CHECK_THROWS_AS(verify_divisor_lemma("d", table(), 10.0, 0.0, 100.0),
                  DomainError); // x < x0
}
