#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "ingham/constants.hpp"
#include "ingham/errors.hpp"
#include "ingham/moment4.hpp"

using namespace ingham;

TEST_CASE("eta and the chi envelopes") {
  CHECK(eta(1e5) == doctest::Approx(1.0 + M_PI * constants::m0 / 1e5).epsilon(1e-15));
  double um = chi_envelope(2.0, -1);
  double up = chi_envelope(2.0, +1);
  CHECK(um < 1.0);
  CHECK(up > 1.0);
  CHECK(um == doctest::Approx(std::exp(-0.125) / (1.0 + std::exp(-2.0 * M_PI)))
                  .epsilon(1e-12));
  CHECK_THROWS_AS(chi_envelope(1.0, +1), DomainError);
}

TEST_CASE("growth conditions hold for the published parameter set") {
  MomentParams p; // defaults = published T0 = 1e5 choice
  p.validate();
  CHECK(check_growth_conditions(p, p.T0, false).holds);
  CHECK(check_growth_conditions(p, p.T0, true).holds);
}

TEST_CASE("J5 and J6 are definitional aliases of g1, g2 at sigma4 = 1/2") {
  MomentParams p;
  CHECK(j_constant("J5", p) == g_constant(1, p, 0.5));
  CHECK(j_constant("J6", p) == g_constant(2, p, 0.5));
}

TEST_CASE("F1 reproduces the published headline constant") {
  MomentParams p;
  double f1 = j_constant("F1", p);
  CHECK(f1 >= 48.3);
  CHECK(f1 <= constants::f1_published * 1.005);
  double f2 = j_constant("F2", p);
  CHECK(f2 > 0.0);
  CHECK(f2 < f1);
}

TEST_CASE("C1 reproduces the published value at T0' = 3000") {
  MomentParams p;
  p.T0 = 3000.0;
  p.c1 = -0.923364;
  p.c2 = 0.161176;
  p.a1 = 0.531241;
  p.a2 = 1.52906;
  p.b1 = 0.754804;
  p.b2 = 1.68921;
  double c1 = j_constant("C1", p);
  CHECK(c1 >= 20.70);
  CHECK(c1 <= 20.7226);
}

TEST_CASE("theorem2 interval and corollary2 bounds are ordered") {
  MomentParams p;
  Theorem2Interval itv = theorem2_interval(2e5, p);
  CHECK(itv.radius > 0.0);
  CHECK(itv.center - itv.radius < itv.upper);
  Corollary2Bounds b = corollary2_bounds(2e5);
  CHECK(b.lower_asymptotic < b.upper_asymptotic);
  // For very large T the half-power tail term overtakes the asymptotic one.
  Corollary2Bounds big = corollary2_bounds(1e15);
  CHECK(big.upper_asymptotic < big.upper_half_power);
}

TEST_CASE("a-constants and auxiliary envelopes") {
  auto [a1, a2] = a_constants(1e10);
  CHECK(a1 > 0.0);
  CHECK(a2 > 0.0);
  CHECK(a2 < std::log(1e10)); // the all-T sufficiency needs a2 <= log T0 later
  CHECK(third_moment_coeff(1e5) ==
        doctest::Approx(std::sqrt(1.0 / (2.0 * M_PI * M_PI) +
                                  241.03 / std::log(1e5) +
                                  132.1 / std::pow(std::log(1e5), 2)))
            .epsilon(1e-12));
  CHECK(residue_bound(10.0) ==
        doctest::Approx(12.0 * std::sqrt(10.0) * std::exp(-5.0 * M_PI) *
                        std::log(10.0))
            .epsilon(1e-12));
  CHECK(zeta_sixth_envelope(150.0, 100.0) ==
        doctest::Approx(std::pow(200.0, 1.0 / 6.0) * std::log(200.0))
            .epsilon(1e-12));
}

TEST_CASE("parameter validation rejects out-of-range shifts") {
  MomentParams p;
  p.c1 = -0.4;
  CHECK_THROWS_AS(p.validate(), DomainError);
  MomentParams q;
  q.c2 = 0.6;
  CHECK_THROWS_AS(q.validate(), DomainError);
}
