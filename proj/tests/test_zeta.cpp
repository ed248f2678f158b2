#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "ingham/special.hpp"
#include "ingham/zeta.hpp"

using namespace ingham;

TEST_CASE("zeta(1/2) reference value") {
  CHECK(zeta_half(0.0).value.real() ==
        doctest::Approx(-1.4603545088).epsilon(1e-9));
}

TEST_CASE("zeta(1/2 + 100i) reference value") {
  std::complex<double> z = zeta_half(100.0).value;
  CHECK(z.real() == doctest::Approx(2.6926197).epsilon(1e-6));
  CHECK(z.imag() == doctest::Approx(-0.0203860).epsilon(2e-4));
}

TEST_CASE("vanishes at the first nontrivial zero") {
  CHECK(std::abs(zeta_half(14.134725141734693).value) < 1e-8);
}

TEST_CASE("Euler-Maclaurin and Riemann-Siegel agree across the switch") {
  for (double t : {2000.5, 2100.0, 2500.0}) {
    std::complex<double> em = zeta_em(std::complex<double>(0.5, t), 3500, 12);
    double rs = std::fabs(riemann_siegel_z(t));
    CHECK(std::fabs(std::abs(em) - rs) < 1e-7);
  }
}

TEST_CASE("|zeta|^2 helper is consistent and nonnegative") {
  for (double t : {0.5, 10.0, 100.0, 1000.0, 5000.0}) {
    double a2 = zeta_half_abs2(t);
    CHECK(a2 >= 0.0);
    if (t < kZetaSchemeSwitch) {
      std::complex<double> z = zeta_half(t).value;
      CHECK(a2 == doctest::Approx(std::norm(z)).epsilon(1e-9));
    }
  }
}

TEST_CASE("gamma and chi special values") {
  CHECK(std::exp(log_abs_gamma(0.5, 0.0)) ==
        doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
  CHECK(std::exp(log_abs_gamma(5.0, 0.0)) == doctest::Approx(24.0).epsilon(1e-12));
  // |chi(1/2 + it)| = 1 on the critical line.
  for (double t : {2.0, 14.1, 100.0, 1e4, 1e8})
    CHECK(std::fabs(log_abs_chi(0.5, t)) < 1e-9);
  // chi(s) chi(1-s) = 1: log moduli at s and conj(1-s) cancel.
  CHECK(std::fabs(log_abs_chi(0.3, 7.0) + log_abs_chi(0.7, -7.0)) < 1e-9);
}
