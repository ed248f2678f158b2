#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "ingham/bracket.hpp"
#include "ingham/errors.hpp"
#include "ingham/quadrature.hpp"

using namespace ingham;

TEST_CASE("gk15 panel is exact on low-degree polynomials") {
  Bracket r = gk15_panel([](double x) { return x * x * x - 2.0 * x + 1.0; },
                         -1.0, 3.0);
  // int_{-1}^{3} (x^3 - 2x + 1) dx = [x^4/4 - x^2 + x] = 16.
  CHECK(r.value == doctest::Approx(16.0).epsilon(1e-14));
  CHECK(r.abs_err < 1e-10);
}

TEST_CASE("integrate_finite on standard integrals") {
  Bracket s = integrate_finite([](double x) { return std::sin(x); }, 0.0, M_PI);
  CHECK(std::fabs(s.value - 2.0) < 1e-12);
  CHECK(std::fabs(s.value - 2.0) <= s.abs_err + 1e-13);

  Bracket osc = integrate_finite([](double x) { return std::cos(50.0 * x); },
                                 0.0, 1.0);
  CHECK(std::fabs(osc.value - std::sin(50.0) / 50.0) < 1e-11);
}

TEST_CASE("node doubling stability: tighter tolerance refines, not shifts") {
  auto f = [](double x) { return std::exp(-x) * std::cos(10.0 * x); };
  QuadratureConfig loose;
  loose.rel_tol = 1e-8;
  QuadratureConfig tight;
  tight.rel_tol = 1e-13;
  Bracket a = integrate_finite(f, 0.0, 5.0, loose);
  Bracket b = integrate_finite(f, 0.0, 5.0, tight);
  CHECK(std::fabs(a.value - b.value) <= a.abs_err + b.abs_err + 1e-12);
  CHECK(b.abs_err <= a.abs_err + 1e-15);
}

TEST_CASE("integrate_exp_weighted matches closed forms") {
  Bracket one = integrate_exp_weighted([](double) { return 1.0; }, 0.0);
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-12));
  Bracket mean = integrate_exp_weighted([](double u) { return u; }, 0.0);
  CHECK(mean.value == doctest::Approx(1.0).epsilon(1e-12));
  // int_0^inf e^-u sqrt(u) du = sqrt(pi)/2
  Bracket half = integrate_exp_weighted([](double u) { return std::sqrt(u); }, 0.0);
  CHECK(half.value == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-11));
  // Shifted lower limit: int_L^inf e^-u du = e^-L.
  Bracket shifted = integrate_exp_weighted([](double) { return 1.0; }, 3.0);
  CHECK(shifted.value == doctest::Approx(std::exp(-3.0)).epsilon(1e-11));
}

TEST_CASE("integrate_exp_weighted rejects divergent integrands") {
  CHECK_THROWS_AS(
      integrate_exp_weighted([](double u) { return std::exp(2.0 * u); }, 0.0),
      NumericalError);
}

TEST_CASE("Kahan summation recovers cancellation-prone sums") {
  KahanSum s;
  s.add(1.0);
  for (int i = 0; i < 1000000; ++i) s.add(1e-16);
  s.add(-1.0);
  CHECK(s.total() == doctest::Approx(1e-10).epsilon(1e-6));
}

TEST_CASE("non-finite integrand is reported") {
  CHECK_THROWS_AS(integrate_finite([](double x) { return 1.0 / x; }, -1.0, 1.0),
                  NonFiniteError);
}
