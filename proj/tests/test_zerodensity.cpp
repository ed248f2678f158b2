#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "ingham/constants.hpp"
#include "ingham/errors.hpp"
#include "ingham/zerodensity.hpp"
#include "json.hpp"

using namespace ingham;

TEST_CASE("elementary constants") {
  CHECK(const_C1(1e12) ==
        doctest::Approx(6.0 / (M_PI * M_PI) + 1.048 / std::log(1e12))
            .epsilon(1e-12));
  CHECK(const_C2(1e12) > 0.0);
  CHECK(const_C3(1e12, 0.012) > 0.0);
  CHECK(const_C4(1e12, 0.012) > 0.0);
  // C5 is tiny and C6 near its 220 base at the RH verification height.
  double c5 = const_C5(3e12, 1.0);
  double c6 = const_C6(3e12, 3e12);
  CHECK(c5 > 0.0);
  CHECK(c5 < 1e-5);
  CHECK(c6 > 200.0);
  CHECK(c6 < 220.0);
  CHECK_THROWS_AS(const_C5(1e6, 1.0), DomainError);
}

TEST_CASE("K and L constants for the first table row") {
  ZDParams p = table1_params(1);
  ZDConsts c = zd_consts(p);
  CHECK(c.K1 > 0.0);
  CHECK(c.K3 > 0.0);
  // K2 has a closed form: 2^{1/3} sqrt(3/(4 kappa)) sqrt(pi)/2 + 2^{1/3}(4 kappa/3)(A0/T0)^3.
  double k2 = std::cbrt(2.0) * std::sqrt(3.0 / (4.0 * p.kappa)) *
                  std::sqrt(M_PI) / 2.0 +
              std::cbrt(2.0) * (4.0 * p.kappa / 3.0) * std::pow(p.A0 / p.T0, 3);
  CHECK(c.K2 == doctest::Approx(k2).epsilon(1e-9));
  CHECK(c.L0 > 1.0);
  CHECK(c.L1 >= 1.0);
  CHECK(c.L2 >= 1.0);
}

TEST_CASE("all sixteen table rows reproduce within half a percent") {
  for (int row = 1; row <= 16; ++row) {
    const Table1Row& pub = table1_rows()[row - 1];
    Corollary1Coeffs c = corollary1_coeffs(table1_params(row));
    CHECK(std::fabs(c.B1 / pub.B1 - 1.0) <= 5e-3);
    CHECK(std::fabs(c.B2 / pub.B2 - 1.0) <= 5e-3);
    CHECK(std::fabs(c.B3 / pub.B3 - 1.0) <= 5e-3);
    CHECK(c.patch_holds);
  }
}

TEST_CASE("theorem 1 bound is positive and monotone in T") {
  ZDParams p = table1_params(4);
  double sigma = 0.5 * (p.sigma1 + p.sigma2);
  double b1 = theorem1_bound(sigma, 1e13, p);
  double b2 = theorem1_bound(sigma, 1e14, p);
  CHECK(b1 > 0.0);
  CHECK(b2 > b1);
  // f_X bound dominates trivially at sigma = 1/2 boundary shapes.
  CHECK(fx_bound(sigma, 1e13, p) > 0.0);
}

TEST_CASE("nt_upper matches its closed form") {
  double T = constants::H_RH;
  CHECK(nt_upper(T) ==
        doctest::Approx((T / (2.0 * M_PI)) * std::log(T / (2.0 * M_PI * M_E)) +
                        0.43 * std::log(T))
            .epsilon(1e-15));
  CHECK_THROWS_AS(nt_upper(100.0), DomainError);
}

TEST_CASE("emission formats") {
  std::string csv = table1_csv();
  int lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 17); // header + 16 rows

  auto parsed = nlohmann::json::parse(table1_json());
  CHECK(parsed.is_array());
  CHECK(parsed.size() == 16);
  CHECK(parsed[0]["row"] == 1);
  CHECK(parsed[11]["B1_pub"] == doctest::Approx(22.44));
  for (const auto& row : parsed) CHECK(row["patch_holds"] == true);
}

TEST_CASE("parameter validation") {
  ZDParams p;
  p.d = 0.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  ZDParams q;
  q.sigma1 = 0.3;
  CHECK_THROWS_AS(q.validate(), DomainError);
  ZDParams r = table1_params(1);
  r.T0 = 1e6; // corollary requires the RH verification height
  CHECK_THROWS_AS(corollary1_coeffs(r), DomainError);
  CHECK_THROWS_AS(table1_params(0), DomainError);
  CHECK_THROWS_AS(table1_params(17), DomainError);
}
