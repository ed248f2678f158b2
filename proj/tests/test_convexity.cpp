#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "ingham/convexity.hpp"
#include "ingham/errors.hpp"

using namespace ingham;

TEST_CASE("interpolation weights sum to one and hit the endpoints") {
  for (double x : {0.5, 0.6, 0.77, 0.99, 1.0}) {
    auto [w1, w2] = weights(x, 0.5, 1.0);
    CHECK(w1 + w2 == 1.0); // exact by construction
    CHECK(w1 >= 0.0);
    CHECK(w2 >= 0.0);
  }
  CHECK(weights(0.5, 0.5, 1.0).first == 1.0);
  CHECK(weights(1.0, 0.5, 1.0).second == 1.0);
}

TEST_CASE("convexity exponent identities") {
  StripSpec spec;
  spec.b[0] = 2.0;
  spec.b[1] = 4.0;
  for (double x : {0.5, 0.625, 0.8, 1.0}) {
    CHECK(convexity_exponent(1.0, 1.0, x, spec) == doctest::Approx(1.0).epsilon(1e-15));
  }
  // At the edges the exponent collapses to the pure edge values.
  CHECK(convexity_exponent(3.0, 7.0, spec.alpha, spec) == doctest::Approx(3.0));
  CHECK(convexity_exponent(3.0, 7.0, spec.beta, spec) == doctest::Approx(7.0));
  // mu(b1, b2; x) interpolates between b1 and b2 monotonically.
  double prev = spec.b[0];
  for (double x = 0.5; x <= 1.0; x += 0.1) {
    double mu = convexity_exponent(spec.b[0], spec.b[1], x, spec);
    CHECK(mu >= prev - 1e-12);
    prev = mu;
  }
}

TEST_CASE("edge constant closed forms") {
  StripSpec spec;
  spec.M[0] = 1.0;
  spec.a[0] = 2.0; // (u / (kappa b))^1: integral = 1 / (kappa b)
  spec.c[0] = 0.0;
  spec.kappa = 1.0;
  spec.b[0] = 2.0;
  CHECK(edge_constant(0, spec) == doctest::Approx(1.5).epsilon(1e-10));

  spec.a[0] = 1.0; // Gamma(3/2) / sqrt(kappa b)
  CHECK(edge_constant(0, spec) ==
        doctest::Approx(1.0 + std::sqrt(M_PI) / 2.0 / std::sqrt(2.0))
            .epsilon(1e-10));
}

TEST_CASE("convexity constant respects endpoint reduction") {
  StripSpec spec;
  spec.kappa = 0.3;
  spec.T0 = 100.0;
  double c_alpha = convexity_constant(spec.alpha, spec);
  double c1 = edge_constant(0, spec);
  double bump = std::exp(spec.kappa * spec.b[0] *
                         (1.0 + std::pow((spec.beta - spec.alpha) /
                                         (2.0 * spec.T0), 2)));
  CHECK(c_alpha == doctest::Approx(bump * c1).epsilon(1e-10));
}

TEST_CASE("spec validation") {
  StripSpec bad;
  bad.alpha = 1.0;
  bad.beta = 0.5;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}
