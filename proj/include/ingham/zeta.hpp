#pragma once
#include <complex>

#include "ingham/bracket.hpp"

namespace ingham {

// Complex value with an absolute error estimate.
struct ComplexBracket {
  std::complex<double> value;
  double abs_err = 0.0;
};

// Euler-Maclaurin evaluation of zeta(s), usable as a slow oracle anywhere in
// the half-plane (N controls the truncation point, K the Bernoulli terms).
std::complex<double> zeta_em(std::complex<double> s, int N, int K = 12);

// Riemann-Siegel theta and Z(t); valid (to ~1e-10 / ~t^{-7/4}) for t >= 100.
double rs_theta(double t);
double riemann_siegel_z(double t);

// zeta(1/2+it): Euler-Maclaurin below the scheme switch point, Riemann-Siegel
// with four correction terms above.
ComplexBracket zeta_half(double t);

// |zeta(1/2+it)|^2, the moment integrand (avoids the theta phase above the
// switch point).
double zeta_half_abs2(double t);

// Switch point between the two schemes (see the scheme notes in README).
inline constexpr double kZetaSchemeSwitch = 2000.0;

}  // namespace ingham
