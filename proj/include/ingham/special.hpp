#pragma once
#include <complex>

#include "ingham/bracket.hpp"
#include "ingham/quadrature.hpp"

namespace ingham {

// log Gamma(z) for Re(z) > 0 (Lanczos); reflection handled by log_abs_gamma.
std::complex<double> log_gamma(std::complex<double> z);

// log |Gamma(x+iy)|, stable for large |y| (works in log space throughout).
double log_abs_gamma(double x, double y);

// |Gamma(x+iy)|. Throws DomainError at non-positive-integer poles (y=0).
Bracket abs_gamma(double x, double y);

//  integral_{-inf}^{inf} |Gamma(c+iu)| du  (symmetric; computed as 2*int_0^inf).
Bracket gamma_abs_moment(double c, const QuadratureConfig& cfg = {});

// log |chi(x+it)| with chi(s) = (2 pi)^s / (2 Gamma(s) cos(pi s / 2)).
double log_abs_chi(double x, double t);
Bracket abs_chi(double x, double t);

}  // namespace ingham
