#pragma once

#include <utility>

#include "ingham/quadrature.hpp"

namespace ingham {

// Vertical strip [alpha, beta] with power-moment growth data on each edge:
// edge i is bounded by M_i T^{a_i} (log T)^{c_i} for the b_i-th power mean.
struct StripSpec {
  double alpha = 0.5;
  double beta = 1.0;
  double M[2] = {1.0, 1.0};
  double a[2] = {1.0, 1.0};
  double b[2] = {2.0, 2.0};
  double c[2] = {0.0, 0.0};
  double kappa = 1.0;
  double T0 = 2.0;

  void validate() const;
};

// Linear interpolation weights (w1, w2) of x within [alpha, beta].
std::pair<double, double> weights(double x, double alpha, double beta);

// mu(k, l; x) = (k b2 (beta - x) + l b1 (x - alpha)) / (b2 (beta - x) + b1 (x - alpha)).
double convexity_exponent(double k, double l, double x, const StripSpec& spec);

// M(x) = exp(kappa mu(b1,b2;x)(1 + ((beta-alpha)/(2 T0))^2)) C1^{mu(1,0;x)} C2^{mu(0,1;x)}
// with C_i = M_i (1 + int_0^inf e^{-u} (u/(kappa b_i))^{a_i/2}
//                 (1 + log(1 + u/(kappa b_i)) / (2 log T0))^{c_i} du).
double convexity_constant(double x, const StripSpec& spec,
                          const QuadratureConfig& cfg = {});

// The single-edge constant C_i (i in {0, 1}) from the formula above.
double edge_constant(int i, const StripSpec& spec, const QuadratureConfig& cfg = {});

} // namespace ingham
