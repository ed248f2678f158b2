#include "ingham/convexity.hpp"

#include <cmath>

#include "ingham/errors.hpp"

namespace ingham {

void StripSpec::validate() const {
  if (!(0.5 <= alpha && alpha < beta))
    throw DomainError("StripSpec: need 1/2 <= alpha < beta");
  for (int i = 0; i < 2; ++i) {
    if (!(M[i] > 0.0)) throw DomainError("StripSpec: M_i > 0 required");
    if (!(a[i] > 0.0)) throw DomainError("StripSpec: a_i > 0 required");
    if (!(b[i] >= 1.0)) throw DomainError("StripSpec: b_i >= 1 required");
    if (!(c[i] >= 0.0)) throw DomainError("StripSpec: c_i >= 0 required");
  }
  if (!(kappa > 0.0)) throw DomainError("StripSpec: kappa > 0 required");
  if (!(T0 >= 2.0)) throw DomainError("StripSpec: T0 >= 2 required");
}

std::pair<double, double> weights(double x, double alpha, double beta) {
  if (!(alpha < beta) || x < alpha || x > beta)
    throw DomainError("weights: x outside [alpha, beta]");
  double w1 = (beta - x) / (beta - alpha);
  double w2 = (x - alpha) / (beta - alpha);
  return {w1, w2};
}

double convexity_exponent(double k, double l, double x, const StripSpec& spec) {
  spec.validate();
  if (x < spec.alpha || x > spec.beta)
    throw DomainError("convexity_exponent: x outside [alpha, beta]");
  double num = k * spec.b[1] * (spec.beta - x) + l * spec.b[0] * (x - spec.alpha);
  double den = spec.b[1] * (spec.beta - x) + spec.b[0] * (x - spec.alpha);
  return num / den;
}

double edge_constant(int i, const StripSpec& spec, const QuadratureConfig& cfg) {
  spec.validate();
  if (i != 0 && i != 1) throw DomainError("edge_constant: index must be 0 or 1");
  double kb = spec.kappa * spec.b[i];
  double half_a = 0.5 * spec.a[i];
  double ci = spec.c[i];
  double twoLogT0 = 2.0 * std::log(spec.T0);
  Bracket integral = integrate_exp_weighted(
      [&](double u) {
        return std::pow(u / kb, half_a) *
               std::pow(1.0 + std::log1p(u / kb) / twoLogT0, ci);
      },
      0.0, cfg);
  return spec.M[i] * (1.0 + integral.value);
}

double convexity_constant(double x, const StripSpec& spec,
                          const QuadratureConfig& cfg) {
  spec.validate();
  if (x < spec.alpha || x > spec.beta)
    throw DomainError("convexity_constant: x outside [alpha, beta]");
  double C1 = edge_constant(0, spec, cfg);
  double C2 = edge_constant(1, spec, cfg);
  double halfwidth = (spec.beta - spec.alpha) / (2.0 * spec.T0);
  double mu_b = convexity_exponent(spec.b[0], spec.b[1], x, spec);
  double mu1 = convexity_exponent(1.0, 0.0, x, spec);
  double mu2 = convexity_exponent(0.0, 1.0, x, spec);
  return std::exp(spec.kappa * mu_b * (1.0 + halfwidth * halfwidth)) *
         std::pow(C1, mu1) * std::pow(C2, mu2);
}

} // namespace ingham
