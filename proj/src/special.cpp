#include "ingham/special.hpp"

#include <cmath>
#include <limits>

#include "ingham/constants.hpp"
#include "ingham/errors.hpp"

namespace ingham {
namespace {

using std::abs;
using std::complex;
using std::cos;
using std::exp;
using std::log;
using std::sin;

constexpr double kPi = constants::pi;

// Lanczos g=7, n=9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

complex<double> lanczos_log_gamma(complex<double> z) {
  // Valid for Re(z) >= 0.5.
  z -= 1.0;
  complex<double> a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  complex<double> t = z + 7.5;
  return 0.5 * log(2.0 * kPi) + (z + 0.5) * log(t) - t + log(a);
}

// log |sin(w)| for complex w, stable for large |Im w|.
double log_abs_sin(double re, double im) {
  double aim = abs(im);
  if (aim > 20.0) return aim - std::log(2.0);  // |1 - e^{-2|im|}e^{2i re}| = 1 + O(1e-17)
  double s = sin(re) * std::cosh(im);
  double c = cos(re) * std::sinh(im);
  return 0.5 * std::log(s * s + c * c);
}

// log |cos(w)|, same treatment.
double log_abs_cos(double re, double im) {
  double aim = abs(im);
  if (aim > 20.0) return aim - std::log(2.0);
  double c = cos(re) * std::cosh(im);
  double s = sin(re) * std::sinh(im);
  return 0.5 * std::log(c * c + s * s);
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.real() < 0.5)
    throw DomainError("log_gamma: use log_abs_gamma for Re(z) < 1/2");
  return lanczos_log_gamma(z);
}

double log_abs_gamma(double x, double y) {
  if (x >= 0.5) return lanczos_log_gamma({x, y}).real();
  if (y == 0.0 && x <= 0.0 && x == std::floor(x))
    throw DomainError("log_abs_gamma: pole at non-positive integer");
  // Reflection: |Gamma(z)| = pi / (|sin(pi z)| |Gamma(1-z)|).
  return std::log(kPi) - log_abs_sin(kPi * x, kPi * y) -
         lanczos_log_gamma({1.0 - x, -y}).real();
}

Bracket abs_gamma(double x, double y) {
  double lg = log_abs_gamma(x, y);
  double v = exp(lg);
  return {v, 5e-13 * v + 5e-300};
}

Bracket gamma_abs_moment(double c, const QuadratureConfig& cfg) {
  if (c <= 0.0 && c == std::floor(c))
    throw DomainError("gamma_abs_moment: pole at non-positive integer");
  // |Gamma(c+iu)| ~ sqrt(2 pi)|u|^{c-1/2} e^{-pi|u|/2}: rescale to the e^{-u}
  // weight via u = (2/pi) w so integrate_exp_weighted handles the tail.
  auto g = [c](double w) {
    double u = (2.0 / kPi) * w;
    return (2.0 / kPi) * std::exp(log_abs_gamma(c, u) + w);
  };
  // Split off [0, 2] directly (integrand peak, no weight games needed).
  QuadratureConfig inner = cfg;
  inner.rel_tol = std::min(cfg.rel_tol, 1e-10);
  Bracket head = integrate_finite([c](double u) { return exp(log_abs_gamma(c, u)); },
                                  0.0, 2.0, inner);
  Bracket tail = integrate_exp_weighted(g, kPi, inner);  // w >= pi  <=>  u >= 2
  Bracket half = head + tail;
  return half * 2.0;
}

double log_abs_chi(double x, double t) {
  if (t == 0.0 && x >= 1.0 && std::fmod(x - 1.0, 2.0) == 0.0)
    throw DomainError("log_abs_chi: pole of chi on the real axis");
  return x * std::log(2.0 * kPi) - std::log(2.0) - log_abs_gamma(x, t) -
         log_abs_cos(kPi * x / 2.0, kPi * t / 2.0);
}

Bracket abs_chi(double x, double t) {
  double v = exp(log_abs_chi(x, t));
  return {v, 2e-12 * v + 5e-300};
}

}  // namespace ingham
