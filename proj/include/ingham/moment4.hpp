#pragma once

#include <string>

#include "ingham/bracket.hpp"
#include "ingham/divisor.hpp"
#include "ingham/quadrature.hpp"

namespace ingham {

// Parameter set for the fourth-moment constants: T0, the shifts c = (c1, c2),
// the abscissas sigma1..sigma5 and the cutoff exponents a = (a1, a2),
// b = (b1, b2).
struct MomentParams {
  double T0 = 1e5;
  double c1 = -0.938, c2 = 0.194;
  double sigma1 = 0.368;
  double sigma2 = 0.718, sigma3 = 0.435;
  double sigma4 = 0.629, sigma5 = 0.3654;
  double a1 = 1.99, a2 = 1.44;
  double b1 = 1.33, b2 = 1.45;

  void validate() const; // throws DomainError on structural violations
};

// Per-T growth conditions (require_all_T=false) or the sufficient conditions
// for every T >= T0 (require_all_T=true). Failures are reported, not thrown.
VerificationReport check_growth_conditions(const MomentParams& p, double T,
                                           bool require_all_T = false);

double eta(double T0);

// U^+ (sign=+1) / U^- (sign=-1) envelope for |chi(1/2 +- iy)| on y >= y0 >= 2.
double chi_envelope(double y0, int sign);

// g1..g8 evaluators. For n in {1,2} sigma defaults to sigma4 (1/2 allowed);
// for n in {3,4} sigma defaults to sigma5; ignored for n in {5..8}.
double g_constant(int n, const MomentParams& p, double sigma = -1.0,
                  const QuadratureConfig& cfg = {});

double G_constant(int n, const MomentParams& p, const QuadratureConfig& cfg = {});

// name in {J1, J21, J22, J3, J4, J5, J6, J01, J02, J0, F1, F2, C1}.
double j_constant(const std::string& name, const MomentParams& p,
                  const QuadratureConfig& cfg = {});

// JSON object with every g, G, J, F value for p, keyed by symbol name.
std::string constant_breakdown_json(const MomentParams& p,
                                    const QuadratureConfig& cfg = {});

struct Theorem2Interval {
  double center = 0.0;  // (1/2pi^2) T log^4 T
  double radius = 0.0;  // F1 T log^3 T
  double upper = 0.0;   // (1/pi^2) T log^4 T + (...) T log^3 T
};

// Two-sided enclosure of M2(T, 2T) plus the separate one-sided upper bound.
Theorem2Interval theorem2_interval(double T, const MomentParams& p,
                                   const QuadratureConfig& cfg = {});

struct DyadicBounds {
  double upper4 = 0.0;      // leading coefficient 1/(2 pi^2)
  double lower = 0.0;
  double upper_large = 0.0; // leading coefficient 1/pi^2
};

// Bounds on M2(T0, T); M2_seed must enclose M2(T0, 2 T0).
DyadicBounds dyadic_bounds(double T, double T0, const MomentParams& p,
                           const Bracket& M2_seed,
                           const QuadratureConfig& cfg = {});

struct Corollary2Bounds {
  double upper_half_power = 0.0; // valid T >= 3000
  double upper_asymptotic = 0.0; // valid T >= 1e5
  double lower_asymptotic = 0.0; // valid T >= 1e5
};

Corollary2Bounds corollary2_bounds(double T);

// (a1(A0), a2(A0)) of the cumulative fourth-moment bounds, A0 >= 1e5.
std::pair<double, double> a_constants(double A0);

double third_moment_coeff(double T0);

double residue_bound(double T);

double zeta_sixth_envelope(double t, double T);

} // namespace ingham
