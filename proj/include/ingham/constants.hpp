#pragma once
#include <cmath>

// Single audit point for every printed decimal literal used by the bounds.
// Nothing here is retyped at call sites.
namespace ingham::constants {

inline const double m0 = std::sqrt(1.0 + (2.0 / 3.0) * std::sqrt(6.0 / 5.0));
inline constexpr double euler_gamma = 0.5772156649015328606;

// Second-moment mollifier constants.
inline constexpr double b1 = 0.62;
inline constexpr double b2 = 1.048;
inline constexpr double b3 = 0.605;
inline constexpr double b4 = 0.529;

// Height to which the critical-line zero verification is assumed.
inline constexpr double H_RH = 3e12;

// d^2 summatory coefficients: D1 exact, D2..D4 stored as printed enclosures.
inline constexpr double D1_sumd2_pi = 1.0;  // numerator of D1 = 1/pi^2
inline constexpr double D2_lo = 0.744341, D2_hi = 0.744342;
inline constexpr double D3_lo = 0.823265, D3_hi = 0.823266;
inline constexpr double D4_lo = 0.460323, D4_hi = 0.460324;
inline constexpr double sumd2_remainder = 9.73;     // |D0(x)| <= 9.73 x^{3/4} log x
inline constexpr double two_D2_hi = 1.488684;       // literal 2*0.744342 as printed
inline constexpr double d41_remainder = 17.52;      // tail coefficient in D41
inline constexpr double d7_tail = 4.61;

// chi / Gamma envelope literals.
inline constexpr double chi_left_pow = 0.4;   // |chi| <= 0.4|y|^{1/2-x}+16 on x in [-1/2,0]
inline constexpr double chi_left_add = 16.0;
inline constexpr double chi_right = 6.31;     // |chi| <= 6.31/(1-x) on x in [1/2,1)

// Residue / J0 literals.
inline constexpr double residue_coeff = 12.0;
inline constexpr double j0_residue = 12.1;

// Published headline coefficients.
inline constexpr double c1_published = 20.7225;
inline constexpr double f1_published = 48.801;
inline constexpr double lower_published = 48.942;
inline constexpr double m1_coeff = 0.548;
inline constexpr double third_moment_a = 241.03;
inline constexpr double third_moment_b = 132.1;
inline constexpr double third_moment_a_round = 241.0;
inline constexpr double upper_half_tail = 1.9532e6;
inline constexpr double dyadic_seed_hi = 1.25e6;
inline constexpr double a1_tail = 3.0592e10;
inline constexpr double a2_tail = 2.1817e10;
inline constexpr double nt_upper_coeff = 0.43;

// Lemma C5/C6 literals.
inline constexpr double c5_log_corr = 3.31;
inline constexpr double c6_base = 220.0;

// D6/D7 printed coefficients.
inline constexpr double d6_0 = 0.349436;
inline constexpr double d6_1 = 1.155975;
inline constexpr double d6_2 = 1.28359;
inline constexpr double d6_3 = 154.0;
inline constexpr double d7_1 = 0.12441;
inline constexpr double d7_2 = 0.364;
inline constexpr double d7_3 = 0.3;

inline constexpr double pi = 3.14159265358979323846;

}  // namespace ingham::constants
