#pragma once

#include <array>
#include <string>

#include "ingham/quadrature.hpp"

namespace ingham {

// Zero-density pipeline parameters (sigma interval, heights, and the four
// tunables d, kappa, delta, A0; h is the mollifier length ratio X = hT).
struct ZDParams {
  double sigma1 = 0.5, sigma2 = 0.53125;
  double T0 = 3e12, H0 = 3e12, H = 3e12;
  double d = 0.28;
  double kappa = 0.36;
  double delta = 0.012;
  double h = 1.0;
  double A0 = 1.995262314968880e10; // 10^10.3

  void validate() const;
};

double const_C1(double X0);
double const_C2(double X0);
double const_C3(double X0, double delta);
double const_C4(double X0, double delta);
double const_C5(double u, double h);
double const_C6(double u, double H0);

// name in {"K1", "K2", "K3"}.
double const_K(const std::string& name, const ZDParams& p,
               const QuadratureConfig& cfg = {});

// name in {"L0", "L1", "L2"}; K values as previously computed.
double const_L(const std::string& name, const ZDParams& p, double K1, double K2,
               double K3);

// name in {"A1", ..., "A5"}.
struct ZDConsts {
  double K1 = 0.0, K2 = 0.0, K3 = 0.0;
  double L0 = 0.0, L1 = 0.0, L2 = 0.0;
};
ZDConsts zd_consts(const ZDParams& p, const QuadratureConfig& cfg = {});
double frakA(const std::string& name, const ZDParams& p, const ZDConsts& c);

// Mollified-integral bound of the F_X lemma.
double fx_bound(double sigma, double T, const ZDParams& p,
                const QuadratureConfig& cfg = {});

// Upper bound for N(sigma, T) - N(sigma, H).
double theorem1_bound(double sigma, double T, const ZDParams& p,
                      const QuadratureConfig& cfg = {});

struct Corollary1Coeffs {
  double B1 = 0.0, B2 = 0.0, B3 = 0.0;
  bool patch_holds = false; // near-critical-line patch inequality at T = H_RH
};

// Requires T0 = H0 = H = H_RH, h = 1 and 0 < d <= 0.89.
Corollary1Coeffs corollary1_coeffs(const ZDParams& p,
                                   const QuadratureConfig& cfg = {});

// Zero-counting envelope (T/2pi) log(T/(2 pi e)) + 0.43 log T, T >= H_RH.
double nt_upper(double T);

struct Table1Row {
  double sigma1, sigma2, d, kappa, delta, log10_A0;
  double B1, B2, B3; // published values
};

const std::array<Table1Row, 16>& table1_rows();

// Fill p with the published parameters of row (1-based index).
ZDParams table1_params(int row);

// CSV of published vs recomputed coefficients for every row.
std::string table1_csv(const QuadratureConfig& cfg = {}, int digits = 6);
std::string table1_json(const QuadratureConfig& cfg = {});

} // namespace ingham
