#include "ingham/zerodensity.hpp"

#include <cmath>
#include <sstream>

#include "ingham/constants.hpp"
#include "ingham/errors.hpp"
#include "ingham/moment4.hpp"

namespace ingham {
namespace {

namespace C = constants;

double sq(double x) { return x * x; }

// The common factor 1 + (2 + gamma + 7/(36u)) / log u in C5 and C6.
double c56_A(double u) {
  return 1.0 + (2.0 + C::euler_gamma + 7.0 / (36.0 * u)) / std::log(u);
}

// log(1 - 9 A^2 log^2(u) / u); DomainError when the argument is not positive.
double c56_log_term(double u) {
  double lu = std::log(u);
  double arg = 1.0 - 9.0 * sq(c56_A(u)) * sq(lu) / u;
  if (!(arg > 0.0))
    throw DomainError("const_C5/C6: inner log argument not positive");
  return std::log(arg);
}

double zd_exp_sum(const ZDParams& p) {
  // (3 - 2 sigma1) / (2d) + 1 / log T0.
  return (3.0 - 2.0 * p.sigma1) / (2.0 * p.d) + 1.0 / std::log(p.T0);
}

double max_pow(double base, double e1, double e2) {
  return std::max(std::pow(base, e1), std::pow(base, e2));
}

} // namespace

void ZDParams::validate() const {
  if (!(H0 >= 1002.0)) throw DomainError("ZDParams: H0 >= 1002 required");
  if (!(H >= H0)) throw DomainError("ZDParams: H >= H0 required");
  if (!(d > 0.0)) throw DomainError("ZDParams: d > 0 required");
  if (!(kappa > 0.0)) throw DomainError("ZDParams: kappa > 0 required");
  if (!(T0 >= std::max(std::exp(2.0 * d), std::exp(std::exp(1.0)))))
    throw DomainError("ZDParams: T0 >= max(e^{2d}, e^e) required");
  if (!(h >= 1e9 / T0)) throw DomainError("ZDParams: h >= 1e9/T0 required");
  if (!(delta > 0.0 && delta <= 0.5 * std::log(h * T0)))
    throw DomainError("ZDParams: delta in (0, log(h T0)/2] required");
  if (!(0.5 <= sigma1 && sigma1 <= sigma2 && sigma2 <= 1.0))
    throw DomainError("ZDParams: 1/2 <= sigma1 <= sigma2 <= 1 required");
  if (!(A0 >= 1e5)) throw DomainError("ZDParams: A0 >= 1e5 required");
}

double const_C1(double X0) {
  return 6.0 / (M_PI * M_PI) + C::b2 / std::log(X0);
}

double const_C2(double X0) {
  double L = std::log(X0);
  return M_PI * C::m0 * C::b1 / L + 6.0 * C::m0 / (M_PI * X0) +
         M_PI * C::m0 * C::b2 / (X0 * L);
}

double const_C3(double X0, double delta) {
  double L = std::log(X0);
  return (M_PI * C::m0 * C::b4 / (2.0 * delta)) * sq(1.0 + 2.0 * delta / L) *
         std::exp(2.0 * delta * C::euler_gamma / L);
}

double const_C4(double X0, double delta) {
  double L = std::log(X0);
  return (C::b4 / (5.0 * delta * std::exp(delta))) * sq(1.0 + delta / L) +
         C::b3 * std::exp(-2.0 * delta) / (L * L);
}

double const_C5(double u, double h) {
  if (!(u >= 1e9)) throw DomainError("const_C5: u >= 1e9 required");
  double A2 = sq(c56_A(u));
  return -c56_log_term(u) *
         ((3.0 / h + 8.0 * M_PI * C::m0) * (1.0 + C::c5_log_corr / std::log(u))) /
         (9.0 * A2) * std::log(u);
}

double const_C6(double u, double H0) {
  if (!(u >= 1e9)) throw DomainError("const_C6: u >= 1e9 required");
  if (!(H0 >= 1002.0)) throw DomainError("const_C6: H0 >= 1002 required");
  double l2 = std::log(2.0);
  return C::c6_base + (M_PI / l2) * std::log1p(std::pow(u, -1.5)) +
         (4.0 / l2) * std::log((1.0 / (2.0 * M_PI)) *
                               std::sqrt(sq(2.5 / H0) + sq(1.0 + 2.0 / H0))) -
         (2.0 * M_PI / l2) * c56_log_term(u);
}

double const_K(const std::string& name, const ZDParams& p,
               const QuadratureConfig& cfg) {
  p.validate();
  double X0 = p.h * p.T0;
  if (name == "K3") {
    double c3 = const_C3(X0, p.delta);
    double c4 = const_C4(X0, p.delta);
    return integrate_exp_weighted(
               [&](double u) {
                 return c3 + (c4 / p.h) * (std::sqrt(u / (2.0 * p.kappa)) +
                                           M_PI * C::m0 / p.T0);
               },
               0.0, cfg)
        .value;
  }
  if (name == "K2") {
    Bracket integral =
        integrate_exp_weighted([](double u) { return std::sqrt(u); }, 0.0, cfg);
    return std::cbrt(2.0) * std::sqrt(3.0 / (4.0 * p.kappa)) * integral.value +
           std::cbrt(2.0) * (4.0 * p.kappa / 3.0) * std::pow(p.A0 / p.T0, 3);
  }
  if (name == "K1") {
    auto [a1, a2] = a_constants(p.A0);
    double c1 = const_C1(X0);
    double c2 = const_C2(X0);
    double L0 = std::log(p.T0);
    Bracket integral = integrate_exp_weighted(
        [&](double u) {
          double r = 3.0 * u / (4.0 * p.kappa);
          return std::pow(u, 1.0 / 6.0) *
                 std::pow(1.0 + std::log1p(r) / (2.0 * L0), 4.0 / 3.0) *
                 std::pow(c1 * std::sqrt(r) + p.h * c2, 2.0 / 3.0);
        },
        0.0, cfg);
    return std::cbrt(2.0 * a2 * std::sqrt(3.0 / (4.0 * p.kappa))) * integral.value +
           std::cbrt(2.0 * a1) *
               std::pow(p.h * c2 + p.A0 * c1 / p.T0, 2.0 / 3.0) /
               (std::cbrt(p.T0) * std::pow(L0, 4.0 / 3.0));
  }
  throw DomainError("const_K: unknown name: " + name);
}

double const_L(const std::string& name, const ZDParams& p, double K1, double K2,
               double K3) {
  p.validate();
  double lhX = std::log(p.h * p.T0);
  double lT0 = std::log(p.T0);
  if (name == "L0") {
    double inner = (1.0 / (4.0 * p.T0)) * (1.0 + 2.0 * p.delta / lhX);
    return std::exp(p.kappa * (1.0 + sq(inner))) / (1.0 - 1.0 / p.H0);
  }
  double e3 = 3.0 * p.delta / lhX;
  double common = std::max(1.0, std::pow(K3, -e3));
  if (name == "L1") {
    return std::max(1.0, std::pow(K1, e3)) * common *
           std::exp(3.0 * p.delta * std::max(1.0, lT0 / lhX) +
                    4.0 * p.delta * std::max(std::log(lT0) / lhX,
                                             std::log(lT0) / lT0));
  }
  if (name == "L2") {
    return std::max(1.0, std::pow(K2, e3)) * common *
           std::exp(3.0 * p.delta * std::max(1.0, lT0 / lhX));
  }
  throw DomainError("const_L: unknown name: " + name);
}

ZDConsts zd_consts(const ZDParams& p, const QuadratureConfig& cfg) {
  ZDConsts c;
  c.K1 = const_K("K1", p, cfg);
  c.K2 = const_K("K2", p, cfg);
  c.K3 = const_K("K3", p, cfg);
  c.L0 = const_L("L0", p, c.K1, c.K2, c.K3);
  c.L1 = const_L("L1", p, c.K1, c.K2, c.K3);
  c.L2 = const_L("L2", p, c.K1, c.K2, c.K3);
  return c;
}

double frakA(const std::string& name, const ZDParams& p, const ZDConsts& c) {
  p.validate();
  double lT0 = std::log(p.T0);
  double s1 = p.sigma1, s2 = p.sigma2;
  auto sigma_max = [&](double base, auto exponent) {
    return std::max(std::pow(base, exponent(s1)), std::pow(base, exponent(s2)));
  };
  auto eL0 = [](double s) { return 2.0 / (2.0 - s); };
  auto eK3 = [](double s) { return (2.0 * s - 1.0) / (2.0 - s); };
  auto eK = [](double s) { return 3.0 * (1.0 - s) / (2.0 - s); };
  if (name == "A1") {
    return c.L1 * std::exp(p.d * (3.0 + 4.0 * std::log(lT0) / lT0)) *
           std::max(1.0, std::pow(c.L0, -2.0 * p.d / lT0)) *
           std::max(1.0, std::pow(c.K3, -3.0 * p.d / lT0)) *
           std::max(1.0, std::pow(c.K1, 3.0 * p.d / lT0)) *
           sigma_max(c.L0, eL0) * sigma_max(c.K3, eK3) * sigma_max(c.K1, eK);
  }
  if (name == "A2") {
    return c.L2 * std::exp(3.0 * p.d) *
           std::max(1.0, std::pow(c.K2, 3.0 * p.d / lT0)) *
           std::max(1.0, std::pow(c.L0, -2.0 * p.d / lT0)) *
           std::max(1.0, std::pow(c.K3, -3.0 * p.d / lT0)) *
           sigma_max(c.L0, eL0) * sigma_max(c.K3, eK3) * sigma_max(c.K2, eK);
  }
  if (name == "A3") return zd_exp_sum(p) / (M_PI * std::log(2.0));
  if (name == "A4") return 1.5 * zd_exp_sum(p) / std::log(2.0);
  if (name == "A5") {
    double X0 = p.h * p.T0;
    return const_C6(X0, p.H0) * zd_exp_sum(p) / (2.0 * M_PI) +
           const_C5(X0, p.h) / (2.0 * M_PI * p.d);
  }
  throw DomainError("frakA: unknown name: " + name);
}

double fx_bound(double sigma, double T, const ZDParams& p,
                const QuadratureConfig& cfg) {
  p.validate();
  if (!(0.5 <= sigma && sigma <= 1.0))
    throw DomainError("fx_bound: sigma in [1/2, 1] required");
  if (!(T >= p.T0 && T >= p.H))
    throw DomainError("fx_bound: T >= T0 and T >= H required");
  ZDConsts c = zd_consts(p, cfg);
  double lT = std::log(T);
  double lhT = std::log(p.h * T);
  double q = 2.0 - sigma;
  double eT = 3.0 * (1.0 - sigma) / q;
  double term1 = c.L1 * std::exp(eT * (std::log(c.K1) + lT)) *
                 std::pow(lT, 4.0 * (1.0 - sigma) / q) *
                 std::pow(lhT, 2.0 * sigma / q);
  double term2 = c.L2 * std::exp(eT * (std::log(c.K2) + lT)) *
                 std::pow(lhT, 2.0 * (2.0 * sigma - 1.0) / q);
  return std::pow(c.L0, 2.0 / q) * std::pow(c.K3, (2.0 * sigma - 1.0) / q) *
         (term1 + term2);
}

double theorem1_bound(double sigma, double T, const ZDParams& p,
                      const QuadratureConfig& cfg) {
  p.validate();
  if (!(T >= p.H && p.H >= p.H0))
    throw DomainError("theorem1_bound: T >= H >= H0 required");
  if (!(sigma > 0.5 + p.d / std::log(T)))
    throw DomainError("theorem1_bound: sigma <= 1/2 + d/log T excluded");
  if (!(p.sigma1 <= sigma && sigma <= p.sigma2))
    throw DomainError("theorem1_bound: sigma outside [sigma1, sigma2]");
  ZDConsts c = zd_consts(p, cfg);
  double A1 = frakA("A1", p, c), A2 = frakA("A2", p, c);
  double A3 = frakA("A3", p, c), A4 = frakA("A4", p, c), A5 = frakA("A5", p, c);
  double lT = std::log(T);
  double lhT = std::log(p.h * T);
  double q = 2.0 - sigma;
  double mainT = std::exp(3.0 * (1.0 - sigma) / q * lT);
  double main = mainT * (A1 / (2.0 * M_PI * p.d) *
                             std::pow(lhT, 2.0 * sigma / q) *
                             std::pow(lT, (6.0 - 5.0 * sigma) / q) +
                         A2 / (2.0 * M_PI * p.d) *
                             std::pow(lhT, 2.0 * (2.0 * sigma - 1.0) / q) * lT);
  return main + (A3 * std::log(p.H * T) + A4 * lhT + A5) * lT;
}

Corollary1Coeffs corollary1_coeffs(const ZDParams& p,
                                   const QuadratureConfig& cfg) {
  p.validate();
  if (std::fabs(p.T0 - C::H_RH) > 1.0 || std::fabs(p.H0 - C::H_RH) > 1.0 ||
      std::fabs(p.H - C::H_RH) > 1.0 || p.h != 1.0)
    throw DomainError("corollary1_coeffs: requires T0 = H0 = H = H_RH, h = 1");
  if (!(p.d > 0.0 && p.d <= 0.89))
    throw DomainError("corollary1_coeffs: requires 0 < d <= 0.89");
  ZDConsts c = zd_consts(p, cfg);
  double A1 = frakA("A1", p, c), A2 = frakA("A2", p, c);
  double lH = std::log(C::H_RH);
  Corollary1Coeffs out;
  out.B1 = (A1 + A2 * std::pow(lH, -6.0 * (1.0 - p.sigma2) / (2.0 - p.sigma2))) /
           (2.0 * M_PI * p.d);
  out.B2 = frakA("A3", p, c) + frakA("A4", p, c);
  out.B3 = frakA("A3", p, c) * lH + frakA("A5", p, c);
  // Near-critical-line patch: the zero-counting envelope must stay below the
  // corollary bound at T = H_RH with the exponent floored over the exclusion
  // zone sigma in [1/2, 1/2 + d/log T].
  double T = C::H_RH;
  double lT = lH;
  double patch_main = out.B1 *
                      std::exp(-2.0 * p.d / (1.5 - p.d / lT)) * T * lT * lT * lT;
  out.patch_holds =
      nt_upper(T) <= patch_main + out.B2 * lT * lT + out.B3 * lT;
  return out;
}

double nt_upper(double T) {
  if (!(T >= C::H_RH)) throw DomainError("nt_upper: T >= H_RH required");
  return (T / (2.0 * M_PI)) * std::log(T / (2.0 * M_PI * M_E)) +
         C::nt_upper_coeff * std::log(T);
}

const std::array<Table1Row, 16>& table1_rows() {
  static const std::array<Table1Row, 16> rows = {{
      {0.50000, 0.53125, 0.28, 0.36, 0.012, 10.3, 5.360, 9.461, 167.8},
      {0.53125, 0.56250, 0.28, 0.34, 0.025, 10.4, 6.380, 9.168, 162.6},
      {0.56250, 0.59375, 0.28, 0.32, 0.038, 10.4, 7.453, 8.875, 157.4},
      {0.59375, 0.62500, 0.28, 0.30, 0.051, 10.4, 8.604, 8.582, 152.2},
      {0.62500, 0.65625, 0.28, 0.28, 0.066, 10.4, 9.848, 8.290, 147.0},
      {0.65625, 0.68750, 0.28, 0.26, 0.080, 10.4, 11.20, 7.997, 141.9},
      {0.68750, 0.71875, 0.28, 0.24, 0.096, 10.6, 12.65, 7.704, 136.7},
      {0.71875, 0.75000, 0.28, 0.22, 0.112, 10.6, 14.23, 7.411, 131.5},
      {0.75000, 0.78125, 0.28, 0.20, 0.129, 10.6, 15.95, 7.118, 126.3},
      {0.78125, 0.81250, 0.28, 0.18, 0.147, 10.6, 17.84, 6.826, 121.1},
      {0.81250, 0.84375, 0.28, 0.16, 0.166, 10.6, 19.97, 6.533, 115.9},
      {0.84375, 0.87500, 0.28, 0.15, 0.187, 10.6, 22.44, 6.240, 110.7},
      {0.87500, 0.90625, 0.28, 0.13, 0.209, 10.8, 25.51, 5.947, 105.5},
      {0.90625, 0.93750, 0.29, 0.11, 0.234, 10.8, 29.71, 5.463, 96.87},
      {0.93750, 0.96875, 0.29, 0.09, 0.261, 10.8, 36.09, 5.180, 91.86},
      {0.96875, 1.00000, 0.29, 0.07, 0.292, 10.8, 46.92, 4.897, 86.84},
  }};
  return rows;
}

ZDParams table1_params(int row) {
  if (row < 1 || row > 16) throw DomainError("table1_params: row must be 1..16");
  const Table1Row& r = table1_rows()[row - 1];
  ZDParams p;
  p.sigma1 = r.sigma1;
  p.sigma2 = r.sigma2;
  p.d = r.d;
  p.kappa = r.kappa;
  p.delta = r.delta;
  p.A0 = std::pow(10.0, r.log10_A0);
  return p;
}

std::string table1_csv(const QuadratureConfig& cfg, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << "row,sigma1,sigma2,d,kappa,delta,log10_A0,B1,B2,B3,B1_pub,B2_pub,B3_pub\n";
  for (int i = 1; i <= 16; ++i) {
    const Table1Row& r = table1_rows()[i - 1];
    Corollary1Coeffs c = corollary1_coeffs(table1_params(i), cfg);
    out << i << "," << r.sigma1 << "," << r.sigma2 << "," << r.d << ","
        << r.kappa << "," << r.delta << "," << r.log10_A0 << "," << c.B1 << ","
        << c.B2 << "," << c.B3 << "," << r.B1 << "," << r.B2 << "," << r.B3
        << "\n";
  }
  return out.str();
}

std::string table1_json(const QuadratureConfig& cfg) {
  std::ostringstream out;
  out.precision(10);
  out << "[";
  for (int i = 1; i <= 16; ++i) {
    const Table1Row& r = table1_rows()[i - 1];
    Corollary1Coeffs c = corollary1_coeffs(table1_params(i), cfg);
    if (i > 1) out << ",";
    out << "{\"row\":" << i << ",\"sigma1\":" << r.sigma1
        << ",\"sigma2\":" << r.sigma2 << ",\"d\":" << r.d
        << ",\"kappa\":" << r.kappa << ",\"delta\":" << r.delta
        << ",\"log10_A0\":" << r.log10_A0 << ",\"B1\":" << c.B1
        << ",\"B2\":" << c.B2 << ",\"B3\":" << c.B3 << ",\"B1_pub\":" << r.B1
        << ",\"B2_pub\":" << r.B2 << ",\"B3_pub\":" << r.B3
        << ",\"patch_holds\":" << (c.patch_holds ? "true" : "false") << "}";
  }
  out << "]";
  return out.str();
}

} // namespace ingham
