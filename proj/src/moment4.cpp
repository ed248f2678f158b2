#include "ingham/moment4.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "ingham/constants.hpp"
#include "ingham/errors.hpp"
#include "ingham/special.hpp"

namespace ingham {
namespace {

namespace C = constants;

double D(DivisorConstant name, double x0, double s = 0.0) {
  return divisor_constant(name, x0, s);
}

// |Gamma| line-integral values repeat across evaluations with the same shift;
// memoize them (the optimizer re-evaluates F1 thousands of times).
double gamma_moment_cached(double c) {
  static std::map<double, double> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(c);
    if (it != cache.end()) return it->second;
  }
  double v = gamma_abs_moment(c).value;
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(c, v);
  return v;
}

struct Common {
  double T0, L;          // T0 and log T0
  double eta_v, m0;
  double Um;             // U^-(T0)
  double ga, gb;         // a1 (log T0)^a2 and b1 (log T0)^b2
  double Upa, Upb;       // U^+(T0 - ga), U^+(T0 - gb)
  double gm1, gm2;       // int |Gamma(c_i + iu)| du
  double ac1;            // |c1|

  explicit Common(const MomentParams& p) {
    T0 = p.T0;
    L = std::log(T0);
    eta_v = eta(T0);
    m0 = C::m0;
    Um = chi_envelope(T0, -1);
    ga = p.a1 * std::pow(L, p.a2);
    gb = p.b1 * std::pow(L, p.b2);
    Upa = chi_envelope(T0 - ga, +1);
    Upb = chi_envelope(T0 - gb, +1);
    gm1 = gamma_moment_cached(p.c1);
    gm2 = gamma_moment_cached(p.c2);
    ac1 = std::fabs(p.c1);
  }
};

double sq(double x) { return x * x; }
double pow4(double x) { return sq(sq(x)); }

double g1_impl(const MomentParams& p, const Common& w, double s4) {
  double twoPi = 2.0 * M_PI;
  double pref = (1.0 / sq(w.Um)) *
                std::pow(1.0 / M_PI + 1.0 / (twoPi * w.T0), 2.0 * s4 - 1.0) *
                std::pow(1.0 / M_PI + (0.5 + w.ga) / (twoPi * w.T0),
                         2.0 * (1.0 - 2.0 * s4) + 4.0 * w.ac1) *
                pow4(w.Upa) * sq(w.gm1);
  double sA = 2.0 - 2.0 * s4 + 2.0 * w.ac1;
  double sB = 1.0 - 2.0 * s4 + 2.0 * w.ac1;
  double brack = w.eta_v * D(DivisorConstant::D5, w.T0, sA) /
                     (sq(twoPi) * pow4(1.0 - 2.0 * s4 + 2.0 * w.ac1)) +
                 w.m0 * D(DivisorConstant::D5, w.T0, sB) /
                     (twoPi * pow4(2.0 * w.ac1 - 2.0 * s4));
  return pref * brack;
}

double g2_impl(const MomentParams& p, const Common& w, double s4) {
  double twoPi = 2.0 * M_PI;
  double pref = (1.0 / sq(w.Um)) *
                std::pow(1.0 / M_PI + 1.0 / (twoPi * w.T0), 2.0 * s4 - 1.0) *
                std::pow(1.0 / twoPi - w.gb / (twoPi * w.T0),
                         2.0 * (1.0 - 2.0 * (s4 + p.c2))) *
                pow4(w.Upb) * sq(w.gm2);
  double brack = w.eta_v * D(DivisorConstant::D4, w.T0, 2.0 * (1.0 - s4 - p.c2)) /
                     sq(twoPi) +
                 w.m0 * D(DivisorConstant::D4, w.T0, 1.0 - 2.0 * (s4 + p.c2)) /
                     twoPi;
  return pref * brack;
}

double g3_impl(const MomentParams& p, const Common& w, double s5) {
  double twoPi = 2.0 * M_PI;
  double pref = (1.0 / (std::pow(twoPi, 1.0 + 2.0 * s5) * sq(w.Um))) *
                std::pow(1.0 / M_PI + (1.0 + w.ga) / (twoPi * w.T0),
                         2.0 * (1.0 - 2.0 * s5) + 4.0 * w.ac1) *
                pow4(w.Upa) * sq(w.gm1);
  double sA = 2.0 - 2.0 * s5 + 2.0 * w.ac1;
  double sB = 1.0 - 2.0 * s5 + 2.0 * w.ac1;
  double brack = w.eta_v * D(DivisorConstant::D5, w.T0, sA) /
                     pow4(1.0 - 2.0 * s5 + 2.0 * w.ac1) +
                 twoPi * w.m0 * D(DivisorConstant::D5, w.T0, sB) /
                     pow4(2.0 * w.ac1 - 2.0 * s5);
  return pref * brack;
}

double g4_impl(const MomentParams& p, const Common& w, double s5) {
  double twoPi = 2.0 * M_PI;
  double pref = (1.0 / (std::pow(twoPi, 1.0 + 2.0 * s5) * sq(w.Um))) *
                std::pow(1.0 / twoPi - w.gb / (twoPi * w.T0),
                         2.0 * (1.0 - 2.0 * (s5 + p.c2))) *
                pow4(w.Upb) * sq(w.gm2);
  double brack = w.eta_v * D(DivisorConstant::D4, w.T0, 2.0 * (1.0 - s5 - p.c2)) +
                 twoPi * w.m0 *
                     D(DivisorConstant::D4, w.T0, 1.0 - 2.0 * (s5 + p.c2));
  return pref * brack;
}

double g5_impl(const MomentParams& p, const Common& w,
               const QuadratureConfig& cfg) {
  if (p.sigma4 <= 0.5) return 0.0;
  double twoPi = 2.0 * M_PI;
  auto f = [&](double s) {
    double e = 1.0 - 2.0 * (s - w.ac1);
    double sum = std::pow(1.0 + 1.0 / w.T0, s - 0.5) *
                     std::pow(1.0 / twoPi + (0.5 + w.ga) / (twoPi * w.T0), e) +
                 std::pow(1.0 + 1.0 / (2.0 * w.T0), s - 0.5) *
                     std::pow(1.0 / M_PI + (0.5 + w.ga) / (twoPi * w.T0), e);
    return sum * D(DivisorConstant::D2, w.T0, 1.0 - s + w.ac1) /
           (s * sq(s - w.ac1));
  };
  return integrate_finite(f, 0.5, p.sigma4, cfg).value;
}

double g6_impl(const MomentParams& p, const Common& w,
               const QuadratureConfig& cfg) {
  if (p.sigma4 <= 0.5) return 0.0;
  double twoPi = 2.0 * M_PI;
  auto f = [&](double s) {
    double e = 1.0 - 2.0 * (s + p.c2);
    double sum = std::pow(1.0 + 1.0 / w.T0, s - 0.5) *
                     std::pow(1.0 / twoPi - w.gb / (twoPi * w.T0), e) +
                 std::pow(1.0 + 1.0 / (2.0 * w.T0), s - 0.5) *
                     std::pow(1.0 / M_PI - w.gb / (twoPi * w.T0), e);
    return sum / (s * (s + p.c2));
  };
  return integrate_finite(f, 0.5, p.sigma4, cfg).value;
}

double g7_impl(const MomentParams& p, const Common& w,
               const QuadratureConfig& cfg) {
  if (p.sigma5 >= 0.5) return 0.0;
  double twoPi = 2.0 * M_PI;
  auto f = [&](double s) {
    double e = 1.0 - 2.0 * (s - w.ac1);
    double sum = std::pow(twoPi, 1.0 - 2.0 * s) *
                     std::pow(1.0 / twoPi + (1.0 + w.ga) / (twoPi * w.T0), e) +
                 std::pow(M_PI, 1.0 - 2.0 * s) *
                     std::pow(1.0 / M_PI + (1.0 + w.ga) / (twoPi * w.T0), e);
    return sum * D(DivisorConstant::D2, w.T0, 1.0 - s + w.ac1) /
           ((1.0 - s) * sq(s - w.ac1));
  };
  return integrate_finite(f, p.sigma5, 0.5, cfg).value;
}

double g8_impl(const MomentParams& p, const Common& w,
               const QuadratureConfig& cfg) {
  if (p.sigma5 >= 0.5) return 0.0;
  double twoPi = 2.0 * M_PI;
  auto f = [&](double s) {
    double e = 1.0 - 2.0 * (s + p.c2);
    double sum = std::pow(twoPi, 1.0 - 2.0 * s) *
                     std::pow(1.0 / twoPi - w.gb / (twoPi * w.T0), e) +
                 std::pow(M_PI, 1.0 - 2.0 * s) *
                     std::pow(1.0 / M_PI - w.gb / (twoPi * w.T0), e);
    return sum / ((1.0 - s) * (s + p.c2));
  };
  return integrate_finite(f, p.sigma5, 0.5, cfg).value;
}

double G1_impl(const MomentParams& p, const Common& w) {
  double twoPi = 2.0 * M_PI;
  double s2 = p.sigma2, s3 = p.sigma3;
  double d7 = D(DivisorConstant::D7, w.T0);
  double common = std::sqrt(w.eta_v + twoPi * w.m0) * std::sqrt(d7);
  double t1 = (1.0 / sq(w.Um)) * std::pow(2.0 + 1.0 / w.T0, s2 - 0.5) *
              std::sqrt(w.eta_v * D(DivisorConstant::D4, w.T0, 2.0 - 2.0 * s2) +
                        twoPi * w.m0 * D(DivisorConstant::D4, w.T0, 1.0 - 2.0 * s2)) *
              (common +
               std::sqrt(w.eta_v * D(DivisorConstant::D4, w.T0, 2.0 * s2 - 2.0) +
                         twoPi * w.m0 * D(DivisorConstant::D4, w.T0, 2.0 * s2 - 3.0)));
  double t2 = (std::pow(twoPi, 1.0 - 2.0 * s3) / sq(w.Um)) *
              std::sqrt(w.eta_v * D(DivisorConstant::D4, w.T0, 2.0 * s3) +
                        twoPi * w.m0 * D(DivisorConstant::D4, w.T0, 2.0 * s3 - 1.0)) *
              (common +
               std::sqrt(w.eta_v * D(DivisorConstant::D4, w.T0, 2.0 * s3 - 2.0) +
                         twoPi * w.m0 * D(DivisorConstant::D4, w.T0, 2.0 * s3 - 3.0)));
  return t1 + t2;
}

double G2_impl(const MomentParams& p, const Common& w,
               const QuadratureConfig& cfg) {
  double twoPi = 2.0 * M_PI;
  double d10 = D(DivisorConstant::D1, w.T0, 0.0);
  double d3 = D(DivisorConstant::D3, w.T0);
  auto inner = [&](double u) {
    return D(DivisorConstant::D1, w.T0, u - 1.0) / (2.0 - u) + d3;
  };
  double i1 = 0.0;
  if (p.sigma2 > 0.5)
    i1 = integrate_finite(
             [&](double u) {
               return (std::pow(1.0 + 1.0 / w.T0, u - 0.5) +
                       std::pow(1.0 + 1.0 / (2.0 * w.T0), u - 0.5)) *
                      inner(u) / u;
             },
             0.5, p.sigma2, cfg)
             .value;
  double i2 = 0.0;
  if (p.sigma3 < 0.5)
    i2 = integrate_finite(
             [&](double u) {
               return (std::pow(twoPi, 1.0 - 2.0 * u) +
                       std::pow(M_PI, 1.0 - 2.0 * u)) *
                      inner(u) / (1.0 - u);
             },
             p.sigma3, 0.5, cfg)
             .value;
  return (d10 / sq(w.Um)) * (i1 + i2);
}

double G3_impl(const MomentParams& p, const Common& w,
               const QuadratureConfig& cfg) {
  double twoPi = 2.0 * M_PI;
  double s4 = p.sigma4;
  return (std::pow(twoPi, s4) / w.Um) *
         std::sqrt(w.eta_v / twoPi *
                       D(DivisorConstant::D4, w.T0, 2.0 * (1.0 - s4)) +
                   w.m0 * D(DivisorConstant::D4, w.T0, 1.0 - 2.0 * s4)) *
         (std::sqrt(g1_impl(p, w, s4)) + std::sqrt(g2_impl(p, w, s4)));
}

double G4_impl(const MomentParams& p, const Common& w,
               const QuadratureConfig& cfg) {
  double twoPi = 2.0 * M_PI;
  double s5 = p.sigma5;
  return (std::pow(twoPi, 0.5 - s5) / w.Um) *
         std::sqrt(w.eta_v * D(DivisorConstant::D4, w.T0, 2.0 * s5) +
                   twoPi * w.m0 * D(DivisorConstant::D4, w.T0, 2.0 * s5 - 1.0)) *
         (std::sqrt(g3_impl(p, w, s5)) + std::sqrt(g4_impl(p, w, s5)));
}

double G5_impl(const MomentParams& p, const Common& w,
               const QuadratureConfig& cfg) {
  double twoPi = 2.0 * M_PI;
  double d10 = D(DivisorConstant::D1, w.T0, 0.0);
  double d1h = D(DivisorConstant::D1, w.T0, -0.5);
  return (d10 / twoPi) * sq(w.Upa / w.Um) * g5_impl(p, w, cfg) * w.gm1 +
         (d10 * d1h / twoPi) * sq(w.Upb / w.Um) * g6_impl(p, w, cfg) * w.gm2;
}

double G6_impl(const MomentParams& p, const Common& w,
               const QuadratureConfig& cfg) {
  double twoPi = 2.0 * M_PI;
  double d10 = D(DivisorConstant::D1, w.T0, 0.0);
  return (d10 / twoPi) * sq(w.Upa / w.Um) * g7_impl(p, w, cfg) * w.gm1 +
         (1.0 / twoPi) * sq(d10 * w.Upb / w.Um) * g8_impl(p, w, cfg) * w.gm2;
}

double J1_impl(const Common& w) {
  return 2.0 * w.eta_v * D(DivisorConstant::D6, w.T0) +
         4.0 * M_PI * w.m0 * D(DivisorConstant::D4, w.T0, 0.0) +
         w.m0 * w.L / (2.0 * M_PI * w.T0);
}

double J21_impl(const MomentParams& p, const Common& w,
                const QuadratureConfig& cfg) {
  double twoPi = 2.0 * M_PI;
  double s1 = p.sigma1;
  double t1 = (2.0 * std::pow(twoPi, 1.0 - 2.0 * s1) / sq(w.Um)) *
              (w.eta_v * D(DivisorConstant::D4, w.T0, 2.0 * s1) +
               twoPi * w.m0 * D(DivisorConstant::D4, w.T0, 2.0 * s1 - 1.0));
  double integral = 0.0;
  if (s1 < 0.5)
    integral = integrate_finite(
                   [&](double u) {
                     return (std::pow(twoPi, 1.0 - 2.0 * u) +
                             std::pow(M_PI, 1.0 - 2.0 * u)) /
                            sq(1.0 - u);
                   },
                   s1, 0.5, cfg)
                   .value;
  double t2 = (2.0 / w.L) * sq(D(DivisorConstant::D1, w.T0, 0.0) / w.Um) * integral;
  return t1 + t2;
}

double J22_impl(const MomentParams& p, const Common& w,
                const QuadratureConfig& cfg) {
  return G1_impl(p, w) + G3_impl(p, w, cfg) + G4_impl(p, w, cfg) +
         (G2_impl(p, w, cfg) + G5_impl(p, w, cfg) + G6_impl(p, w, cfg)) / w.L;
}

double J3_impl(const Common& w) {
  return (w.eta_v + 2.0 * M_PI * w.m0) * D(DivisorConstant::D7, w.T0);
}

double J4_impl(const Common& w) {
  return w.eta_v * D(DivisorConstant::D4, w.T0, -1.0) +
         2.0 * M_PI * w.m0 * D(DivisorConstant::D4, w.T0, -2.0);
}

double J01_impl(const MomentParams& p, const Common& w,
                const QuadratureConfig& cfg) {
  double ac = w.ac1;
  // int_4^inf (1 + u/(2 T0))^{2|c1|} e^{-u/2} u^{-|c1|-1/2} du, via u = 2v.
  Bracket integral = integrate_exp_weighted(
      [&](double v) {
        return 2.0 * std::pow(1.0 + v / w.T0, 2.0 * ac) *
               std::pow(2.0 * v, -ac - 0.5);
      },
      2.0, cfg);
  return std::pow(2.0, 2.0 * ac) * std::sqrt(2.0 / M_PI) *
         sq(0.4 + 16.0 / std::pow(2.0 * w.T0 + w.ga, ac)) *
         std::exp(1.0 / (2.0 * sq(p.a1) * std::pow(w.L, 2.0 * p.a2))) *
         D(DivisorConstant::D2, w.T0, 0.5 + ac) / sq(ac - 0.5) * integral.value;
}

double J02_impl(const MomentParams& p, const Common& w) {
  return (2.0 / std::exp(4.0)) * std::sqrt(2.0 / M_PI) *
         sq(6.31 / (0.5 - p.c2)) *
         std::exp(1.0 / (2.0 * sq(p.b1) * std::pow(w.L, 2.0 * p.b2))) *
         std::pow(w.gb, p.c2 - 0.5) * D(DivisorConstant::D1, w.T0, 0.0) /
         (0.5 + p.c2);
}

double J0_impl(const MomentParams& p, const Common& w,
               const QuadratureConfig& cfg) {
  double j01 = J01_impl(p, w, cfg);
  double j02 = J02_impl(p, w);
  // T0 powers in log space: the exponents are strongly negative at sane T0.
  double pa = std::exp((1.0 - p.a1 * std::pow(w.L, p.a2 - 1.0)) * w.L);
  double pb = std::exp((2.0 - p.b1 * std::pow(w.L, p.b2 - 1.0)) * w.L);
  return 3.5 * ((1.0 + (3.0 / 14.0) * j01) * j01 * pa +
                (1.0 + (3.0 / 14.0) * j02) * j02 * pb +
                12.1 * w.T0 * std::exp(-M_PI * w.T0 / 2.0));
}

double J5_impl(const MomentParams& p, const Common& w) {
  return g1_impl(p, w, 0.5);
}

double J6_impl(const MomentParams& p, const Common& w) {
  return g2_impl(p, w, 0.5);
}

double cross_terms(const double J[7]) {
  double s = 0.0;
  for (int n = 3; n <= 6; ++n)
    for (int m = n + 1; m <= 6; ++m) s += std::sqrt(J[n] * J[m]);
  return s;
}

void fill_j3456(const MomentParams& p, const Common& w, double J[7]) {
  J[3] = J3_impl(w);
  J[4] = J4_impl(w);
  J[5] = J5_impl(p, w);
  J[6] = J6_impl(p, w);
}

double F1_impl(const MomentParams& p, const Common& w,
               const QuadratureConfig& cfg) {
  double J[7] = {0};
  fill_j3456(p, w, J);
  double sum36 = J[3] + J[4] + J[5] + J[6];
  return J0_impl(p, w, cfg) + J1_impl(w) + J21_impl(p, w, cfg) +
         2.0 * J22_impl(p, w, cfg) + sum36 + 2.0 * cross_terms(J);
}

double F2_impl(const MomentParams& p, const Common& w,
               const QuadratureConfig& cfg) {
  double J[7] = {0};
  fill_j3456(p, w, J);
  double sum36 = J[3] + J[4] + J[5] + J[6];
  return J0_impl(p, w, cfg) + 2.0 * J1_impl(w) + sum36 + 2.0 * cross_terms(J);
}

double C1_impl(const MomentParams& p, const Common& w,
               const QuadratureConfig& cfg) {
  double J[7] = {0};
  fill_j3456(p, w, J);
  double j1 = J1_impl(w);
  double lg = std::log(w.T0 / 2.0);
  double s = 0.0;
  for (int n = 3; n <= 6; ++n)
    s += std::sqrt(J[n] / (M_PI * M_PI) + 2.0 * j1 * J[n] / lg);
  return 2.0 * s + F2_impl(p, w, cfg) / std::sqrt(lg);
}

} // namespace

void MomentParams::validate() const {
  if (!(T0 >= 55.0)) throw DomainError("MomentParams: T0 >= 55 required");
  if (!(c1 > -1.0 && c1 < -0.5))
    throw DomainError("MomentParams: c1 in (-1, -1/2) required");
  if (!(c2 > 0.0 && c2 < 0.5))
    throw DomainError("MomentParams: c2 in (0, 1/2) required");
  if (!(sigma1 >= 0.0 && sigma1 < 0.5))
    throw DomainError("MomentParams: sigma1 in [0, 1/2) required");
  if (!(sigma2 > 0.5 && sigma2 <= 1.0))
    throw DomainError("MomentParams: sigma2 in (1/2, 1] required");
  if (!(sigma3 >= 0.0 && sigma3 < 0.5))
    throw DomainError("MomentParams: sigma3 in [0, 1/2) required");
  if (!(sigma4 > 0.5 && sigma4 < std::fabs(c1)))
    throw DomainError("MomentParams: sigma4 in (1/2, |c1|) required");
  if (!(sigma5 > 0.5 - c2 && sigma5 < 0.5))
    throw DomainError("MomentParams: sigma5 in (1/2 - c2, 1/2) required");
  if (!(a1 > 0.0 && a2 > 1.0))
    throw DomainError("MomentParams: a1 > 0 and a2 > 1 required");
  if (!(b1 > 0.0 && b2 > 1.0))
    throw DomainError("MomentParams: b1 > 0 and b2 > 1 required");
}

VerificationReport check_growth_conditions(const MomentParams& p, double T,
                                           bool require_all_T) {
  p.validate();
  double L0 = std::log(p.T0);
  struct Cond { double lhs, rhs; }; // requires lhs <= rhs
  std::vector<Cond> conds;
  auto cutoff = [&](double a1, double a2, double t) {
    return a1 * std::pow(std::log(t), a2);
  };
  for (int which = 0; which < 2; ++which) {
    double e1 = which ? p.b1 : p.a1;
    double e2 = which ? p.b2 : p.a2;
    double floor_lhs = which ? 2.0 : 1.0; // e1 (log T0)^{e2-1} >= 1 resp. 2
    conds.push_back({2.0, p.T0 - cutoff(e1, e2, p.T0)});
    conds.push_back({floor_lhs, e1 * std::pow(L0, e2 - 1.0)});
    if (require_all_T) {
      conds.push_back({e2, L0});
      conds.push_back({e1 * e2 * std::pow(L0, e2 - 1.0), p.T0});
    } else {
      if (!(T >= p.T0)) throw DomainError("check_growth_conditions: T >= T0 required");
      conds.push_back({p.T0 - cutoff(e1, e2, p.T0), T - cutoff(e1, e2, T)});
      conds.push_back({std::pow(std::log(T), e2) / T,
                       std::pow(L0, e2) / p.T0});
    }
  }
  VerificationReport r;
  r.id = require_all_T ? "growth_conditions_all_T" : "growth_conditions";
  r.holds = true;
  r.margin = HUGE_VAL;
  for (const auto& c : conds) {
    double m = c.rhs - c.lhs;
    if (m < r.margin) {
      r.margin = m;
      r.lhs = c.lhs;
      r.rhs = c.rhs;
    }
    if (!(c.lhs <= c.rhs)) r.holds = false;
  }
  return r;
}

double eta(double T0) {
  if (!(T0 > 0.0)) throw DomainError("eta: T0 > 0 required");
  return 1.0 + M_PI * constants::m0 / T0;
}

double chi_envelope(double y0, int sign) {
  if (!(y0 >= 2.0)) throw DomainError("chi_envelope: y0 >= 2 required");
  if (sign > 0)
    return std::exp(0.5 / (y0 * y0)) / (1.0 - std::exp(-M_PI * y0));
  return std::exp(-0.5 / (y0 * y0)) / (1.0 + std::exp(-M_PI * y0));
}

double g_constant(int n, const MomentParams& p, double sigma,
                  const QuadratureConfig& cfg) {
  p.validate();
  Common w(p);
  switch (n) {
    case 1: return g1_impl(p, w, sigma < 0.0 ? p.sigma4 : sigma);
    case 2: return g2_impl(p, w, sigma < 0.0 ? p.sigma4 : sigma);
    case 3: return g3_impl(p, w, sigma < 0.0 ? p.sigma5 : sigma);
    case 4: return g4_impl(p, w, sigma < 0.0 ? p.sigma5 : sigma);
    case 5: return g5_impl(p, w, cfg);
    case 6: return g6_impl(p, w, cfg);
    case 7: return g7_impl(p, w, cfg);
    case 8: return g8_impl(p, w, cfg);
  }
  throw DomainError("g_constant: n must be 1..8");
}

double G_constant(int n, const MomentParams& p, const QuadratureConfig& cfg) {
  p.validate();
  Common w(p);
  switch (n) {
    case 1: return G1_impl(p, w);
    case 2: return G2_impl(p, w, cfg);
    case 3: return G3_impl(p, w, cfg);
    case 4: return G4_impl(p, w, cfg);
    case 5: return G5_impl(p, w, cfg);
    case 6: return G6_impl(p, w, cfg);
  }
  throw DomainError("G_constant: n must be 1..6");
}

double j_constant(const std::string& name, const MomentParams& p,
                  const QuadratureConfig& cfg) {
  p.validate();
  Common w(p);
  if (name == "J1") return J1_impl(w);
  if (name == "J21") return J21_impl(p, w, cfg);
  if (name == "J22") return J22_impl(p, w, cfg);
  if (name == "J3") return J3_impl(w);
  if (name == "J4") return J4_impl(w);
  if (name == "J5") return J5_impl(p, w);
  if (name == "J6") return J6_impl(p, w);
  if (name == "J01") return J01_impl(p, w, cfg);
  if (name == "J02") return J02_impl(p, w);
  if (name == "J0") return J0_impl(p, w, cfg);
  if (name == "F1") return F1_impl(p, w, cfg);
  if (name == "F2") return F2_impl(p, w, cfg);
  if (name == "C1") return C1_impl(p, w, cfg);
  throw DomainError("j_constant: unknown name: " + name);
}

std::string constant_breakdown_json(const MomentParams& p,
                                    const QuadratureConfig& cfg) {
  p.validate();
  Common w(p);
  std::ostringstream out;
  out.precision(17);
  out << "{";
  const char* gnames[] = {"g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8"};
  for (int n = 1; n <= 8; ++n)
    out << "\"" << gnames[n - 1] << "\":" << g_constant(n, p, -1.0, cfg) << ",";
  const char* Gnames[] = {"G1", "G2", "G3", "G4", "G5", "G6"};
  for (int n = 1; n <= 6; ++n)
    out << "\"" << Gnames[n - 1] << "\":" << G_constant(n, p, cfg) << ",";
  const char* jnames[] = {"J0", "J01", "J02", "J1", "J21", "J22",
                          "J3", "J4",  "J5",  "J6", "F1",  "F2", "C1"};
  for (int i = 0; i < 13; ++i) {
    out << "\"" << jnames[i] << "\":" << j_constant(jnames[i], p, cfg);
    if (i + 1 < 13) out << ",";
  }
  out << "}";
  return out.str();
}

Theorem2Interval theorem2_interval(double T, const MomentParams& p,
                                   const QuadratureConfig& cfg) {
  VerificationReport cond = check_growth_conditions(p, T);
  if (!cond.holds)
    throw DomainError("theorem2_interval: growth conditions violated");
  Common w(p);
  double lg = std::log(T);
  double lg3 = lg * lg * lg;
  Theorem2Interval out;
  out.center = T * lg3 * lg / (2.0 * M_PI * M_PI);
  out.radius = F1_impl(p, w, cfg) * T * lg3;
  double J[7] = {0};
  fill_j3456(p, w, J);
  double j1 = J1_impl(w);
  double s = 0.0;
  for (int n = 3; n <= 6; ++n)
    s += std::sqrt(J[n] / (M_PI * M_PI) * lg + 2.0 * j1 * J[n]);
  out.upper = T * lg3 * lg / (M_PI * M_PI) +
              (2.0 * s + F2_impl(p, w, cfg)) * T * lg3;
  return out;
}

DyadicBounds dyadic_bounds(double T, double T0, const MomentParams& p,
                           const Bracket& M2_seed, const QuadratureConfig& cfg) {
  if (!(T >= T0)) throw DomainError("dyadic_bounds: T >= T0 required");
  if (std::fabs(T0 - p.T0) > 1e-9 * p.T0)
    throw DomainError("dyadic_bounds: T0 must match p.T0");
  VerificationReport cond = check_growth_conditions(p, p.T0, true);
  if (!cond.holds) throw DomainError("dyadic_bounds: growth conditions violated");
  Common w(p);
  double lg = std::log(T / 2.0);
  double lg3 = lg * lg * lg;
  double lg4 = lg3 * lg;
  double f1 = F1_impl(p, w, cfg);
  DyadicBounds out;
  out.upper4 = T * lg4 / (2.0 * M_PI * M_PI) + f1 * T * lg3 + M2_seed.upper();
  out.lower = T * lg4 / (2.0 * M_PI * M_PI) -
              (2.0 * std::log(2.0) / (M_PI * M_PI) + f1) * T * lg3 -
              T0 * lg4 / (M_PI * M_PI);
  double J[7] = {0};
  fill_j3456(p, w, J);
  double j1 = J1_impl(w);
  double s = 0.0;
  for (int n = 3; n <= 6; ++n)
    s += std::sqrt(J[n] / (M_PI * M_PI) * lg + 2.0 * j1 * J[n]);
  out.upper_large = T * lg4 / (M_PI * M_PI) +
                    (2.0 * s + F2_impl(p, w, cfg)) * T * lg3 + M2_seed.upper();
  return out;
}

Corollary2Bounds corollary2_bounds(double T) {
  if (!(T >= 3000.0))
    throw DomainError("corollary2_bounds: T >= 3000 required");
  Corollary2Bounds out;
  double lg = std::log(T / 2.0);
  double lg3 = lg * lg * lg;
  out.upper_half_power = T * lg3 * lg / (M_PI * M_PI) +
                         constants::c1_published * T * lg3 * std::sqrt(lg) +
                         constants::upper_half_tail;
  if (T >= 1e5) {
    double center = T * lg3 * lg / (2.0 * M_PI * M_PI);
    out.upper_asymptotic = center + constants::f1_published * T * lg3 +
                           constants::a1_tail;
    out.lower_asymptotic =
        center - (constants::lower_published +
                  1e5 * std::log(T) / (M_PI * M_PI * T)) * T * lg3;
  } else {
    out.upper_asymptotic = HUGE_VAL;
    out.lower_asymptotic = -HUGE_VAL;
  }
  return out;
}

std::pair<double, double> a_constants(double A0) {
  if (!(A0 >= 1e5)) throw DomainError("a_constants: A0 >= 1e5 required");
  double lgh = std::log(A0 / 2.0);
  double lg = std::log(A0);
  double a1 = A0 * lgh * lgh * lgh * lgh / (2.0 * M_PI * M_PI) +
              constants::f1_published * A0 * lgh * lgh * lgh + constants::a1_tail;
  double r = 1.0 - std::log(2.0) / lg;
  double a2 = r * r * r * r / (2.0 * M_PI * M_PI) +
              constants::f1_published / lg * r * r * r +
              constants::a2_tail / (A0 * lg * lg * lg * lg);
  return {a1, a2};
}

double third_moment_coeff(double T0) {
  if (!(T0 >= 1e5)) throw DomainError("third_moment_coeff: T0 >= 1e5 required");
  double L = std::log(T0);
  return std::sqrt(1.0 / (2.0 * M_PI * M_PI) + constants::third_moment_a / L +
                   constants::third_moment_b / (L * L));
}

double residue_bound(double T) {
  if (!(T >= 5.0)) throw DomainError("residue_bound: T >= 5 required");
  return 12.0 * std::sqrt(T) * std::exp(-M_PI * T / 2.0) * std::log(T);
}

double zeta_sixth_envelope(double t, double T) {
  if (!(T >= 3.0 && t >= T && t <= 2.0 * T))
    throw DomainError("zeta_sixth_envelope: need T >= 3 and t in [T, 2T]");
  return std::pow(2.0 * T, 1.0 / 6.0) * std::log(2.0 * T);
}

} // namespace ingham
