#include "ingham/zeta.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "ingham/constants.hpp"
#include "ingham/errors.hpp"

namespace ingham {
namespace {

using std::complex;

constexpr double kPi = constants::pi;
constexpr double kTwoPi = 2.0 * kPi;

// B_{2k}/(2k)! for k = 1..12.
constexpr double kBernoulliFact[12] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    854513.0 / 1.5511210043330986e23,
    -236364091.0 / 1.6938241367317436e27,
};

// Precomputed log n and 1/sqrt(n) tables for the critical-line sums.
struct NTables {
  std::vector<double> logn, rsqrt;
  explicit NTables(std::size_t n) : logn(n + 1), rsqrt(n + 1) {
    for (std::size_t k = 1; k <= n; ++k) {
      logn[k] = std::log(static_cast<double>(k));
      rsqrt[k] = 1.0 / std::sqrt(static_cast<double>(k));
    }
  }
};

const NTables& tables() {
  static const NTables t(4096);
  return t;
}

// ---------------------------------------------------------------------------
// Riemann-Siegel correction coefficients C0..C3 as Chebyshev interpolants on
// p in [0,1], built once from the generating function
//   Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)
// via Cauchy-integral derivatives on complex circles (Psi is entire: its
// apparent poles at odd quarters are removable).
struct RSCoeffs {
  static constexpr int kN = 64;  // Chebyshev nodes (degree kN)
  std::array<std::array<double, kN + 1>, 4> vals;  // C0..C3 at nodes
  std::array<double, kN + 1> nodes;

  static complex<double> psi(complex<double> z) {
    return cos(kTwoPi * (z * z - z - 0.0625)) / cos(kTwoPi * z);
  }

  // d^k Psi / dp^k at real p via an M-point trapezoid Cauchy integral.
  static void derivs(double p, const int* ks, int nk, double* out) {
    const int M = 512;
    const double r = 0.22;  // keeps the circle away from the cosine zeros' scale
    std::vector<complex<double>> f(M);
    for (int j = 0; j < M; ++j) {
      double phi = kTwoPi * j / M;
      complex<double> z = complex<double>(p, 0.0) + std::polar(r, phi);
      // Nudge off removable singularities of the quotient form.
      if (std::abs(cos(kTwoPi * z)) < 1e-8) z += complex<double>(1e-7, 1e-7);
      f[j] = psi(z);
    }
    for (int a = 0; a < nk; ++a) {
      int k = ks[a];
      complex<double> acc = 0.0;
      for (int j = 0; j < M; ++j) {
        double phi = kTwoPi * j / M;
        acc += f[j] * std::polar(1.0, -k * phi);
      }
      acc /= static_cast<double>(M);
      double fact = 1.0;
      for (int i = 2; i <= k; ++i) fact *= i;
      out[a] = (acc * fact / std::pow(r, k)).real();
    }
  }

  RSCoeffs() {
    const int ks[8] = {0, 1, 2, 3, 5, 6, 9, 0};
    for (int j = 0; j <= kN; ++j) {
      double p = 0.5 * (1.0 + std::cos(kPi * j / kN));
      nodes[j] = p;
      double d[8];
      derivs(p, ks, 7, d);
      const double pi2 = kPi * kPi, pi4 = pi2 * pi2, pi6 = pi4 * pi2;
      vals[0][j] = d[0];
      vals[1][j] = -d[3] / (96.0 * pi2);
      vals[2][j] = d[2] / (64.0 * pi2) + d[5] / (18432.0 * pi4);
      vals[3][j] = -d[1] / (64.0 * pi2) - d[4] / (3840.0 * pi4) - d[6] / (5308416.0 * pi6);
    }
  }

  // Barycentric Chebyshev interpolation of C_m at p.
  double eval(int m, double p) const {
    double num = 0.0, den = 0.0;
    for (int j = 0; j <= kN; ++j) {
      double diff = p - nodes[j];
      if (std::abs(diff) < 1e-14) return vals[m][j];
      double w = (j == 0 || j == kN) ? 0.5 : 1.0;
      if (j & 1) w = -w;
      num += w * vals[m][j] / diff;
      den += w / diff;
    }
    return num / den;
  }
};

const RSCoeffs& rs_coeffs() {
  static const RSCoeffs c;
  return c;
}

complex<double> zeta_em_impl(complex<double> s, int N, int K) {
  if (s == complex<double>(1.0, 0.0)) throw DomainError("zeta_em: pole at s=1");
  KahanSum re, im;
  for (int n = 1; n < N; ++n) {
    complex<double> t = std::exp(-s * std::log(static_cast<double>(n)));
    re.add(t.real());
    im.add(t.imag());
  }
  complex<double> acc(re.total(), im.total());
  double logN = std::log(static_cast<double>(N));
  complex<double> NmS = std::exp(-s * logN);  // N^{-s}
  acc += NmS * static_cast<double>(N) / (s - 1.0) + 0.5 * NmS;
  // Correction terms T_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}.
  complex<double> poch = s;                                   // rising product
  complex<double> npow = NmS / static_cast<double>(N);        // N^{-s-1}
  double N2 = static_cast<double>(N) * static_cast<double>(N);
  for (int k = 1; k <= K; ++k) {
    acc += kBernoulliFact[k - 1] * poch * npow;
    // advance: multiply the Pochhammer by (s+2k-1)(s+2k) and npow by N^{-2}.
    poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    npow /= N2;
  }
  return acc;
}

}  // namespace

std::complex<double> zeta_em(std::complex<double> s, int N, int K) {
  return zeta_em_impl(s, N, K);
}

double rs_theta(double t) {
  // Asymptotic expansion, error ~ 1/t^7; used only for t >= 100.
  double lt = std::log(t / kTwoPi);
  return 0.5 * t * lt - 0.5 * t - kPi / 8.0 + 1.0 / (48.0 * t) +
         7.0 / (5760.0 * t * t * t) + 31.0 / (80640.0 * std::pow(t, 5));
}

double riemann_siegel_z(double t) {
  if (t < 100.0) throw DomainError("riemann_siegel_z: t too small for the expansion");
  const double a = std::sqrt(t / kTwoPi);
  const int N = static_cast<int>(a);
  const double p = a - N;
  const double theta = rs_theta(t);
  const auto& tab = tables();
  KahanSum main;
  if (N < static_cast<int>(tab.logn.size()) - 1) {
    for (int n = 1; n <= N; ++n)
      main.add(tab.rsqrt[n] * std::cos(theta - t * tab.logn[n]));
  } else {
    for (int n = 1; n <= N; ++n)
      main.add(std::cos(theta - t * std::log(static_cast<double>(n))) /
               std::sqrt(static_cast<double>(n)));
  }
  const auto& c = rs_coeffs();
  double corr = 0.0, apow = 1.0;  // a^{-j}
  for (int j = 0; j <= 3; ++j) {
    corr += c.eval(j, p) / apow;
    apow *= a;
  }
  double sign = (N % 2 == 0) ? -1.0 : 1.0;  // (-1)^{N-1}
  return 2.0 * main.total() + sign * corr / std::sqrt(a);
}

ComplexBracket zeta_half(double t) {
  if (t < 0.0) {
    ComplexBracket z = zeta_half(-t);
    return {std::conj(z.value), z.abs_err};
  }
  if (t < kZetaSchemeSwitch) {
    int N = std::max(24, static_cast<int>(t / 1.8) + 12);
    return {zeta_em_impl({0.5, t}, N, 12), 1e-11};
  }
  double z = riemann_siegel_z(t);
  double theta = rs_theta(t);
  // Truncation error of the 4-term expansion (Gabcke-style scale).
  double err = 0.06 * std::pow(t / kTwoPi, -1.75);
  return {std::polar(z, -theta), err};
}

double zeta_half_abs2(double t) {
  t = std::abs(t);
  if (t < kZetaSchemeSwitch) {
    int N = std::max(24, static_cast<int>(t / 1.8) + 12);
    return std::norm(zeta_em_impl({0.5, t}, N, 12));
  }
  double z = riemann_siegel_z(t);
  return z * z;
}

}  // namespace ingham
