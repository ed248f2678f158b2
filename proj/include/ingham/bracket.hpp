#pragma once
#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace ingham {

// Value plus a (non-rigorous but conservative) absolute error estimate.
// Arithmetic propagates errors first-order and never shrinks them.
struct Bracket {
  double value = 0.0;
  double abs_err = 0.0;

  double lower() const { return value - abs_err; }
  double upper() const { return value + abs_err; }
  bool contains(double x) const { return lower() <= x && x <= upper(); }

  Bracket operator+(const Bracket& o) const { return {value + o.value, abs_err + o.abs_err}; }
  Bracket operator-(const Bracket& o) const { return {value - o.value, abs_err + o.abs_err}; }
  Bracket operator*(const Bracket& o) const {
    return {value * o.value,
            std::abs(value) * o.abs_err + std::abs(o.value) * abs_err + abs_err * o.abs_err};
  }
  Bracket operator+(double c) const { return {value + c, abs_err}; }
  Bracket operator-(double c) const { return {value - c, abs_err}; }
  Bracket operator*(double c) const { return {value * c, abs_err * std::abs(c)}; }
  friend Bracket operator*(double c, const Bracket& b) { return b * c; }
  friend Bracket operator+(double c, const Bracket& b) { return b + c; }
};

// Compensated (Kahan-Neumaier) accumulator.
struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double total() const { return s + c; }
};

}  // namespace ingham
