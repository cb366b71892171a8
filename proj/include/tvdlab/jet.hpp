#pragma once

#include <cmath>

namespace tvdlab {

/// Second-order forward-mode jet in two variables (r, s): value, gradient and
/// Hessian.  Used to differentiate user-supplied field expressions exactly.
struct Jet2 {
  double v = 0.0;
  double dr = 0.0;
  double ds = 0.0;
  double drr = 0.0;
  double drs = 0.0;
  double dss = 0.0;

  static Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
  static Jet2 var_r(double r) { return {r, 1, 0, 0, 0, 0}; }
  static Jet2 var_s(double s) { return {s, 0, 1, 0, 0, 0}; }

  bool is_constant() const {
    return dr == 0.0 && ds == 0.0 && drr == 0.0 && drs == 0.0 && dss == 0.0;
  }
};

/// g(a) for a scalar function with g = g0(a.v), g' = g1, g'' = g2.
inline Jet2 chain(const Jet2& a, double g0, double g1, double g2) {
  return {g0,
          g1 * a.dr,
          g1 * a.ds,
          g2 * a.dr * a.dr + g1 * a.drr,
          g2 * a.dr * a.ds + g1 * a.drs,
          g2 * a.ds * a.ds + g1 * a.dss};
}

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.v + b.v, a.dr + b.dr, a.ds + b.ds, a.drr + b.drr, a.drs + b.drs, a.dss + b.dss};
}

inline Jet2 operator-(const Jet2& a) { return {-a.v, -a.dr, -a.ds, -a.drr, -a.drs, -a.dss}; }

inline Jet2 operator-(const Jet2& a, const Jet2& b) { return a + (-b); }

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.v * b.v,
          a.dr * b.v + a.v * b.dr,
          a.ds * b.v + a.v * b.ds,
          a.drr * b.v + 2.0 * a.dr * b.dr + a.v * b.drr,
          a.drs * b.v + a.dr * b.ds + a.ds * b.dr + a.v * b.drs,
          a.dss * b.v + 2.0 * a.ds * b.ds + a.v * b.dss};
}

inline Jet2 reciprocal(const Jet2& a) {
  const double inv = 1.0 / a.v;
  return chain(a, inv, -inv * inv, 2.0 * inv * inv * inv);
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }

inline Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.v);
  return chain(a, e, e, e);
}

inline Jet2 log(const Jet2& a) {
  const double inv = 1.0 / a.v;
  return chain(a, std::log(a.v), inv, -inv * inv);
}

/// a^b.  A constant exponent uses the power rule, so negative bases with
/// integer exponents are fine; otherwise exp(b log a).
inline Jet2 pow(const Jet2& a, const Jet2& b) {
  if (b.is_constant()) {
    const double p = b.v;
    if (p == 0.0) return Jet2::constant(1.0);
    if (p == 1.0) return a;
    if (p == 2.0) return a * a;
    return chain(a, std::pow(a.v, p), p * std::pow(a.v, p - 1.0),
                 p * (p - 1.0) * std::pow(a.v, p - 2.0));
  }
  return exp(b * log(a));
}

}  // namespace tvdlab
