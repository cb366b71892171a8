#include "tvdlab/wave_curves.hpp"

#include <cmath>
#include <string>

#include "tvdlab/errors.hpp"

namespace tvdlab {

namespace {

// Largest exponent handed to exp(); leaves headroom below log(DBL_MAX) ~ 709.78.
constexpr double kMaxExponent = 708.0;
// Below this distance from 1 the shock-branch derivative uses its Taylor series.
constexpr double kTaylorBand = 1e-6;

void check_ratio(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("wave ratio must be finite and > 0, got " + std::to_string(x));
  }
}

bool on_rarefaction_branch(Family family, double x) {
  return family == Family::Backward ? x < 1.0 : x > 1.0;
}

struct ShockFactors {
  double g;   // 1 - x^(-1/alpha)
  double h;   // x^(gamma/alpha) - 1
  double dg;  // (1/alpha) x^(-1/alpha - 1)
  double dh;  // (gamma/alpha) x^(gamma/alpha - 1)
};

ShockFactors shock_factors(const GasModel& model, double x) {
  const double a = 1.0 / model.alpha();
  const double c = model.gamma() / model.alpha();
  const double lx = std::log(x);
  if (c * lx > kMaxExponent || -a * lx > kMaxExponent) {
    throw OverflowError("phi: ratio " + std::to_string(x) + " leaves the double range for gamma " +
                        std::to_string(model.gamma()));
  }
  ShockFactors f;
  f.g = -std::expm1(-a * lx);
  f.h = std::expm1(c * lx);
  f.dg = a * std::exp((-a - 1.0) * lx);
  f.dh = c * std::exp((c - 1.0) * lx);
  return f;
}

}  // namespace

Wave::Wave(Family family, double ratio) : family_(family), ratio_(ratio) { check_ratio(ratio); }

WaveKind Wave::kind() const { return wave_kind(family_, ratio_); }

WaveKind wave_kind(Family family, double ratio) {
  if (ratio == 1.0) return WaveKind::Null;
  return on_rarefaction_branch(family, ratio) ? WaveKind::Rarefaction : WaveKind::Shock;
}

std::string_view to_string(Family f) { return f == Family::Backward ? "backward" : "forward"; }

std::string_view to_string(WaveKind k) {
  switch (k) {
    case WaveKind::Shock:
      return "shock";
    case WaveKind::Rarefaction:
      return "rarefaction";
    case WaveKind::Null:
      return "null";
  }
  return "?";
}

double phi(const GasModel& model, Family family, double x) {
  check_ratio(x);
  if (x == 1.0) return 0.0;
  if (on_rarefaction_branch(family, x)) return model.kappa() * (x - 1.0);
  const ShockFactors f = shock_factors(model, x);
  // For x < 1 both factors are negative; the product is positive either way.
  const double mag = std::sqrt(f.g * f.h);
  return x > 1.0 ? mag : -mag;
}

double phi_deriv(const GasModel& model, Family family, double x) {
  check_ratio(x);
  const double kappa = model.kappa();
  if (x == 1.0 || on_rarefaction_branch(family, x)) return kappa;
  const double e = x - 1.0;
  if (std::abs(e) <= kTaylorBand) {
    // sqrt(g h) = kappa e (1 + p2 e^2 + ...) with p2 = (1/alpha + 1)^2 / 12; the
    // linear coefficient cancels because gamma/alpha - 1/alpha = 2.
    const double a1 = 1.0 / model.alpha() + 1.0;
    return kappa * (1.0 + 0.125 * a1 * a1 * e * e);
  }
  const ShockFactors f = shock_factors(model, x);
  const double num = f.dg * f.h + f.g * f.dh;
  const double den = 2.0 * std::sqrt(f.g * f.h);
  // Backward branch (x > 1): g, h > 0.  Forward branch (x < 1): g, h < 0 and
  // phi = -sqrt(g h), which flips the sign of the quotient.
  return x > 1.0 ? num / den : -num / den;
}

State wave_right_state(const GasModel& model, const State& left, const Wave& w) {
  const double q = w.ratio();
  const double p = phi(model, w.family(), q);
  const double du = w.family() == Family::Backward ? -p * left.xi() : p * left.xi();
  return State(q * left.xi(), left.u() + du);
}

State reflect(const State& st) { return State(st.xi(), -st.u()); }

}  // namespace tvdlab
