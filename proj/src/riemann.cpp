#include "tvdlab/riemann.hpp"

#include <cassert>
#include <cmath>

#include "tvdlab/errors.hpp"
#include "tvdlab/roots.hpp"

namespace tvdlab {

namespace {

// sqrt(h(q)/g(q)) with g = 1 - q^(-1/alpha), h = q^(gamma/alpha) - 1; tends to
// sqrt(gamma) as q -> 1.
double shock_speed_factor(const GasModel& model, double q) {
  if (q == 1.0) return std::sqrt(model.gamma());
  const double lq = std::log(q);
  const double g = -std::expm1(-lq / model.alpha());
  const double h = std::expm1(model.gamma() / model.alpha() * lq);
  return std::sqrt(h / g);
}

// xi^((alpha+1)/alpha) from a characteristic speed magnitude, inverted.
double xi_at_speed(const GasModel& model, double speed_magnitude) {
  return std::pow(speed_magnitude / std::sqrt(model.gamma()),
                  model.alpha() / (model.alpha() + 1.0));
}

}  // namespace

bool no_vacuum(const GasModel& model, const State& left, const State& right) {
  return right.u() - left.u() < model.kappa() * (left.xi() + right.xi());
}

double riemann_residual(const GasModel& model, const State& left, const State& right, double b) {
  return left.xi() * phi(model, Family::Backward, b) +
         right.xi() * phi(model, Family::Backward, b * left.xi() / right.xi()) -
         (left.u() - right.u());
}

RiemannOutcome solve_riemann(const GasModel& model, const State& left, const State& right) {
  if (!no_vacuum(model, left, right)) return Vacuum{};
  if (left == right) {
    return RiemannFan{left, left, right, Wave(Family::Backward, 1.0), Wave(Family::Forward, 1.0)};
  }

  const double xl = left.xi();
  const double xr = right.xi();
  const double rhs = left.u() - right.u();
  const double scale = xl / xr;
  // Two rarefactions: the residual is linear in b and the closed form stays
  // accurate right up to the vacuum boundary, where bisection on the
  // cancelling residual cannot resolve b.
  const double kappa = model.kappa();
  const double b_lin = (kappa * (xl + xr) - (right.u() - left.u())) / (2.0 * kappa * xl);
  if (b_lin < 1.0 && b_lin * scale < 1.0) {
    const Wave backward(Family::Backward, b_lin);
    const Wave forward(Family::Forward, xr / (b_lin * xl));
    return RiemannFan{left, wave_right_state(model, left, backward), right, backward, forward};
  }
  auto fn = [&](double b) {
    const double q = b * scale;
    const double value =
        xl * phi(model, Family::Backward, b) + xr * phi(model, Family::Backward, q) - rhs;
    const double slope =
        xl * (phi_deriv(model, Family::Backward, b) + phi_deriv(model, Family::Backward, q));
    return std::pair{value, slope};
  };
  const RootResult root = solve_increasing(fn);
  const double b = root.x;

  const Wave backward(Family::Backward, b);
  const Wave forward(Family::Forward, xr / (b * xl));
  return RiemannFan{left, wave_right_state(model, left, backward), right, backward, forward};
}

double shock_speed(const GasModel& model, const State& left, const Wave& shock) {
  const double c = std::pow(left.xi(), (model.alpha() + 1.0) / model.alpha()) *
                   shock_speed_factor(model, shock.ratio());
  return shock.family() == Family::Backward ? -c : c;
}

SpeedSpan wave_span(const GasModel& model, const RiemannFan& fan, Family family) {
  if (family == Family::Backward) {
    const Wave& w = fan.backward;
    if (w.kind() == WaveKind::Rarefaction) {
      return {model.char_speeds(fan.left).lambda_minus, model.char_speeds(fan.middle).lambda_minus};
    }
    const double s = w.kind() == WaveKind::Shock ? shock_speed(model, fan.left, w)
                                                 : model.char_speeds(fan.left).lambda_minus;
    return {s, s};
  }
  const Wave& w = fan.forward;
  if (w.kind() == WaveKind::Rarefaction) {
    return {model.char_speeds(fan.middle).lambda_plus, model.char_speeds(fan.right).lambda_plus};
  }
  const double s = w.kind() == WaveKind::Shock ? shock_speed(model, fan.middle, w)
                                               : model.char_speeds(fan.middle).lambda_plus;
  return {s, s};
}

State sample_fan(const GasModel& model, const RiemannFan& fan, double sigma) {
  const SpeedSpan back = wave_span(model, fan, Family::Backward);
#ifndef NDEBUG
  if (fan.backward.kind() == WaveKind::Shock) {
    // Lax: the backward shock is slower than lambda- ahead of it and faster than behind.
    const double tol = 1e-12 * std::abs(back.lo);
    assert(model.char_speeds(fan.left).lambda_minus >= back.lo - tol);
    assert(back.lo >= model.char_speeds(fan.middle).lambda_minus - tol);
  }
#endif
  if (sigma < back.lo) return fan.left;
  if (fan.backward.kind() == WaveKind::Rarefaction && sigma < back.hi) {
    const double xi = xi_at_speed(model, -sigma);
    return State(xi, model.invariants(fan.left).s - model.kappa() * xi);
  }

  const SpeedSpan fwd = wave_span(model, fan, Family::Forward);
#ifndef NDEBUG
  if (fan.forward.kind() == WaveKind::Shock) {
    const double tol = 1e-12 * std::abs(fwd.lo);
    assert(model.char_speeds(fan.middle).lambda_plus >= fwd.lo - tol);
    assert(fwd.lo >= model.char_speeds(fan.right).lambda_plus - tol);
  }
#endif
  if (sigma < fwd.lo) return fan.middle;
  if (fan.forward.kind() == WaveKind::Rarefaction && sigma < fwd.hi) {
    const double xi = xi_at_speed(model, sigma);
    return State(xi, model.invariants(fan.middle).r + model.kappa() * xi);
  }
  return fan.right;
}

}  // namespace tvdlab
