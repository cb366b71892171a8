#pragma once

#include <variant>

#include "tvdlab/gas_model.hpp"
#include "tvdlab/wave_curves.hpp"

namespace tvdlab {

/// Self-similar solution of a no-vacuum Riemann problem: a backward wave
/// from `left` to `middle` followed by a forward wave from `middle` to `right`.
struct RiemannFan {
  State left;
  State middle;
  State right;
  Wave backward;
  Wave forward;
};

/// The Riemann problem has no solution without vacuum.
struct Vacuum {
  friend bool operator==(const Vacuum&, const Vacuum&) = default;
};

using RiemannOutcome = std::variant<RiemannFan, Vacuum>;

/// True when u_r - u_l < kappa (xi_l + xi_r), i.e. the solution has no vacuum.
bool no_vacuum(const GasModel& model, const State& left, const State& right);

/// Exact Riemann solver.
///
/// The backward ratio b is the unique root of
///   xi_l phi_<-(b) + xi_r phi_<-(b xi_l / xi_r) = u_l - u_r,
/// whose left-hand side increases from -kappa (xi_l + xi_r) to +inf, and the
/// forward ratio is f = xi_r / (b xi_l).  The equality case of the vacuum
/// criterion is reported as Vacuum.  Throws ConvergenceError if the root
/// cannot be bracketed within ratios 2^-64 .. 2^64.
RiemannOutcome solve_riemann(const GasModel& model, const State& left, const State& right);

/// Residual of the b-equation at ratio b (exposed for tests and diagnostics).
double riemann_residual(const GasModel& model, const State& left, const State& right, double b);

/// Rankine-Hugoniot speed of a shock with left state `left`:
/// +/- sqrt(-[p]/[tau]), negative for the backward family.
double shock_speed(const GasModel& model, const State& left, const Wave& shock);

/// Interval of X/t occupied by one of the two waves of the fan.  A shock or
/// null wave occupies a single speed (lo == hi).
struct SpeedSpan {
  double lo;
  double hi;
};
SpeedSpan wave_span(const GasModel& model, const RiemannFan& fan, Family family);

/// State of the self-similar solution at X/t = sigma.  A sample taken exactly
/// on a shock returns the state behind it (on its right).
State sample_fan(const GasModel& model, const RiemannFan& fan, double sigma);

}  // namespace tvdlab
