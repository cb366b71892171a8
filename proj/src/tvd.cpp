#include "tvdlab/tvd.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "tvdlab/errors.hpp"
#include "tvdlab/roots.hpp"
#include "tvdlab/wave_curves.hpp"

namespace tvdlab {

namespace {

constexpr double kQuadratureAbsTol = 1e-10;
constexpr unsigned kQuadratureMaxPanels = 10000;

double sign(double v) { return v > 0.0 ? 1.0 : -1.0; }

}  // namespace

WaveChanges wave_changes(const ScalarField& field, const InteractionRealization& rz) {
  const GasModel& m = rz.model;
  const double left = field.at(m, rz.far_left);
  const double mid_in = field.at(m, rz.middle_in);
  const double mid_out = field.at(m, rz.middle_out);
  const double right = field.at(m, rz.far_right);
  return {mid_in - left, right - mid_in, mid_out - left, right - mid_out};
}

VariationPair variation(const ScalarField& field, const InteractionRealization& rz) {
  const WaveChanges c = wave_changes(field, rz);
  return {std::abs(c.incoming_left) + std::abs(c.incoming_right),
          std::abs(c.outgoing_backward) + std::abs(c.outgoing_forward)};
}

double delta_var(const ScalarField& field, const InteractionRealization& rz) {
  const VariationPair v = variation(field, rz);
  return v.after - v.before;
}

double shock_delta_quadrature(const GasModel& model, const Univariate& h, InvariantChannel channel,
                              const State& left, double x) {
  if (!(x >= 1.0) || !std::isfinite(x)) {
    throw DomainError("shock_delta_quadrature: need a backward shock ratio x >= 1");
  }
  if (x == 1.0) return 0.0;
  const double xi = left.xi();
  const double u = left.u();
  const double kappa = model.kappa();
  const double side = channel == InvariantChannel::R ? -1.0 : 1.0;
  auto arg_at = [&](double sigma) {
    return u - phi(model, Family::Backward, sigma) * xi + side * kappa * sigma * xi;
  };
  auto weight = [&](double sigma) { return phi_deriv(model, Family::Backward, sigma) - side * kappa; };
  auto integrand = [&](double sigma) { return h.d1(arg_at(sigma)) * weight(sigma); };
  // Rounding in the argument alone perturbs h' by about eps*|arg*h''|, which
  // caps the attainable accuracy when the invariants are large.
  auto noise_density = [&](double sigma) {
    const double arg = arg_at(sigma);
    return ((1.0 + std::abs(arg)) * std::abs(h.d2(arg)) + std::abs(h.d1(arg))) * std::abs(weight(sigma));
  };

  // Global adaptive refinement: always split the panel with the largest
  // Kronrod-Gauss difference.  Boost 1.74 reports leaf errors on the reference
  // interval [-1,1] without the (b-a)/2 factor, so the driver below calls it
  // one panel at a time and rescales.
  using Quad = boost::math::quadrature::gauss_kronrod<double, 15>;
  struct Panel {
    double a, b, value, err, l1;
    bool operator<(const Panel& o) const { return err < o.err; }
  };
  auto make_panel = [&](double a, double b) {
    Panel p{a, b, 0.0, 0.0, 0.0};
    p.value = Quad::integrate(integrand, a, b, 0, 0.0, &p.err, &p.l1);
    p.err *= 0.5 * (b - a);
    return p;
  };
  std::priority_queue<Panel> panels;
  Panel whole = make_panel(1.0, x);
  double integral = whole.value;
  double err = whole.err;
  panels.push(whole);
  const double target = kQuadratureAbsTol / std::max(1.0, xi);
  const double noise = 64.0 * std::numeric_limits<double>::epsilon() *
                       Quad::integrate(noise_density, 1.0, x, 6, 1e-3);
  for (unsigned n = 1; n < kQuadratureMaxPanels; ++n) {
    if (err <= std::max(target, noise)) break;
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel lo = make_panel(worst.a, mid);
    const Panel hi = make_panel(mid, worst.b);
    integral += lo.value + hi.value - worst.value;
    err += lo.err + hi.err - worst.err;
    panels.push(lo);
    panels.push(hi);
  }
  // Recompute the totals to shed the drift from incremental updates.
  integral = err = 0.0;
  while (!panels.empty()) {
    integral += panels.top().value;
    err += panels.top().err;
    panels.pop();
  }
  if (!(err <= std::max(target, noise))) {
    throw QuadratureError("shock_delta_quadrature: error estimate " + std::to_string(err) +
                          " above tolerance");
  }
  return -xi * integral;
}

double shock_delta_direct(const GasModel& model, const Univariate& h, InvariantChannel channel,
                          const State& left, double x) {
  const State right = wave_right_state(model, left, Wave(Family::Backward, x));
  const Invariants a = model.invariants(left);
  const Invariants b = model.invariants(right);
  return channel == InvariantChannel::R ? h(b.r) - h(a.r) : h(b.s) - h(a.s);
}

ExpansionCoefficients expansion_coefficients(const ScalarField& field, const State& at,
                                             const GasModel& model) {
  const Invariants inv = model.invariants(at);
  const Jet2 j = field.jet(inv.r, inv.s);
  return {j.ds, j.drs, j.dss, j.dr, j.drr};
}

std::string_view to_string(SignCase c) {
  switch (c) {
    case SignCase::I:
      return "i";
    case SignCase::II:
      return "ii";
    case SignCase::III:
      return "iii";
    case SignCase::IV:
      return "iv";
  }
  return "?";
}

Increments signed_increments(const ExpansionCoefficients& c, double dr_magnitude,
                             double ds_magnitude, SignCase sign_case) {
  if (c.A == 0.0 || c.D == 0.0) {
    throw DegenerateError("signed_increments: A or D vanishes; sign cases are not defined");
  }
  const double dr = std::abs(dr_magnitude);
  const double ds = std::abs(ds_magnitude);
  const double sa = sign(c.A);
  const double sd = sign(c.D);
  switch (sign_case) {
    case SignCase::I:
      return {sd * dr, sa * ds};
    case SignCase::II:
      return {-sd * dr, -sa * ds};
    case SignCase::III:
      return {sd * dr, -sa * ds};
    case SignCase::IV:
      return {-sd * dr, sa * ds};
  }
  throw DomainError("signed_increments: unknown sign case");
}

WeakExpansion weak_expansion_check(const ScalarField& field, const State& base, double dr,
                                   double ds, const GasModel& model) {
  const ExpansionCoefficients c = expansion_coefficients(field, base, model);
  if (c.A == 0.0 || c.D == 0.0) {
    throw DegenerateError("weak_expansion_check: A = d_s phi or D = d_r phi vanishes at base");
  }
  if (dr == 0.0 || ds == 0.0) {
    throw DegenerateError("weak_expansion_check: both increments must be non-zero");
  }

  const bool fwd_pos = ds * c.A > 0.0;
  const bool back_pos = dr * c.D > 0.0;
  SignCase sc;
  double predicted = 0.0;
  if (fwd_pos && back_pos) {
    sc = SignCase::I;
  } else if (!fwd_pos && !back_pos) {
    sc = SignCase::II;
  } else if (back_pos) {
    sc = SignCase::III;
    predicted = -2.0 * dr * ds * c.B;
  } else {
    sc = SignCase::IV;
    predicted = 2.0 * dr * ds * c.B;
  }

  const double kappa = model.kappa();
  // Forward wave from base: s changes by xi (phi_->(f) + kappa (f - 1)).
  const double xi0 = base.xi();
  const double f = solve_increasing([&](double q) {
                     return std::pair{xi0 * (phi(model, Family::Forward, q) + kappa * (q - 1.0)) - ds,
                                      xi0 * (phi_deriv(model, Family::Forward, q) + kappa)};
                   }).x;
  const State middle = wave_right_state(model, base, Wave(Family::Forward, f));

  // Backward wave from the middle: r changes by -xi_m (phi_<-(b) + kappa (b - 1)),
  // bounded above by 2 kappa xi_m (rarefaction into vacuum).
  const double xim = middle.xi();
  if (!(dr < 2.0 * kappa * xim)) {
    throw DomainError("weak_expansion_check: dr reaches the vacuum bound 2 kappa xi");
  }
  const double b = solve_increasing([&](double q) {
                     return std::pair{xim * (phi(model, Family::Backward, q) + kappa * (q - 1.0)) + dr,
                                      xim * (phi_deriv(model, Family::Backward, q) + kappa)};
                   }).x;

  InteractionRealization rz = realize(model, head_on_kind(b, f), b, f, base);
  const double measured = delta_var(field, rz);
  return WeakExpansion{sc, dr, ds, measured, predicted, c, std::move(rz)};
}

}  // namespace tvdlab
