#include "tvdlab/interactions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tvdlab/errors.hpp"
#include "tvdlab/roots.hpp"

namespace tvdlab {

namespace {

constexpr double kResolveTol = 1e-11;
constexpr double kPathTol = 1e-10;

struct KindInfo {
  InteractionKind kind;
  std::string_view label;
  bool head_on;
  Family family;  // overtaking kinds only
  WaveKind left;
  WaveKind right;
};

constexpr WaveKind S = WaveKind::Shock;
constexpr WaveKind R = WaveKind::Rarefaction;

constexpr std::array<KindInfo, 10> kKinds = {{
    {InteractionKind::Ia, "Ia", true, Family::Backward, R, R},
    {InteractionKind::Ib, "Ib", true, Family::Backward, R, S},
    {InteractionKind::IbPrime, "Ib'", true, Family::Backward, S, R},
    {InteractionKind::Ic, "Ic", true, Family::Backward, S, S},
    {InteractionKind::IIa, "IIa", false, Family::Backward, S, S},
    {InteractionKind::IIb, "IIb", false, Family::Backward, S, R},
    {InteractionKind::IIc, "IIc", false, Family::Backward, R, S},
    {InteractionKind::IIaPrime, "IIa'", false, Family::Forward, S, S},
    {InteractionKind::IIbPrime, "IIb'", false, Family::Forward, R, S},
    {InteractionKind::IIcPrime, "IIc'", false, Family::Forward, S, R},
}};

const KindInfo& info(InteractionKind k) {
  return *std::find_if(kKinds.begin(), kKinds.end(),
                       [k](const KindInfo& i) { return i.kind == k; });
}

char kind_letter(WaveKind k) {
  switch (k) {
    case WaveKind::Shock:
      return 'S';
    case WaveKind::Rarefaction:
      return 'R';
    case WaveKind::Null:
      return 'N';
  }
  return '?';
}

void check_resolved(double residual, double scale, const char* what) {
  if (!(std::abs(residual) <= kResolveTol * scale)) {
    throw ConvergenceError(std::string(what) + ": residual " + std::to_string(residual) +
                           " above tolerance");
  }
}

OutgoingRatios mirrored(const OutgoingRatios& m) { return {1.0 / m.forward, 1.0 / m.backward}; }

}  // namespace

std::string_view to_string(InteractionKind k) { return info(k).label; }

std::optional<InteractionKind> parse_interaction_kind(std::string_view label) {
  for (const KindInfo& i : kKinds) {
    if (i.label == label) return i.kind;
  }
  return std::nullopt;
}

bool is_head_on(InteractionKind k) { return info(k).head_on; }

Family overtaking_family(InteractionKind k) {
  if (is_head_on(k)) throw DomainError("overtaking_family: head-on kind has no single family");
  return info(k).family;
}

std::array<WaveKind, 2> incoming_kinds(InteractionKind k) { return {info(k).left, info(k).right}; }

InteractionKind head_on_kind(double b, double f) {
  const bool fwd_rarefaction = f >= 1.0;
  const bool back_rarefaction = b <= 1.0;
  if (fwd_rarefaction) return back_rarefaction ? InteractionKind::Ia : InteractionKind::Ib;
  return back_rarefaction ? InteractionKind::IbPrime : InteractionKind::Ic;
}

InteractionKind overtaking_kind(Family family, double x, double y) {
  const bool x_shock = wave_kind(family, x) == WaveKind::Shock;
  const bool y_shock = wave_kind(family, y) == WaveKind::Shock;
  if (!x_shock && !y_shock) {
    throw DomainError("overtaking_kind: two rarefactions of one family never interact");
  }
  if (family == Family::Backward) {
    if (x_shock && y_shock) return InteractionKind::IIa;
    return x_shock ? InteractionKind::IIb : InteractionKind::IIc;
  }
  if (x_shock && y_shock) return InteractionKind::IIaPrime;
  return x_shock ? InteractionKind::IIcPrime : InteractionKind::IIbPrime;
}

void validate_strengths(InteractionKind k, double q1, double q2) {
  if (!(q1 > 0.0) || !(q2 > 0.0) || !std::isfinite(q1) || !std::isfinite(q2)) {
    throw DomainError("interaction strengths must be finite and > 0");
  }
  const KindInfo& i = info(k);
  WaveKind left;
  WaveKind right;
  if (i.head_on) {
    left = wave_kind(Family::Forward, q2);
    right = wave_kind(Family::Backward, q1);
  } else {
    left = wave_kind(i.family, q1);
    right = wave_kind(i.family, q2);
  }
  const bool ok = (left == i.left || left == WaveKind::Null) &&
                  (right == i.right || right == WaveKind::Null);
  if (!ok) {
    throw DomainError("strengths (" + std::to_string(q1) + ", " + std::to_string(q2) +
                      ") do not match interaction " + std::string(i.label));
  }
}

OutgoingRatios resolve_head_on(const GasModel& model, double b, double f) {
  const double kappa = model.kappa();
  const double phib = phi(model, Family::Backward, b);
  const double phif = phi(model, Family::Forward, f);
  if (!(phib + kappa * b > (phif - kappa) / f)) {
    throw VacuumError("head-on interaction (b=" + std::to_string(b) + ", f=" + std::to_string(f) +
                      ") produces vacuum");
  }
  const double bf = b * f;
  const double constant = phif - f * phib;
  auto fn = [&](double B) {
    const double value =
        phi(model, Family::Backward, B) + bf * phi(model, Family::Backward, B / bf) + constant;
    const double slope =
        phi_deriv(model, Family::Backward, B) + phi_deriv(model, Family::Backward, B / bf);
    return std::pair{value, slope};
  };
  const RootResult root = solve_increasing(fn);
  check_resolved(root.residual, std::max({1.0, std::abs(phif), std::abs(f * phib)}),
                 "resolve_head_on");
  return {root.x, bf / root.x};
}

OutgoingRatios resolve_overtaking(const GasModel& model, double x, double y) {
  const double kappa = model.kappa();
  const double phix = phi(model, Family::Backward, x);
  const double phiy = phi(model, Family::Backward, y);
  const double xy = x * y;
  if (!(kappa * (1.0 + xy) + phix + x * phiy > 0.0)) {
    // Cannot happen for exact arithmetic; reaching it means the inputs are
    // at the edge of floating-point resolution.
    throw ConvergenceError("resolve_overtaking: no-vacuum identity failed numerically");
  }
  const double constant = phix + x * phiy;
  auto fn = [&](double B) {
    const double value =
        phi(model, Family::Backward, B) + xy * phi(model, Family::Backward, B / xy) - constant;
    const double slope =
        phi_deriv(model, Family::Backward, B) + phi_deriv(model, Family::Backward, B / xy);
    return std::pair{value, slope};
  };
  const RootResult root = solve_increasing(fn);
  check_resolved(root.residual, std::max({1.0, std::abs(phix), std::abs(x * phiy)}),
                 "resolve_overtaking");
  return {root.x, xy / root.x};
}

OutgoingRatios resolve_forward_overtaking(const GasModel& model, double x, double y) {
  return mirrored(resolve_overtaking(model, 1.0 / y, 1.0 / x));
}

OutgoingRatios resolve(const GasModel& model, InteractionKind kind, double q1, double q2) {
  validate_strengths(kind, q1, q2);
  switch (kind) {
    case InteractionKind::Ia:
    case InteractionKind::Ib:
    case InteractionKind::Ic:
      return resolve_head_on(model, q1, q2);
    case InteractionKind::IbPrime:
      // [forward f | backward b] mirrors to [forward 1/b | backward 1/f].
      return mirrored(resolve_head_on(model, 1.0 / q2, 1.0 / q1));
    case InteractionKind::IIa:
    case InteractionKind::IIb:
    case InteractionKind::IIc:
      return resolve_overtaking(model, q1, q2);
    case InteractionKind::IIaPrime:
    case InteractionKind::IIbPrime:
    case InteractionKind::IIcPrime:
      return resolve_forward_overtaking(model, q1, q2);
  }
  throw DomainError("resolve: unknown interaction kind");
}

std::string OutgoingPattern::label() const {
  std::string s;
  s += kind_letter(backward);
  s += "<-";
  s += kind_letter(forward);
  s += "->";
  return s;
}

OutgoingPattern classify_outcome(const GasModel& model, InteractionKind kind, double q1,
                                 double q2) {
  const OutgoingRatios out = resolve(model, kind, q1, q2);
  return {wave_kind(Family::Backward, out.backward), wave_kind(Family::Forward, out.forward)};
}

InteractionRealization realize(const GasModel& model, InteractionKind kind, double q1, double q2,
                               const State& far_left) {
  const OutgoingRatios out = resolve(model, kind, q1, q2);

  std::array<Wave, 2> incoming = is_head_on(kind)
                                     ? std::array<Wave, 2>{Wave(Family::Forward, q2),
                                                           Wave(Family::Backward, q1)}
                                     : std::array<Wave, 2>{Wave(overtaking_family(kind), q1),
                                                           Wave(overtaking_family(kind), q2)};
  const State middle_in = wave_right_state(model, far_left, incoming[0]);
  const State far_right = wave_right_state(model, middle_in, incoming[1]);

  const Wave back(Family::Backward, out.backward);
  const Wave fwd(Family::Forward, out.forward);
  const State middle_out = wave_right_state(model, far_left, back);
  const State far_right_out = wave_right_state(model, middle_out, fwd);

  const double du = std::abs(far_right_out.u() - far_right.u());
  const double u_scale = std::max(
      {1.0, std::abs(far_left.u()), std::abs(far_right.u()),
       far_left.xi() * (1.0 + std::abs(phi(model, incoming[0].family(), incoming[0].ratio()))),
       middle_in.xi() * (1.0 + std::abs(phi(model, incoming[1].family(), incoming[1].ratio())))});
  const double dxi = std::abs(far_right_out.xi() - far_right.xi());
  if (!(du <= kPathTol * u_scale) || !(dxi <= 1e-12 * far_right.xi())) {
    throw ConvergenceError("realize: outgoing path misses the far-right state by " +
                           std::to_string(du));
  }
  return InteractionRealization{model, kind,       far_left,  incoming, middle_in,
                                back,  fwd,        middle_out, far_right, du};
}

}  // namespace tvdlab
