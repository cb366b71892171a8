#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "tvdlab/gas_model.hpp"
#include "tvdlab/wave_curves.hpp"

namespace tvdlab {

/// Pairwise interaction types.  Head-on: Ia (R-> R<-), Ib (R-> S<-),
/// Ib' (S-> R<-), Ic (S-> S<-).  Overtaking backward pairs: IIa (S<- S<-),
/// IIb (S<- R<-), IIc (R<- S<-); forward pairs: IIa' (S-> S->),
/// IIb' (R-> S->), IIc' (S-> R->).
enum class InteractionKind { Ia, Ib, IbPrime, Ic, IIa, IIb, IIc, IIaPrime, IIbPrime, IIcPrime };

inline constexpr std::array<InteractionKind, 10> kAllInteractionKinds = {
    InteractionKind::Ia,       InteractionKind::Ib,       InteractionKind::IbPrime,
    InteractionKind::Ic,       InteractionKind::IIa,      InteractionKind::IIb,
    InteractionKind::IIc,      InteractionKind::IIaPrime, InteractionKind::IIbPrime,
    InteractionKind::IIcPrime};

std::string_view to_string(InteractionKind k);
std::optional<InteractionKind> parse_interaction_kind(std::string_view label);

bool is_head_on(InteractionKind k);
/// Family of the incoming pair for overtaking kinds; head-on kinds have one of each.
Family overtaking_family(InteractionKind k);

/// Kinds the two incoming waves must have, in spatial order (left, right).
/// Strengths of exactly 1 (null waves) are accepted for any kind.
std::array<WaveKind, 2> incoming_kinds(InteractionKind k);

/// Head-on kind of [forward f | backward b]; a null wave counts as a rarefaction.
InteractionKind head_on_kind(double b, double f);
/// Overtaking kind of two waves of one family [x | y]; null counts as a rarefaction.
/// Throws DomainError for a rarefaction-rarefaction pair, which never collides.
InteractionKind overtaking_kind(Family family, double x, double y);

/// Throws DomainError when (q1, q2) do not match the kind.  For head-on
/// kinds q1 is the backward ratio b and q2 the forward ratio f; for
/// overtaking kinds q1 is the left ratio x and q2 the right ratio y.
void validate_strengths(InteractionKind k, double q1, double q2);

/// xi-ratios of the two outgoing waves (backward B, forward F).
struct OutgoingRatios {
  double backward;
  double forward;
};

/// Head-on interaction [forward f | backward b].  B is the root of
///   phi_<-(B) + bf phi_<-(B/(bf)) + phi_->(f) - f phi_<-(b) = 0
/// and F = bf/B.  Throws VacuumError when
///   phi_<-(b) + kappa b <= (phi_->(f) - kappa)/f.
OutgoingRatios resolve_head_on(const GasModel& model, double b, double f);

/// Overtaking interaction of two backward waves [x | y].  B is the root of
///   phi_<-(B) + xy phi_<-(B/(xy)) - phi_<-(x) - x phi_<-(y) = 0
/// and F = xy/B.  Never produces vacuum.
OutgoingRatios resolve_overtaking(const GasModel& model, double x, double y);

/// Overtaking of two forward waves [x | y], obtained by mirroring onto the
/// backward pair [1/y | 1/x].
OutgoingRatios resolve_forward_overtaking(const GasModel& model, double x, double y);

/// Resolves any kind; Ib' and the primed overtaking kinds go through the
/// mirror symmetry (xi, u) -> (xi, -u).
OutgoingRatios resolve(const GasModel& model, InteractionKind kind, double q1, double q2);

/// Outgoing wave pattern, e.g. "S<-R->".
struct OutgoingPattern {
  WaveKind backward;
  WaveKind forward;
  std::string label() const;
  friend bool operator==(const OutgoingPattern&, const OutgoingPattern&) = default;
};

OutgoingPattern classify_outcome(const GasModel& model, InteractionKind kind, double q1, double q2);

/// Complete state diagram of one interaction.
///
/// Incoming waves are stored in spatial order: head-on [forward | backward],
/// overtaking [x-wave | y-wave].  Outgoing is always [backward | forward].
/// far_right is reached along the incoming path; `path_residual` is the
/// mismatch in u of the outgoing path against it.
struct InteractionRealization {
  GasModel model;
  InteractionKind kind;
  State far_left;
  std::array<Wave, 2> incoming;
  State middle_in;
  Wave outgoing_backward;
  Wave outgoing_forward;
  State middle_out;
  State far_right;
  double path_residual;
};

/// Throws as validate_strengths/resolve, and ConvergenceError when the two
/// paths to the far-right state disagree beyond 1e-10 (relative to the
/// velocity scale of the diagram).
InteractionRealization realize(const GasModel& model, InteractionKind kind, double q1, double q2,
                               const State& far_left);

}  // namespace tvdlab
