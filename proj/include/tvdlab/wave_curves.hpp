#pragma once

#include <string_view>

#include "tvdlab/gas_model.hpp"

namespace tvdlab {

enum class Family { Backward, Forward };

enum class WaveKind { Shock, Rarefaction, Null };

/// One elementary wave, measured by its xi-ratio xi_right / xi_left.
///
/// Backward: ratio > 1 is a shock, ratio < 1 a rarefaction.
/// Forward:  ratio < 1 is a shock, ratio > 1 a rarefaction.
/// ratio == 1 is a legal null wave.
class Wave {
 public:
  /// Throws DomainError unless ratio is finite and > 0.
  Wave(Family family, double ratio);

  Family family() const { return family_; }
  double ratio() const { return ratio_; }
  WaveKind kind() const;

  friend bool operator==(const Wave&, const Wave&) = default;

 private:
  Family family_;
  double ratio_;
};

std::string_view to_string(Family f);
std::string_view to_string(WaveKind k);

/// Kind of a wave of the given family and ratio without constructing it.
WaveKind wave_kind(Family family, double ratio);

/// The auxiliary wave-curve function phi_<- (Backward) or phi_-> (Forward).
///
/// Both are strictly increasing, vanish at 1 and are linear with slope kappa
/// on their rarefaction branch.  The shock branch is
/// sign(x-1) * sqrt((1 - x^(-1/alpha)) (x^(gamma/alpha) - 1)), evaluated
/// through expm1/log so that it keeps full relative accuracy near x = 1.
///
/// Throws DomainError for x <= 0 and OverflowError once either power would
/// exceed the double range, i.e. roughly for x > exp(708 alpha/gamma) on the
/// backward shock branch and x < exp(-708 alpha) on the forward one.
double phi(const GasModel& model, Family family, double x);

/// Exact derivative of phi.  Equals kappa on the rarefaction branch and at
/// x = 1; strictly greater than kappa on the shock branch.
double phi_deriv(const GasModel& model, Family family, double x);

/// State on the right of wave `w` whose left state is `left`:
///   Backward: (q xi, u - phi_<-(q) xi)
///   Forward:  (q xi, u + phi_->(q) xi)
State wave_right_state(const GasModel& model, const State& left, const Wave& w);

/// Mirror map (xi, u) -> (xi, -u) under X -> -X.  Swaps the wave families:
/// a Forward wave of ratio q becomes a Backward wave of ratio 1/q.
State reflect(const State& st);

}  // namespace tvdlab
