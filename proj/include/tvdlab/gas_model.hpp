#pragma once

#include <compare>

namespace tvdlab {

/// A no-vacuum gas state in (xi, u) coordinates, xi = tau^(-alpha) = rho^alpha.
///
/// xi > 0 is enforced on construction; vacuum is never a State.  Specific
/// volume, density and the Riemann invariants are derived through GasModel.
class State {
 public:
  /// Throws DomainError unless xi is finite and strictly positive and u is finite.
  State(double xi, double u);

  double xi() const { return xi_; }
  double u() const { return u_; }

  friend bool operator==(const State&, const State&) = default;

 private:
  double xi_;
  double u_;
};

struct Invariants {
  double r;
  double s;
};

struct CharSpeeds {
  double lambda_minus;
  double lambda_plus;
};

/// gamma-law pressure p(tau) = tau^(-gamma) with alpha = (gamma-1)/2 and
/// kappa = sqrt(gamma)/alpha.  Immutable; cheap to copy.
class GasModel {
 public:
  /// Smallest admissible gamma is strictly above 1 + 1e-12 (kappa blows up
  /// as gamma -> 1+).
  static constexpr double kMinGammaExcess = 1e-12;

  explicit GasModel(double gamma);

  double gamma() const { return gamma_; }
  double alpha() const { return alpha_; }
  double kappa() const { return kappa_; }

  /// r = u - kappa*xi, s = u + kappa*xi.
  Invariants invariants(const State& st) const;
  /// Inverse of invariants(); DomainError when s <= r.
  State state_from_invariants(double r, double s) const;

  /// lambda-/+ = -/+ sqrt(gamma) * xi^((alpha+1)/alpha).
  CharSpeeds char_speeds(const State& st) const;
  /// |lambda+| at the given state.
  double sound_speed(const State& st) const;

  double tau(const State& st) const;
  double density(const State& st) const;
  double pressure(const State& st) const;
  /// State from specific volume; DomainError unless tau > 0.
  State state_from_tau(double tau, double u) const;

  friend bool operator==(const GasModel&, const GasModel&) = default;

 private:
  double gamma_;
  double alpha_;
  double kappa_;
};

}  // namespace tvdlab
