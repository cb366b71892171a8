#include "tvdlab/gas_model.hpp"

#include <cmath>
#include <string>

#include "tvdlab/errors.hpp"

namespace tvdlab {

State::State(double xi, double u) : xi_(xi), u_(u) {
  if (!(xi > 0.0) || !std::isfinite(xi)) {
    throw DomainError("State: xi must be finite and > 0, got " + std::to_string(xi));
  }
  if (!std::isfinite(u)) {
    throw DomainError("State: u must be finite");
  }
}

GasModel::GasModel(double gamma) : gamma_(gamma) {
  if (!std::isfinite(gamma) || !(gamma > 1.0 + kMinGammaExcess)) {
    throw DomainError("GasModel: gamma must exceed 1 (isothermal and sub-isothermal "
                      "models are unsupported), got " +
                      std::to_string(gamma));
  }
  alpha_ = 0.5 * (gamma - 1.0);
  kappa_ = std::sqrt(gamma) / alpha_;
}

Invariants GasModel::invariants(const State& st) const {
  const double w = kappa_ * st.xi();
  return {st.u() - w, st.u() + w};
}

State GasModel::state_from_invariants(double r, double s) const {
  if (!(s > r)) {
    throw DomainError("state_from_invariants: need s > r (s <= r is vacuum or invalid)");
  }
  return State((s - r) / (2.0 * kappa_), 0.5 * (s + r));
}

CharSpeeds GasModel::char_speeds(const State& st) const {
  const double c = sound_speed(st);
  return {-c, c};
}

double GasModel::sound_speed(const State& st) const {
  return std::sqrt(gamma_) * std::pow(st.xi(), (alpha_ + 1.0) / alpha_);
}

double GasModel::tau(const State& st) const { return std::pow(st.xi(), -1.0 / alpha_); }

double GasModel::density(const State& st) const { return std::pow(st.xi(), 1.0 / alpha_); }

double GasModel::pressure(const State& st) const {
  return std::pow(st.xi(), gamma_ / alpha_);
}

State GasModel::state_from_tau(double tau, double u) const {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw DomainError("state_from_tau: tau must be finite and > 0");
  }
  return State(std::pow(tau, -alpha_), u);
}

}  // namespace tvdlab
