#pragma once

#include <functional>
#include <optional>

#include "tvdlab/gas_model.hpp"
#include "tvdlab/jet.hpp"

namespace tvdlab {

/// A scalar function of one variable carrying its first two derivatives.
class Univariate {
 public:
  using Fn = std::function<double(double)>;

  Univariate(Fn f, Fn d1, Fn d2);

  /// Wraps a plain function with central differences: step
  /// max(1e-6, 1e-6 |v|) for the first derivative and max(1e-4, 1e-4 |v|)
  /// for the second.
  static Univariate finite_difference(Fn f);
  /// v -> slope * v + offset.
  static Univariate linear(double slope, double offset = 0.0);

  double operator()(double v) const { return f_(v); }
  double d1(double v) const { return d1_(v); }
  double d2(double v) const { return d2_(v); }

 private:
  Fn f_;
  Fn d1_;
  Fn d2_;
};

/// phi(r, s) = theta(s) - psi(r).
struct SplitForm {
  Univariate theta;
  Univariate psi;
};

/// A C^2 scalar field phi(r, s) on the Riemann-invariant half-plane s > r.
class ScalarField {
 public:
  using JetFn = std::function<Jet2(double r, double s)>;
  using PlainFn = std::function<double(double r, double s)>;

  /// Field with analytic value, gradient and Hessian.
  static ScalarField general(JetFn jet);
  /// Field known only by value; derivatives by central differences.
  static ScalarField finite_difference(PlainFn f);
  /// theta(s) - psi(r); the mixed partial is identically zero.
  static ScalarField split(Univariate theta, Univariate psi);

  double value(double r, double s) const;
  Jet2 jet(double r, double s) const { return jet_(r, s); }
  /// phi evaluated at the invariants of a gas state.
  double at(const GasModel& model, const State& st) const;

  const std::optional<SplitForm>& split_form() const { return split_; }

 private:
  explicit ScalarField(JetFn jet, std::optional<SplitForm> split = std::nullopt)
      : jet_(std::move(jet)), split_(std::move(split)) {}

  JetFn jet_;
  std::optional<SplitForm> split_;
};

}  // namespace tvdlab
