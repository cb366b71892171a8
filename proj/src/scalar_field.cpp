#include "tvdlab/scalar_field.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace tvdlab {

namespace {

double first_step(double v) { return std::max(1e-6, 1e-6 * std::abs(v)); }
double second_step(double v) { return std::max(1e-4, 1e-4 * std::abs(v)); }

}  // namespace

Univariate::Univariate(Fn f, Fn d1, Fn d2)
    : f_(std::move(f)), d1_(std::move(d1)), d2_(std::move(d2)) {}

Univariate Univariate::finite_difference(Fn f) {
  Fn d1 = [f](double v) {
    const double h = first_step(v);
    return (f(v + h) - f(v - h)) / (2.0 * h);
  };
  Fn d2 = [f](double v) {
    const double h = second_step(v);
    return (f(v + h) - 2.0 * f(v) + f(v - h)) / (h * h);
  };
  return Univariate(f, std::move(d1), std::move(d2));
}

Univariate Univariate::linear(double slope, double offset) {
  return Univariate([=](double v) { return slope * v + offset; }, [=](double) { return slope; },
                    [](double) { return 0.0; });
}

ScalarField ScalarField::general(JetFn jet) { return ScalarField(std::move(jet)); }

ScalarField ScalarField::finite_difference(PlainFn f) {
  return ScalarField([f](double r, double s) {
    const double hr = first_step(r);
    const double hs = first_step(s);
    const double Hr = second_step(r);
    const double Hs = second_step(s);
    const double f0 = f(r, s);
    Jet2 j;
    j.v = f0;
    j.dr = (f(r + hr, s) - f(r - hr, s)) / (2.0 * hr);
    j.ds = (f(r, s + hs) - f(r, s - hs)) / (2.0 * hs);
    j.drr = (f(r + Hr, s) - 2.0 * f0 + f(r - Hr, s)) / (Hr * Hr);
    j.dss = (f(r, s + Hs) - 2.0 * f0 + f(r, s - Hs)) / (Hs * Hs);
    j.drs = (f(r + Hr, s + Hs) - f(r + Hr, s - Hs) - f(r - Hr, s + Hs) + f(r - Hr, s - Hs)) /
            (4.0 * Hr * Hs);
    return j;
  });
}

ScalarField ScalarField::split(Univariate theta, Univariate psi) {
  JetFn jet = [theta, psi](double r, double s) {
    Jet2 j;
    j.v = theta(s) - psi(r);
    j.ds = theta.d1(s);
    j.dr = -psi.d1(r);
    j.dss = theta.d2(s);
    j.drr = -psi.d2(r);
    j.drs = 0.0;
    return j;
  };
  return ScalarField(std::move(jet), SplitForm{std::move(theta), std::move(psi)});
}

double ScalarField::value(double r, double s) const {
  if (split_) return split_->theta(s) - split_->psi(r);
  return jet_(r, s).v;
}

double ScalarField::at(const GasModel& model, const State& st) const {
  const Invariants inv = model.invariants(st);
  return value(inv.r, inv.s);
}

}  // namespace tvdlab
