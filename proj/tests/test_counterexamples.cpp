#include <catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "tvdlab/counterexamples.hpp"
#include "tvdlab/errors.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace tvdlab;

namespace {

void require_inside(const GasModel& m, const InteractionRealization& rz, double lo, double hi) {
  for (const State& st : {rz.far_left, rz.middle_in, rz.middle_out, rz.far_right}) {
    const auto i = m.invariants(st);
    CHECK(i.r > lo);
    CHECK(i.r < hi);
    CHECK(i.s > lo);
    CHECK(i.s < hi);
  }
}

double s_of(const GasModel& m, const State& st) { return m.invariants(st).s; }
double r_of(const GasModel& m, const State& st) { return m.invariants(st).r; }

// First k >= 1 with phi_<-(2^(k/16)) > c (2^(k/16) - 1), computed in long double.
long double oracle_scan(const oracle::Gas& g, long double c) {
  for (int k = 1; k < 16 * 200; ++k) {
    const long double x = std::pow(2.0L, k / 16.0L);
    if (oracle::phi_back(g, x) > c * (x - 1)) return x;
  }
  return -1;
}

CounterexampleConfig gap_config(double M, double delta) {
  CounterexampleConfig c;
  c.M = M;
  c.delta = delta;
  return c;
}

}  // namespace

TEST_CASE("case 1: overtaking backward shocks raise the variation") {
  const GasModel m(3.0);
  const Univariate theta = Univariate::linear(2.0);
  const Univariate psi = Univariate::linear(1.0);
  const auto w = find_case1(m, gap_config(1.95, 0.9), theta, psi);

  const oracle::Gas g(3.0L);
  const long double c = g.kappa * (2 * 1.95L / 0.9L - 1);
  CHECK_THAT(w.scan_ratio, WithinRel(static_cast<double>(oracle_scan(g, c)), 1e-15));
  CHECK_THAT(w.scan_threshold, WithinRel(static_cast<double>(c), 1e-15));
  CHECK_THAT(w.scan_value,
             WithinRel(static_cast<double>(oracle::phi_back(g, w.scan_ratio) / (w.scan_ratio - 1)), 1e-12));
  CHECK(w.scan_value > w.scan_threshold);
  // The ratio 35 also clears the bound (6.00 > 5.77 per unit of x - 1).
  CHECK(oracle::phi_back(g, 35.0L) / 34 > c);
  CHECK(oracle::phi_back(g, 35.0L) / 34 > 5.99L);

  const auto& rz = w.realization;
  CHECK(rz.kind == InteractionKind::IIa);
  CHECK(rz.incoming[0].ratio() == w.scan_ratio);
  CHECK(rz.incoming[1].ratio() == w.scan_ratio);
  require_inside(m, rz, -1.0, 1.0);
  const double dF_theta = 2.0 * (s_of(m, rz.far_right) - s_of(m, rz.middle_out));
  CHECK(dF_theta > 0.0);
  CHECK_THAT(w.lower_bound, WithinAbs(2.0 * dF_theta, 1e-13));
  CHECK(w.delta_var > 0.0);
  CHECK(w.delta_var >= w.lower_bound * (1.0 - 1e-9));
  CHECK(w.delta_var == delta_var(ScalarField::split(theta, psi), rz));
}

TEST_CASE("case 1: wider derivative gap needs a ratio near 120") {
  const GasModel m(3.0);
  const auto w = find_case1(m, gap_config(1.8, 0.5), Univariate::linear(2.0), Univariate::linear(1.0));
  const oracle::Gas g(3.0L);
  const long double c = g.kappa * 6.2L;
  CHECK_THAT(static_cast<double>(c), WithinAbs(10.74, 5e-3));
  CHECK_THAT(w.scan_ratio, WithinRel(static_cast<double>(oracle_scan(g, c)), 1e-15));
  CHECK(w.scan_ratio > 100.0);
  CHECK(w.scan_ratio < 140.0);
  CHECK(w.delta_var > 0.0);
  require_inside(m, w.realization, -1.0, 1.0);
}

TEST_CASE("case 1: nonlinear fields and other exponents") {
  const Univariate theta([](double v) { return 2.0 * v + 0.1 * std::sin(v); },
                         [](double v) { return 2.0 + 0.1 * std::cos(v); },
                         [](double v) { return -0.1 * std::sin(v); });
  const Univariate psi([](double v) { return v + 0.05 * v * v; }, [](double v) { return 1.0 + 0.1 * v; },
                       [](double) { return 0.1; });
  for (double gamma : {1.4, 2.0, 3.0}) {
    const GasModel m(gamma);
    const auto w = find_case1(m, gap_config(1.85, 0.7), theta, psi);
    CHECK(w.delta_var > 0.0);
    CHECK(w.delta_var >= w.lower_bound * (1.0 - 1e-9));
    require_inside(m, w.realization, -1.0, 1.0);
  }
}

TEST_CASE("case 1: preconditions") {
  const GasModel m(3.0);
  CHECK_THROWS_AS(find_case1(m, gap_config(0.9, 0.9), Univariate::linear(2.0), Univariate::linear(1.0)),
                  DomainError);
  CHECK_THROWS_AS(find_case1(m, gap_config(0.5, 0.9), Univariate::linear(2.0), Univariate::linear(1.0)),
                  DomainError);
  // theta' = 2 is not above M = 2.5.
  CHECK_THROWS_AS(find_case1(m, gap_config(2.5, 0.9), Univariate::linear(2.0), Univariate::linear(1.0)),
                  DomainError);
  CounterexampleConfig bad = gap_config(1.95, 0.9);
  bad.lo = 1.0;
  CHECK_THROWS_AS(find_case1(m, bad, Univariate::linear(2.0), Univariate::linear(1.0)), DomainError);
  CHECK_THROWS_AS(GasModel(1.0), DomainError);
}

TEST_CASE("case 2 mirrors case 1") {
  const GasModel m(3.0);
  const auto w1 = find_case1(m, gap_config(1.95, 0.9), Univariate::linear(2.0), Univariate::linear(1.0));
  const auto w2 = find_case2(m, gap_config(1.95, 0.9), Univariate::linear(1.0), Univariate::linear(2.0));
  CHECK_THAT(w2.scan_ratio, WithinRel(1.0 / w1.scan_ratio, 1e-15));
  CHECK(w2.scan_ratio < 1.0 / 30.0);
  const auto& rz = w2.realization;
  CHECK(rz.kind == InteractionKind::IIaPrime);
  require_inside(m, rz, -1.0, 1.0);
  // D_B psi: psi = 2r, so the backward outgoing change of psi is 2 (r(mid_out) - r(far_left)).
  const double dB_psi = 2.0 * (r_of(m, rz.middle_out) - r_of(m, rz.far_left));
  CHECK(dB_psi > 0.0);
  CHECK_THAT(w2.lower_bound, WithinAbs(2.0 * dB_psi, 1e-13));
  CHECK(w2.delta_var > 0.0);
  CHECK(w2.delta_var >= w2.lower_bound * (1.0 - 1e-9));
  // The gain equals the Case 1 gain on the mirrored diagram up to rounding.
  CHECK_THAT(w2.delta_var, WithinRel(2.0 * w1.delta_var, 1e-6));
}

TEST_CASE("case 2: preconditions") {
  const GasModel m(2.0);
  CHECK_THROWS_AS(find_case2(m, gap_config(1.95, 0.9), Univariate::linear(2.0), Univariate::linear(1.0)),
                  DomainError);
  CHECK_THROWS_AS(find_case2(m, gap_config(0.9, 1.0), Univariate::linear(1.0), Univariate::linear(2.0)),
                  DomainError);
}

TEST_CASE("case 3 feasibility function") {
  const GasModel m(3.0);
  CHECK_THAT(case3_feasibility(m, 10.0), WithinAbs(2.33894235971326, 1e-6));
  const oracle::Gas g(3.0L);
  for (double y : {1.5, 2.0, 5.0, 10.0, 50.0}) {
    const long double ref =
        y - (oracle::phi_back(g, y) + g.kappa * (y + 1)) / (oracle::dphi_back(g, y) + g.kappa);
    CHECK_THAT(case3_feasibility(m, y), WithinAbs(static_cast<double>(ref), 1e-6));
  }
}

TEST_CASE("case 3: rarefaction overtaken by a shock") {
  struct Run {
    double gamma;
    double epsilon;
  };
  for (const Run run : {Run{3.0, 0.5}, Run{2.0, 0.5}, Run{1.4, 0.25}}) {
    const GasModel m(run.gamma);
    CounterexampleConfig cfg;
    cfg.N_L = cfg.N_U = 1.0;
    cfg.M_U = 0.0;
    cfg.epsilon = run.epsilon;
    const auto w = find_case3(m, cfg, Univariate::linear(1.0));
    INFO("gamma " << run.gamma << " y " << w.scan_ratio);
    CHECK(w.scan_value > w.scan_threshold);
    CHECK_THAT(w.scan_threshold, WithinRel(1.0 + 2.0 * run.epsilon, 1e-15));
    // First scan point: the previous grid point fails the bound.
    CHECK(case3_feasibility(m, w.scan_ratio / std::pow(2.0, 1.0 / 16.0)) <= w.scan_threshold);

    const auto& rz = w.realization;
    CHECK((rz.kind == InteractionKind::IIb || rz.kind == InteractionKind::IIc));
    CHECK(rz.incoming[0].ratio() < 1.0);
    CHECK(rz.incoming[1].ratio() == w.scan_ratio);
    CHECK(rz.outgoing_backward.ratio() > 1.0);
    CHECK(rz.outgoing_forward.ratio() < 1.0);
    require_inside(m, rz, -1.0, 1.0);

    const WaveChanges c = w.changes;
    CHECK(c.incoming_left < 0.0);
    CHECK(c.incoming_right > 0.0);
    CHECK(c.outgoing_backward > 0.0);
    CHECK(c.outgoing_forward < c.incoming_left);
    CHECK(w.delta_var > 0.0);
    CHECK_THAT(w.delta_var, WithinAbs(-2.0 * c.outgoing_forward + 2.0 * c.incoming_left, 1e-10));
    const ScalarField f = ScalarField::split(Univariate::linear(1.0), Univariate::linear(1.0));
    CHECK(w.delta_var == delta_var(f, rz));
  }
}

TEST_CASE("case 3: nonlinear theta") {
  const GasModel m(3.0);
  const Univariate theta([](double v) { return v + 0.1 * std::sin(v); },
                         [](double v) { return 1.0 + 0.1 * std::cos(v); },
                         [](double v) { return -0.1 * std::sin(v); });
  CounterexampleConfig cfg;
  cfg.N_L = 0.9;
  cfg.N_U = 1.1;
  cfg.M_U = 0.1;
  cfg.epsilon = 0.5;
  const auto w = find_case3(m, cfg, theta);
  CHECK(w.delta_var > 0.0);
  CHECK_THAT(w.scan_threshold, WithinRel((1.1 + 1.0) / 0.9, 1e-15));
  require_inside(m, w.realization, -1.0, 1.0);

  cfg.N_U = 1.05;  // theta'(0) = 1.1
  CHECK_THROWS_AS(find_case3(m, cfg, theta), DomainError);
  cfg.N_U = 1.1;
  cfg.epsilon = 0.0;
  CHECK_THROWS_AS(find_case3(m, cfg, theta), DomainError);
}

TEST_CASE("parallel scans return the serial witness") {
  const GasModel m(3.0);
  ScanOptions serial;
  ScanOptions parallel;
  parallel.threads = 4;
  const auto a = find_case1(m, gap_config(1.8, 0.5), Univariate::linear(2.0), Univariate::linear(1.0), serial);
  const auto b = find_case1(m, gap_config(1.8, 0.5), Univariate::linear(2.0), Univariate::linear(1.0), parallel);
  CHECK(a.scan_ratio == b.scan_ratio);
  CHECK(a.delta_var == b.delta_var);
  CHECK(a.halvings == b.halvings);
  CHECK(a.realization.far_left == b.realization.far_left);

  CounterexampleConfig cfg;
  cfg.N_L = cfg.N_U = 1.0;
  cfg.epsilon = 0.25;
  const GasModel m14(1.4);
  const auto c = find_case3(m14, cfg, Univariate::linear(1.0), serial);
  const auto d = find_case3(m14, cfg, Univariate::linear(1.0), parallel);
  CHECK(c.scan_ratio == d.scan_ratio);
  CHECK(c.delta_var == d.delta_var);
  CHECK(c.realization.incoming[0].ratio() == d.realization.incoming[0].ratio());

  const auto e = find_case2(m, gap_config(1.95, 0.9), Univariate::linear(1.0), Univariate::linear(2.0), serial);
  const auto f = find_case2(m, gap_config(1.95, 0.9), Univariate::linear(1.0), Univariate::linear(2.0), parallel);
  CHECK(e.scan_ratio == f.scan_ratio);
  CHECK(e.delta_var == f.delta_var);
}
