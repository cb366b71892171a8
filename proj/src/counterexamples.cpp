#include "tvdlab/counterexamples.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "tvdlab/errors.hpp"
#include "tvdlab/wave_curves.hpp"

namespace tvdlab {

namespace {

constexpr int kMaxScanIndex = 16 * 1024;
constexpr int kDerivativeSamples = 257;
constexpr double kMarginFraction = 0.01;
constexpr double kIdentityTol = 1e-10;
// The lower bound is attained exactly when D_B phi <= 0; allow rounding.
constexpr double kBoundRelTol = 1e-12;

enum class Probe { Miss, Hit, Overflow };

struct ScanHit {
  int index;
  double ratio;
};

// First k in [1, kMaxScanIndex] whose probe is not a miss, evaluated in
// blocks; results inside a block are reduced in index order.
ScanHit first_in_scan_order(const std::function<double(int)>& ratio_at,
                            const std::function<Probe(double)>& probe, unsigned threads,
                            const char* what) {
  const unsigned workers = std::max(1u, threads);
  const int block = 32 * static_cast<int>(workers);
  for (int start = 1; start <= kMaxScanIndex; start += block) {
    const int n = std::min(block, kMaxScanIndex - start + 1);
    std::vector<Probe> results(n, Probe::Miss);
    auto run = [&](unsigned lane) {
      for (int i = static_cast<int>(lane); i < n; i += static_cast<int>(workers)) {
        try {
          results[i] = probe(ratio_at(start + i));
        } catch (const OverflowError&) {
          results[i] = Probe::Overflow;
        }
      }
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::future<void>> lanes;
      for (unsigned t = 0; t < workers; ++t) lanes.push_back(std::async(std::launch::async, run, t));
      for (auto& l : lanes) l.get();
    }
    for (int i = 0; i < n; ++i) {
      if (results[i] == Probe::Hit) return {start + i, ratio_at(start + i)};
      if (results[i] == Probe::Overflow) {
        throw SearchError(std::string(what) + ": scan reached the overflow cap at ratio " +
                          std::to_string(ratio_at(start + i)) + " without a witness");
      }
    }
  }
  throw SearchError(std::string(what) + ": scan exhausted");
}

void check_interval(const CounterexampleConfig& cfg) {
  if (!(cfg.lo < cfg.hi) || !std::isfinite(cfg.lo) || !std::isfinite(cfg.hi)) {
    throw DomainError("counterexample: interval needs lo < hi");
  }
}

void check_gap(const CounterexampleConfig& cfg) {
  check_interval(cfg);
  if (!(cfg.delta > 0.0) || !(cfg.M > cfg.delta)) {
    throw DomainError("counterexample: need M > delta > 0");
  }
}

// Calls fn on interior sample points of (lo, hi).
template <class Fn>
void for_each_sample(const CounterexampleConfig& cfg, Fn&& fn) {
  for (int i = 1; i <= kDerivativeSamples; ++i) {
    const double t = static_cast<double>(i) / (kDerivativeSamples + 1);
    fn(cfg.lo + t * (cfg.hi - cfg.lo));
  }
}

bool invariants_inside(const GasModel& model, const InteractionRealization& rz,
                       const CounterexampleConfig& cfg) {
  const double margin = kMarginFraction * (cfg.hi - cfg.lo);
  const double lo = cfg.lo + margin;
  const double hi = cfg.hi - margin;
  for (const State* st : {&rz.far_left, &rz.middle_in, &rz.middle_out, &rz.far_right}) {
    const Invariants inv = model.invariants(*st);
    if (!(inv.r > lo && inv.r < hi && inv.s > lo && inv.s < hi)) return false;
  }
  return true;
}

double scan_ratio_up(int k, const ScanOptions& opt) {
  return std::exp2(static_cast<double>(k) / opt.steps_per_octave);
}

double scan_ratio_down(int k, const ScanOptions& opt) {
  return std::exp2(-static_cast<double>(k) / opt.steps_per_octave);
}

double rounding_slack(const WaveChanges& c) {
  return kBoundRelTol * (std::abs(c.incoming_left) + std::abs(c.incoming_right) +
                         std::abs(c.outgoing_backward) + std::abs(c.outgoing_forward));
}

double max_ratio(const InteractionRealization& rz) {
  double m = 1.0;
  for (const State* st : {&rz.middle_in, &rz.middle_out, &rz.far_right}) {
    m = std::max(m, st->xi() / rz.far_left.xi());
  }
  return m;
}

// Halves xi-bar from (hi - lo) / (8 kappa x_max) until `accept` holds on a
// realization whose states all lie inside the interval.
template <class Accept>
CounterexampleWitness shrink_far_left(const GasModel& model, const CounterexampleConfig& cfg,
                                      InteractionKind kind, double q1, double q2,
                                      const ScanOptions& opt, Accept&& accept, const char* what) {
  const double u_bar = 0.5 * (cfg.lo + cfg.hi);
  const InteractionRealization probe = realize(model, kind, q1, q2, State(1.0, u_bar));
  const double xi0 = (cfg.hi - cfg.lo) / (8.0 * model.kappa() * max_ratio(probe));
  for (int h = 0; h <= opt.max_halvings; ++h) {
    const double xi_bar = std::ldexp(xi0, -h);
    InteractionRealization rz = realize(model, kind, q1, q2, State(xi_bar, u_bar));
    if (!invariants_inside(model, rz, cfg)) continue;
    CounterexampleWitness w{std::move(rz), {}, 0.0, 0.0, 0.0, 0.0, 0.0, h};
    if (accept(w)) return w;
  }
  throw SearchError(std::string(what) + ": no far-left state within " +
                    std::to_string(opt.max_halvings) + " halvings");
}

}  // namespace

double case3_feasibility(const GasModel& model, double y) {
  const double kappa = model.kappa();
  return y - (phi(model, Family::Backward, y) + kappa * (y + 1.0)) /
                 (phi_deriv(model, Family::Backward, y) + kappa);
}

CounterexampleWitness find_case1(const GasModel& model, const CounterexampleConfig& cfg,
                                 const Univariate& theta, const Univariate& psi,
                                 const ScanOptions& opt) {
  check_gap(cfg);
  for_each_sample(cfg, [&](double v) {
    if (!(theta.d1(v) > cfg.M) || !(cfg.M > psi.d1(v) + cfg.delta)) {
      throw DomainError("find_case1: theta' > M > psi' + delta fails at " + std::to_string(v));
    }
  });

  const double kappa = model.kappa();
  const double threshold = kappa * (2.0 * cfg.M / cfg.delta - 1.0);
  const ScanHit hit = first_in_scan_order(
      [&](int k) { return scan_ratio_up(k, opt); },
      [&](double x) {
        return phi(model, Family::Backward, x) > threshold * (x - 1.0) ? Probe::Hit : Probe::Miss;
      },
      opt.threads, "find_case1");
  const double x = hit.ratio;

  const ScalarField field = ScalarField::split(theta, psi);
  auto accept = [&](CounterexampleWitness& w) {
    const InteractionRealization& rz = w.realization;
    w.changes = wave_changes(field, rz);
    w.delta_var = delta_var(field, rz);
    const double dF_theta = theta(model.invariants(rz.far_right).s) -
                            theta(model.invariants(rz.middle_out).s);
    w.lower_bound = 2.0 * dF_theta;
    return w.changes.incoming_left < 0.0 && w.changes.incoming_right < 0.0 && dF_theta > 0.0 &&
           w.delta_var >= w.lower_bound - rounding_slack(w.changes) && w.delta_var > 0.0;
  };
  CounterexampleWitness w =
      shrink_far_left(model, cfg, InteractionKind::IIa, x, x, opt, accept, "find_case1");
  w.scan_ratio = x;
  w.scan_value = phi(model, Family::Backward, x) / (x - 1.0);
  w.scan_threshold = threshold;
  return w;
}

CounterexampleWitness find_case2(const GasModel& model, const CounterexampleConfig& cfg,
                                 const Univariate& theta, const Univariate& psi,
                                 const ScanOptions& opt) {
  check_gap(cfg);
  for_each_sample(cfg, [&](double v) {
    if (!(psi.d1(v) > cfg.M) || !(cfg.M > theta.d1(v) + cfg.delta)) {
      throw DomainError("find_case2: psi' > M > theta' + delta fails at " + std::to_string(v));
    }
  });

  const double kappa = model.kappa();
  const double threshold = kappa * (1.0 - 2.0 * cfg.M / cfg.delta);
  const ScanHit hit = first_in_scan_order(
      [&](int k) { return scan_ratio_down(k, opt); },
      [&](double x) {
        return phi(model, Family::Forward, x) < threshold * (1.0 - x) ? Probe::Hit : Probe::Miss;
      },
      opt.threads, "find_case2");
  const double x = hit.ratio;

  const ScalarField field = ScalarField::split(theta, psi);
  auto accept = [&](CounterexampleWitness& w) {
    const InteractionRealization& rz = w.realization;
    w.changes = wave_changes(field, rz);
    w.delta_var = delta_var(field, rz);
    const double dB_psi = psi(model.invariants(rz.middle_out).r) -
                          psi(model.invariants(rz.far_left).r);
    w.lower_bound = 2.0 * dB_psi;
    return w.changes.incoming_left > 0.0 && w.changes.incoming_right > 0.0 && dB_psi > 0.0 &&
           w.delta_var >= w.lower_bound - rounding_slack(w.changes) && w.delta_var > 0.0;
  };
  CounterexampleWitness w =
      shrink_far_left(model, cfg, InteractionKind::IIaPrime, x, x, opt, accept, "find_case2");
  w.scan_ratio = x;
  w.scan_value = phi(model, Family::Forward, x) / (1.0 - x);
  w.scan_threshold = threshold;
  return w;
}

CounterexampleWitness find_case3(const GasModel& model, const CounterexampleConfig& cfg,
                                 const Univariate& theta, const ScanOptions& opt) {
  check_interval(cfg);
  if (!(cfg.N_L > 0.0) || !(cfg.N_U >= cfg.N_L) || !(cfg.M_U >= 0.0) || !(cfg.epsilon > 0.0)) {
    throw DomainError("find_case3: need N_U >= N_L > 0, M_U >= 0, epsilon > 0");
  }
  for_each_sample(cfg, [&](double v) {
    const double d1 = theta.d1(v);
    if (!(d1 >= cfg.N_L && d1 <= cfg.N_U) || !(std::abs(theta.d2(v)) <= cfg.M_U)) {
      throw DomainError("find_case3: derivative bounds on theta fail at " + std::to_string(v));
    }
  });

  const double threshold = (cfg.N_U + 2.0 * cfg.epsilon) / cfg.N_L;
  const ScanHit hit = first_in_scan_order(
      [&](int k) { return scan_ratio_up(k, opt); },
      [&](double y) { return case3_feasibility(model, y) > threshold ? Probe::Hit : Probe::Miss; },
      opt.threads, "find_case3");
  const double y = hit.ratio;

  // Move x towards 1 until the outcome is S<- S-> and the working inequality holds.
  double x = 0.5;
  bool found = false;
  for (int i = 0; i < 60; ++i) {
    const OutgoingRatios out = resolve_overtaking(model, x, y);
    if (out.backward > 1.0 &&
        cfg.N_L * out.backward * (1.0 - out.forward) > (cfg.N_U + cfg.epsilon) * (1.0 - x)) {
      found = true;
      break;
    }
    x = 0.5 * (x + 1.0);
  }
  if (!found) throw SearchError("find_case3: no rarefaction ratio x < 1 satisfies the bound");

  const ScalarField field = ScalarField::split(theta, theta);
  auto accept = [&](CounterexampleWitness& w) {
    w.changes = wave_changes(field, w.realization);
    w.delta_var = delta_var(field, w.realization);
    const WaveChanges& c = w.changes;
    w.lower_bound = -2.0 * c.outgoing_forward + 2.0 * c.incoming_left;
    return c.incoming_left < 0.0 && c.incoming_right > 0.0 && c.outgoing_backward > 0.0 &&
           c.outgoing_forward < c.incoming_left && w.delta_var > 0.0;
  };
  CounterexampleWitness w =
      shrink_far_left(model, cfg, InteractionKind::IIc, x, y, opt, accept, "find_case3");
  if (!(std::abs(w.delta_var - w.lower_bound) <= kIdentityTol)) {
    throw SearchError("find_case3: delta_var differs from -2 D_F phi + 2 D_x phi");
  }
  w.scan_ratio = y;
  w.scan_value = case3_feasibility(model, y);
  w.scan_threshold = threshold;
  return w;
}

}  // namespace tvdlab
