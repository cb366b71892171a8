#include "tvdlab/glimm.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <string>
#include <variant>

#include "tvdlab/errors.hpp"
#include "tvdlab/riemann.hpp"

namespace tvdlab {

namespace {

double parse_number(std::string_view field, std::size_t line) {
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
  while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r')) {
    field.remove_suffix(1);
  }
  double v = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || end != field.data() + field.size() || !std::isfinite(v)) {
    throw DomainError("ic csv line " + std::to_string(line) + ": bad number '" +
                      std::string(field) + "'");
  }
  return v;
}

RiemannFan interface_fan(const GasModel& model, const State& left, const State& right) {
  RiemannOutcome out = solve_riemann(model, left, right);
  if (std::holds_alternative<Vacuum>(out)) {
    throw VacuumEncountered("interface Riemann problem produces vacuum");
  }
  return std::get<RiemannFan>(out);
}

// Interface fans of the grid with outflow ghosts: offset 0 pairs (j, j+1)
// with a ghost copy of the last cell; offset 1/2 pairs (j-1, j) with a ghost
// copy of the first cell.  Entry j feeds new cell j.
std::vector<RiemannFan> staggered_fans(const GridSolution& sol) {
  const auto& c = sol.cells;
  const std::size_t n = c.size();
  std::vector<RiemannFan> fans;
  fans.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (sol.offset == 0.0) {
      fans.push_back(interface_fan(sol.model, c[j], c[std::min(j + 1, n - 1)]));
    } else {
      fans.push_back(interface_fan(sol.model, c[j == 0 ? 0 : j - 1], c[j]));
    }
  }
  return fans;
}

double fan_speed(const GasModel& model, const RiemannFan& fan) {
  double m = 0.0;
  for (Family f : {Family::Backward, Family::Forward}) {
    const SpeedSpan span = wave_span(model, fan, f);
    m = std::max({m, std::abs(span.lo), std::abs(span.hi)});
  }
  for (const State* st : {&fan.left, &fan.middle, &fan.right}) {
    m = std::max(m, model.sound_speed(*st));
  }
  return m;
}

double time_step(const GridSolution& sol, double speed, const AdvanceOptions& opt) {
  double dt = opt.cfl * sol.dx / (2.0 * speed);
  if (opt.max_dt > 0.0) dt = std::min(dt, opt.max_dt);
  return dt;
}

}  // namespace

std::vector<IcRow> read_ic_csv(std::istream& in) {
  std::vector<IcRow> rows;
  std::string line;
  std::size_t number = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (header) {
      header = false;
      continue;
    }
    std::string_view rest(line);
    double v[3];
    for (int k = 0; k < 3; ++k) {
      const std::size_t comma = rest.find(',');
      if ((k < 2) == (comma == std::string_view::npos)) {
        throw DomainError("ic csv line " + std::to_string(number) + ": expected 3 columns");
      }
      v[k] = parse_number(rest.substr(0, comma), number);
      if (k < 2) rest.remove_prefix(comma + 1);
    }
    if (!(v[1] > 0.0)) {
      throw DomainError("ic csv line " + std::to_string(number) + ": tau must be positive");
    }
    if (!rows.empty() && !(v[0] > rows.back().X)) {
      throw DomainError("ic csv line " + std::to_string(number) + ": X must increase");
    }
    rows.push_back({v[0], v[1], v[2]});
  }
  if (rows.empty()) throw DomainError("ic csv: no data rows");
  return rows;
}

GridSolution init_simulation(const GasModel& model, const std::vector<IcRow>& ic, std::size_t cells,
                             double x_lo, double x_hi) {
  if (cells < 2) throw DomainError("init_simulation: need at least 2 cells");
  if (ic.empty()) throw DomainError("init_simulation: empty initial condition");
  if (!(x_lo < x_hi) || !std::isfinite(x_lo) || !std::isfinite(x_hi)) {
    throw DomainError("init_simulation: need x_lo < x_hi");
  }
  for (const IcRow& row : ic) {
    if (!(row.tau > 0.0)) throw DomainError("init_simulation: tau must be positive");
  }
  GridSolution sol{model, {}, (x_hi - x_lo) / static_cast<double>(cells), x_lo, 0.0, 0.0};
  sol.cells.reserve(cells);
  std::size_t row = 0;
  for (std::size_t j = 0; j < cells; ++j) {
    const double x = sol.center(j);
    while (row + 1 < ic.size() && ic[row + 1].X <= x) ++row;
    sol.cells.push_back(model.state_from_tau(ic[row].tau, ic[row].u));
  }
  return sol;
}

double max_wave_speed(const GridSolution& sol) {
  double m = 0.0;
  for (const RiemannFan& fan : staggered_fans(sol)) m = std::max(m, fan_speed(sol.model, fan));
  return m;
}

GridSolution advance(const GridSolution& sol, double sample, const AdvanceOptions& opt) {
  if (!(sample >= 0.0 && sample < 1.0)) throw DomainError("advance: sample must lie in [0, 1)");
  if (!(opt.cfl > 0.0 && opt.cfl <= 1.0)) throw DomainError("advance: cfl must lie in (0, 1]");

  const std::vector<RiemannFan> fans = staggered_fans(sol);
  double speed = 0.0;
  for (const RiemannFan& fan : fans) speed = std::max(speed, fan_speed(sol.model, fan));
  const double dt = time_step(sol, speed, opt);
  assert(dt * speed <= 0.5 * sol.dx * (1.0 + 1e-12));

  GridSolution next = sol;
  const double sigma = (sample - 0.5) * sol.dx / dt;
  for (std::size_t j = 0; j < fans.size(); ++j) {
    next.cells[j] = sample_fan(sol.model, fans[j], sigma);
  }
  if (sol.offset == 0.0) {
    next.offset = 0.5;
  } else {
    next.offset = 0.0;
  }
  next.time = sol.time + dt;
  return next;
}

std::string_view to_string(SequenceKind k) {
  return k == SequenceKind::VanDerCorput ? "vdc" : "prng";
}

double van_der_corput(std::uint64_t n) {
  double q = 0.0;
  double scale = 0.5;
  while (n != 0) {
    if (n & 1u) q += scale;
    n >>= 1;
    scale *= 0.5;
  }
  return q;
}

SampleSequence::SampleSequence(SequenceKind kind, std::uint64_t seed)
    : kind_(kind), index_(seed), rng_(seed) {}

double SampleSequence::next() {
  if (kind_ == SequenceKind::VanDerCorput) return van_der_corput(++index_);
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

Functionals measure(const GridSolution& sol, const ScalarField& field) {
  const GasModel& model = sol.model;
  Functionals f{0.0, 0.0, 0.0};
  for (std::size_t j = 0; j + 1 < sol.cells.size(); ++j) {
    const State& a = sol.cells[j];
    const State& b = sol.cells[j + 1];
    const Invariants ia = model.invariants(a);
    const Invariants ib = model.invariants(b);
    f.total_var_phi += std::abs(field.value(ib.r, ib.s) - field.value(ia.r, ia.s));
    f.liu_L += std::abs((ib.s - ib.r) - (ia.s - ia.r));
    if (a == b) continue;
    const RiemannFan fan = interface_fan(model, a, b);
    const Invariants im = model.invariants(fan.middle);
    if (fan.backward.kind() == WaveKind::Shock) f.nishida_N += std::abs(im.r - ia.r);
    if (fan.forward.kind() == WaveKind::Shock) f.nishida_N += std::abs(ib.s - im.s);
  }
  return f;
}

FunctionalTrace run(GridSolution& sol, double t_end, const ScalarField& field,
                    const RunOptions& opt) {
  if (!(t_end > sol.time) || !std::isfinite(t_end)) {
    throw DomainError("run: t_end must exceed the current time");
  }
  FunctionalTrace trace;
  auto record = [&] {
    const Functionals f = measure(sol, field);
    trace.times.push_back(sol.time);
    trace.total_var_phi.push_back(f.total_var_phi);
    trace.nishida_N.push_back(f.nishida_N);
    trace.liu_L.push_back(f.liu_L);
    if (opt.observer) opt.observer(sol, f);
  };
  record();

  SampleSequence seq(opt.sequence, opt.seed);
  for (std::size_t step = 0; sol.time < t_end; ++step) {
    if (step == opt.max_steps) {
      throw ConvergenceError("run: step budget exhausted before t_end");
    }
    AdvanceOptions adv{opt.cfl, t_end - sol.time};
    GridSolution next = advance(sol, seq.next(), adv);
    // The clamp can leave a remainder of a few ulp; land exactly on t_end.
    if (t_end - next.time <= 1e-14 * std::max(1.0, std::abs(t_end))) next.time = t_end;
    sol = std::move(next);
    record();
  }
  return trace;
}

}  // namespace tvdlab
