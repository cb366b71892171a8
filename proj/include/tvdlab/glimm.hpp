#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string_view>
#include <vector>

#include "tvdlab/gas_model.hpp"
#include "tvdlab/scalar_field.hpp"

namespace tvdlab {

/// One row of a piecewise-constant initial condition: (tau, u) holds from X
/// up to the next row.
struct IcRow {
  double X;
  double tau;
  double u;
};

/// Parses `X,tau,u` CSV with a header line.  Throws DomainError on malformed
/// rows, unsorted X or tau <= 0.
std::vector<IcRow> read_ic_csv(std::istream& in);

/// Piecewise-constant Glimm grid.  Cell j has center
/// x_lo + (j + 1/2 + offset) dx, where offset alternates between 0 and 1/2
/// from one step to the next (staggered grid).
struct GridSolution {
  GasModel model;
  std::vector<State> cells;
  double dx;
  double x_lo;
  double offset;
  double time;

  double center(std::size_t j) const {
    return x_lo + (static_cast<double>(j) + 0.5 + offset) * dx;
  }
};

/// Samples the initial condition at the cell centers of `cells` equal cells
/// on [x_lo, x_hi].  A center takes the last row with X <= center, or the
/// first row when it lies before all of them.
GridSolution init_simulation(const GasModel& model, const std::vector<IcRow>& ic, std::size_t cells,
                             double x_lo, double x_hi);

struct AdvanceOptions {
  double cfl = 0.9;
  double max_dt = 0.0;  // 0: unlimited
};

/// Largest speed of any wave in the interface Riemann fans of the grid
/// (outflow ghosts included).  Throws VacuumEncountered.
double max_wave_speed(const GridSolution& sol);

/// One Glimm step with dt = cfl dx / (2 max wave speed), clamped to max_dt.
/// Each new cell is the interface fan sampled at X/t = (sample - 1/2) dx/dt.
/// Throws VacuumEncountered when an interface Riemann problem has vacuum
/// and DomainError unless sample is in [0, 1).
GridSolution advance(const GridSolution& sol, double sample, const AdvanceOptions& opt = {});

enum class SequenceKind { VanDerCorput, Prng };

std::string_view to_string(SequenceKind k);

/// Radical inverse of n in base 2.
double van_der_corput(std::uint64_t n);

/// Sampling sequence in [0, 1).  van der Corput starts at index seed + 1;
/// the PRNG is mt19937_64 seeded with `seed`, mapped to 53-bit doubles so the
/// stream is identical on every platform.
class SampleSequence {
 public:
  SampleSequence(SequenceKind kind, std::uint64_t seed);
  double next();

 private:
  SequenceKind kind_;
  std::uint64_t index_;
  std::mt19937_64 rng_;
};

/// Functionals of one grid.
struct Functionals {
  double total_var_phi;  // sum |phi_{j+1} - phi_j|
  double nishida_N;      // |dr| over backward shocks + |ds| over forward shocks of interface fans
  double liu_L;          // var of s - r
};

Functionals measure(const GridSolution& sol, const ScalarField& field);

struct FunctionalTrace {
  std::vector<double> times;
  std::vector<double> total_var_phi;
  std::vector<double> nishida_N;
  std::vector<double> liu_L;

  std::size_t size() const { return times.size(); }
};

struct RunOptions {
  SequenceKind sequence = SequenceKind::VanDerCorput;
  std::uint64_t seed = 0;
  double cfl = 0.9;
  std::size_t max_steps = 1000000;
  /// Called after each recorded grid, the initial one included.
  std::function<void(const GridSolution&, const Functionals&)> observer;
};

/// Advances `sol` to t_end, recording the initial grid and every step.
/// Throws DomainError unless t_end > sol.time, and ConvergenceError when
/// max_steps is exhausted first.
FunctionalTrace run(GridSolution& sol, double t_end, const ScalarField& field,
                    const RunOptions& opt = {});

}  // namespace tvdlab
