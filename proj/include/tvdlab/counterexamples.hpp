#pragma once

#include "tvdlab/gas_model.hpp"
#include "tvdlab/interactions.hpp"
#include "tvdlab/scalar_field.hpp"
#include "tvdlab/tvd.hpp"

namespace tvdlab {

/// Parameters of the three variation-increasing constructions.
///
/// Cases 1 and 2 use the interval (lo, hi) as J together with the derivative
/// gap M > delta > 0.  Case 3 uses (lo, hi) as I with bounds
/// N_L <= theta' <= N_U, |theta''| <= M_U and slack epsilon > 0.
struct CounterexampleConfig {
  double lo = -1.0;
  double hi = 1.0;
  double M = 0.0;
  double delta = 0.0;
  double M_U = 0.0;
  double N_L = 0.0;
  double N_U = 0.0;
  double epsilon = 0.0;
};

/// Scan controls.  Candidate ratios are 2^(k/16) (2^(-k/16) for Case 2),
/// k = 1, 2, ...; with threads > 1 blocks of candidates are probed in
/// parallel and reduced in scan order, so the first witness is identical to
/// the serial scan.
struct ScanOptions {
  unsigned threads = 1;
  int steps_per_octave = 16;
  int max_halvings = 200;
};

struct CounterexampleWitness {
  InteractionRealization realization;
  WaveChanges changes;     // of the tested field across the four waves
  double delta_var;
  double lower_bound;      // 2 D_F theta (Case 1), 2 D_B psi (Case 2), -2 D_F phi + 2 D_x phi (Case 3)
  double scan_ratio;       // x = y for Cases 1 and 2, y for Case 3
  double scan_value;       // left side of the scanned inequality at scan_ratio
  double scan_threshold;   // its right side
  int halvings;            // number of xi-bar halvings taken
};

/// Left side of the Case 3 feasibility inequality,
/// y - (phi_<-(y) + kappa (y + 1)) / (phi_<-'(y) + kappa).
double case3_feasibility(const GasModel& model, double y);

/// S<- S<- interaction with delta_var >= 2 D_F theta > 0 for
/// phi = theta(s) - psi(r), assuming theta' > M > psi' + delta on J.
/// Throws DomainError if the config or the derivative bounds fail on J and
/// SearchError if no admissible ratio exists below the overflow cap.
CounterexampleWitness find_case1(const GasModel& model, const CounterexampleConfig& cfg,
                                 const Univariate& theta, const Univariate& psi,
                                 const ScanOptions& opt = {});

/// Mirror of Case 1: S-> S-> interaction with delta_var >= 2 D_B psi > 0,
/// assuming psi' > M > theta' + delta on J.
CounterexampleWitness find_case2(const GasModel& model, const CounterexampleConfig& cfg,
                                 const Univariate& theta, const Univariate& psi,
                                 const ScanOptions& opt = {});

/// R<- S<- interaction with delta_var > 0 for phi = theta(s) - theta(r), the
/// outgoing pattern being S<- S->.  The returned realization satisfies
/// D_x phi < 0, D_y phi > 0, D_B phi > 0 and D_F phi < D_x phi, and
/// delta_var = -2 D_F phi + 2 D_x phi to 1e-10.
CounterexampleWitness find_case3(const GasModel& model, const CounterexampleConfig& cfg,
                                 const Univariate& theta, const ScanOptions& opt = {});

}  // namespace tvdlab
