#pragma once

#include <string_view>

#include "tvdlab/gas_model.hpp"
#include "tvdlab/interactions.hpp"
#include "tvdlab/scalar_field.hpp"

namespace tvdlab {

/// Change phi_right - phi_left across each of the four waves of a realization.
/// For head-on kinds `incoming_left` is the forward wave; for overtaking kinds
/// it is the x-wave.
struct WaveChanges {
  double incoming_left;
  double incoming_right;
  double outgoing_backward;
  double outgoing_forward;
};

WaveChanges wave_changes(const ScalarField& field, const InteractionRealization& rz);

/// Spatial variation of phi across the incoming pair and the outgoing pair.
struct VariationPair {
  double before;
  double after;
};

VariationPair variation(const ScalarField& field, const InteractionRealization& rz);

/// after - before; positive means the interaction created variation of phi.
double delta_var(const ScalarField& field, const InteractionRealization& rz);

enum class InvariantChannel { R, S };

/// Change h(r~) - h(r_bar) (R channel) or k(s~) - k(s_bar) (S channel) across a
/// backward shock of ratio x >= 1 with left state `left`, computed from the
/// integral representation along the shock curve by adaptive Gauss-Kronrod
/// quadrature (absolute tolerance 1e-10).  x == 1 gives 0.
///
/// Throws DomainError for x < 1 and QuadratureError when the error estimate
/// stays above tolerance after 2^13 subdivisions.
double shock_delta_quadrature(const GasModel& model, const Univariate& h, InvariantChannel channel,
                              const State& left, double x);

/// The same change evaluated directly from the end states.
double shock_delta_direct(const GasModel& model, const Univariate& h, InvariantChannel channel,
                          const State& left, double x);

/// Coefficients of the weak head-on expansion in Riemann coordinates:
/// A = d_s phi, D = d_r phi, B = d_rs phi, C = d_ss phi, E = d_rr phi.
struct ExpansionCoefficients {
  double A;
  double B;
  double C;
  double D;
  double E;
};

ExpansionCoefficients expansion_coefficients(const ScalarField& field, const State& at,
                                             const GasModel& model);

/// Sign configurations of a weak head-on interaction with increments
/// (dr across the backward wave, ds across the forward wave):
/// I: ds A > 0 and dr D > 0;  II: both < 0;  III: ds A < 0 < dr D;
/// IV: dr D < 0 < ds A.
enum class SignCase { I, II, III, IV };

std::string_view to_string(SignCase c);

/// Increments with magnitudes |dr|, |ds| whose signs realize `sign_case` at
/// the given coefficients.  Throws DegenerateError if A or D vanishes.
struct Increments {
  double dr;
  double ds;
};
Increments signed_increments(const ExpansionCoefficients& c, double dr_magnitude,
                             double ds_magnitude, SignCase sign_case);

struct WeakExpansion {
  SignCase sign_case;
  double dr;
  double ds;
  double measured;   // delta_var of the constructed interaction
  double predicted;  // leading-order term: 0, 0, -2 dr ds B, +2 dr ds B
  ExpansionCoefficients coefficients;
  InteractionRealization realization;
};

/// Builds the head-on interaction at `base` whose incoming forward wave
/// changes s by exactly `ds` and whose incoming backward wave changes r by
/// exactly `dr`, measures delta_var and compares it with the leading term of
/// the weak-interaction expansion.
///
/// Throws DegenerateError when A or D vanishes at base, or when dr or ds is
/// zero; DomainError when dr would require a backward rarefaction into vacuum.
WeakExpansion weak_expansion_check(const ScalarField& field, const State& base, double dr,
                                   double ds, const GasModel& model);

}  // namespace tvdlab
