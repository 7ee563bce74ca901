// Copyright 2026 The QTVR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Bell readout of Victor and Alice, the Bob/Bell spectral catalog, the
// post-filters that subtract the Bell outcomes from Bob's homodyne signal,
// and the resulting strain sensitivity.

#ifndef QTVR_TELEPORTATION_H_
#define QTVR_TELEPORTATION_H_

#include <array>

#include "qtvr/field_algebra.h"
#include "qtvr/plant.h"

namespace qtvr {

/// Two-mode squeeze strength of the Alice/Bob pair and the optional
/// single-mode squeezing of Victor. victor_r = 0 means vacuum Victor;
/// victor_angle = 0 squeezes the phase quadrature.
struct EntanglementParams {
  double r = 0.0;
  double victor_r = 0.0;
  double victor_angle = 0.0;

  void validate() const;
  bool operator==(const EntanglementParams&) const = default;
};

/// r such that e^{-2r} equals the given power ratio in dB (-18 dB -> 2.0723).
double squeeze_db_to_r(double db);
double r_to_squeeze_db(double r);

/// rotation(angle) applied to diag(e^{2 r}, e^{-2 r}).
SpectralMatrix victor_input_spectrum(const EntanglementParams& epr);

/// Reduced spectra and cross-spectrum <b a^dagger> of a two-mode squeezed
/// vacuum: both modes cosh 2r * I, correlation sinh 2r * diag(1, -1).
struct EprPair {
  SpectralMatrix alice;
  SpectralMatrix bob;
  Mat2c bob_alice;
};
EprPair two_mode_squeezed(double r);

/// The three detected fields right before the Bell and homodyne detectors.
/// Victor and Alice are uncorrelated; bob_alice = <B A^dagger>.
struct BellInputs {
  SpectralMatrix victor;
  SpectralMatrix alice;
  SpectralMatrix bob;
  Mat2c bob_alice;
};

/// Auto/cross spectra of Bob's phase quadrature B and the Bell observables
/// alpha_1 = (V1 - A1)/sqrt2, alpha_2 = (V2 + A2)/sqrt2.
struct SpectralCatalog {
  double sBB = 0.0;
  double sA1A1 = 0.0;
  double sA2A2 = 0.0;
  Complex sA1A2 = 0.0;
  Complex sBA1 = 0.0;
  Complex sBA2 = 0.0;

  /// Hermitian matrix over (B, alpha_1, alpha_2).
  std::array<std::array<Complex, 3>, 3> matrix() const;
  bool is_psd(double tol = 1e-9) const;
};

SpectralCatalog bell_combine_catalog(const BellInputs& in);

/// Lossless catalog at one frequency: Victor through the active cavity,
/// Alice rotated by theta_a, Bob untouched.
BellInputs ideal_bell_inputs(double kimble, const EntanglementParams& epr,
                             double theta_a, const PhaseConvention& phases = {});
SpectralCatalog ideal_catalog(double kimble, const EntanglementParams& epr,
                              double theta_a, const PhaseConvention& phases = {});

/// Post-filters in B^g = B - g1 alpha_1 - g2 alpha_2. zero_correlation marks
/// a catalog in which Bob carries no information about the Bell outcomes.
struct WienerPair {
  Complex g1 = 0.0;
  Complex g2 = 0.0;
  bool zero_correlation = false;
};

/// Minimizes the filtered spectrum itself (normal equations of the residual).
/// Throws DegenerateCatalogError when the (alpha_1, alpha_2) Gram matrix has
/// condition number >= 1e12.
WienerPair wiener_filters(const SpectralCatalog& c);

/// Back-action-evading filters: g1 = K g2, so the Bell combination
/// K alpha_1 + alpha_2 cancels Victor's amplitude noise, and g2 is the Wiener
/// gain that minimizes the signal-referred residual against Bob.
WienerPair variational_filters(const SpectralCatalog& c, double kimble);

/// Unconstrained minimizer of the signal-referred residual for a signal that
/// enters through alpha_2 only (linear estimate of alpha_2 from alpha_1, B).
WienerPair joint_readout_filters(const SpectralCatalog& c);

/// S_{B^g B^g} term by term; throws InternalConsistencyError if the result is
/// negative beyond round-off.
double filtered_spectrum(const SpectralCatalog& c, const WienerPair& w);

/// h_SQL^2 / (2K) * residual / |signal_gain|^2. signal_gain is the signal
/// amplitude of the final observable relative to Victor's ideal
/// phase-quadrature signal sqrt(K) e^{i beta_v}. Throws SignalLossError when
/// |signal_gain| <= 1e-30.
double strain_sensitivity(double residual, Complex signal_gain, double kimble,
                          double hsql_sq);

/// Signal gain of B^g for a Victor signal (q1, q2) given relative to
/// sqrt(K) e^{i beta_v}: -(g1 q1 + g2 q2)/sqrt2.
Complex bell_signal_gain(const WienerPair& w, Complex q1 = 0.0, Complex q2 = 1.0);

/// h_SQL^2/(2K) * (S_v2v2 + (1 + K^2)/cosh 2r).
double qtvr_closed_form(double s_v2, double kimble, double r, double hsql_sq);

/// Complete readout of one frequency point.
struct TeleportedReadout {
  SpectralCatalog catalog;
  WienerPair filters;
  double residual = 0.0;       // S_{B^g B^g}; 0 in the zero-correlation limit
  Complex signal_gain = 0.0;
  double referred_noise = 0.0; // residual / |signal_gain|^2
  double victor_part = 0.0;    // share of referred_noise from Victor's path
  double entanglement_part = 0.0;
};

/// Runs catalog -> variational filters -> filtered spectrum. `victor_signal`
/// is Victor's signal relative to sqrt(K) e^{i beta_v} after losses. When Bob
/// is uncorrelated the analytic g2 -> infinity limit is used, where B^g/g2
/// reduces to the Bell combination alone.
TeleportedReadout variational_readout(const BellInputs& in, double kimble,
                                      Complex victor_signal_q2 = 1.0);

}  // namespace qtvr

#endif  // QTVR_TELEPORTATION_H_
