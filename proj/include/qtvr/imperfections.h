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

// Loss and phase-noise budget. Losses are lumped beamsplitters that mix in
// uncorrelated vacuum; phase noise is a Gaussian quadrature-angle jitter
// averaged to second order in its RMS.

#ifndef QTVR_IMPERFECTIONS_H_
#define QTVR_IMPERFECTIONS_H_

#include "qtvr/field_algebra.h"

namespace qtvr {

struct ImperfectionBudget {
  double injection_loss = 0.0;       // fraction
  double arm_round_trip_loss = 0.0;  // fraction
  double sec_loss = 0.0;             // fraction
  double readout_loss = 0.0;         // fraction
  double fc_round_trip_loss = 0.0;   // fraction, FDS only
  double squeezer_rms = 0.0;         // rad
  double lo_rms = 0.0;               // rad
  double sec_length_rms = 0.0;       // m
  double fc_length_rms = 0.0;        // m, FDS only
  double detuning = 0.0;             // rad/s, bookkeeping only
  double squeeze_db = 0.0;           // dB, negative = squeezing

  /// Fractions in [0, 1), RMS values >= 0, everything finite.
  void validate() const;

  static ImperfectionBudget ideal() { return {}; }
  /// ETHF-like budget: 3 % injection and readout loss, 80 ppm arm and
  /// 1000 ppm SEC loss, 45 ppm FC loss, 10 mrad squeezer and LO jitter,
  /// 1 pm SEC and FC length noise, 49.4 MHz detuning, -18 dB.
  static ImperfectionBudget ethf_like();

  double injection_efficiency() const { return 1.0 - injection_loss; }
  double arm_efficiency() const { return 1.0 - arm_round_trip_loss; }
  double sec_efficiency() const { return 1.0 - sec_loss; }
  double readout_efficiency() const { return 1.0 - readout_loss; }
  double fc_efficiency() const { return 1.0 - fc_round_trip_loss; }

  bool operator==(const ImperfectionBudget&) const = default;
};

/// eta S + (1 - eta) I. Requires 0 < eta <= 1.
SpectralMatrix apply_loss(const SpectralMatrix& s, double eta);

/// Cross-spectrum between two fields after losses eta_x and eta_y.
Mat2c apply_loss_cross(const Mat2c& cross, double eta_x, double eta_y);

/// (1 - rms^2) S + rms^2 J S J^T with J the quarter rotation. Throws
/// ModelValidityError for rms >= 0.3 rad.
SpectralMatrix apply_dephasing(const SpectralMatrix& s, double rms);

/// Cross-spectrum between two fields jittered independently:
/// (1 - rms_x^2/2)(1 - rms_y^2/2) C to second order.
Mat2c apply_dephasing_cross(const Mat2c& cross, double rms_x, double rms_y);

/// Displacement noise to quadrature-angle noise, 2 pi dL / lambda.
double length_rms_to_phase(double length_rms, double wavelength);

}  // namespace qtvr

#endif  // QTVR_IMPERFECTIONS_H_
