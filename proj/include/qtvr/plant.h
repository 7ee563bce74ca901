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

// Tuned interferometer seen by the three fields of the teleportation readout:
// Victor (ponderomotively squeezed, carries the signal), Alice (passive
// rotation) and Bob (detected directly, never enters the interferometer).

#ifndef QTVR_PLANT_H_
#define QTVR_PLANT_H_

#include <functional>

#include "qtvr/field_algebra.h"

namespace qtvr {

inline constexpr double kSpeedOfLight = 299792458.0;      // m/s, exact
inline constexpr double kHbar = 1.054571817e-34;          // J s, CODATA 2018
inline constexpr double kPi = 3.14159265358979323846;

struct PlantParams {
  double mirror_mass = 0.0;         // M, kg
  double arm_length = 0.0;          // L, m
  double circulating_power = 0.0;   // I_c, W
  double carrier_omega = 0.0;       // omega_p, rad/s
  double half_bandwidth = 0.0;      // gamma, rad/s

  /// Throws InvalidInputError unless every field is finite and > 0.
  void validate() const;
  /// 2 pi c / omega_p.
  double carrier_wavelength() const;

  bool operator==(const PlantParams&) const = default;
};

/// Phase conventions of the three transfer maps. beta_b multiplies Victor's
/// ponderomotive matrix and is also Bob's detection phase reference; beta_v
/// is the phase of the signal term.
struct PhaseConvention {
  double beta_b = 0.0;
  double beta_a = 0.0;
  double beta_v = 0.0;
};

/// Signal content of each quadrature, in units of h / h_SQL.
struct SignalChannel {
  Complex q1 = 0.0;
  Complex q2 = 0.0;
};

struct VictorOutput {
  SpectralMatrix noise;
  SignalChannel signal;
};

/// Theta = 8 omega_p I_c / (M c L), in rad^3/s^3.
double theta(const PlantParams& p);

/// K(Omega) = 2 Theta gamma / (Omega^2 (Omega^2 + gamma^2)). Omega must be > 0.
double kimble_factor(const PlantParams& p, double omega);

/// h_SQL = sqrt(8 hbar / (M L^2 Omega^2)).
double h_sql(const PlantParams& p, double omega);
double h_sql_sq(const PlantParams& p, double omega);

TransferMatrix victor_transfer(double kimble, double beta_b);
TransferMatrix alice_transfer(double theta_a, double beta_a);
/// Pure phase reference e^{2i beta_b}; Bob is otherwise untouched.
TransferMatrix bob_transfer(double beta_b);

/// Victor through the active cavity at a given Kimble factor.
VictorOutput victor_output(double kimble, const SpectralMatrix& v,
                           double beta_b = 0.0, double beta_v = 0.0);
VictorOutput victor_output(const PlantParams& p, double omega,
                           const SpectralMatrix& v, double beta_b = 0.0,
                           double beta_v = 0.0);

SpectralMatrix alice_output(double theta_a, double beta_a,
                            const SpectralMatrix& a);

SpectralMatrix bob_output(const SpectralMatrix& b);

/// Alice's rotation angle as a function of (Omega, K).
using AliceRotation = std::function<double(double omega, double kimble)>;

/// theta_a = arctan K, which cancels Alice's amplitude noise and the
/// back-action term with the same readout combination.
double tuned_alice_rotation(double omega, double kimble);

}  // namespace qtvr

#endif  // QTVR_PLANT_H_
