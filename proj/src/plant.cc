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

#include "qtvr/plant.h"

#include <cmath>

#include "qtvr/errors.h"

namespace qtvr {

namespace {

void require_positive_frequency(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw InvalidInputError("angular frequency must be finite and > 0");
}

}  // namespace

void PlantParams::validate() const {
  auto check = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw InvalidInputError(std::string(name) + " must be finite and > 0");
  };
  check(mirror_mass, "mirror mass");
  check(arm_length, "arm length");
  check(circulating_power, "circulating power");
  check(carrier_omega, "carrier angular frequency");
  check(half_bandwidth, "cavity half bandwidth");
}

double PlantParams::carrier_wavelength() const {
  return 2.0 * kPi * kSpeedOfLight / carrier_omega;
}

double theta(const PlantParams& p) {
  p.validate();
  return 8.0 * p.carrier_omega * p.circulating_power /
         (p.mirror_mass * kSpeedOfLight * p.arm_length);
}

double kimble_factor(const PlantParams& p, double omega) {
  require_positive_frequency(omega);
  const double g = p.half_bandwidth;
  return 2.0 * theta(p) * g / (omega * omega * (omega * omega + g * g));
}

double h_sql_sq(const PlantParams& p, double omega) {
  require_positive_frequency(omega);
  p.validate();
  return 8.0 * kHbar /
         (p.mirror_mass * p.arm_length * p.arm_length * omega * omega);
}

double h_sql(const PlantParams& p, double omega) {
  return std::sqrt(h_sql_sq(p, omega));
}

TransferMatrix victor_transfer(double kimble, double beta_b) {
  return ponderomotive(kimble, beta_b);
}

TransferMatrix alice_transfer(double theta_a, double beta_a) {
  return TransferMatrix(rotation(theta_a).m(), std::polar(1.0, 2.0 * beta_a));
}

TransferMatrix bob_transfer(double beta_b) {
  return TransferMatrix(Mat2c::identity(), std::polar(1.0, 2.0 * beta_b));
}

VictorOutput victor_output(double kimble, const SpectralMatrix& v,
                           double beta_b, double beta_v) {
  require_valid(v);
  VictorOutput out;
  out.noise = propagate(victor_transfer(kimble, beta_b), v);
  out.signal.q2 = std::sqrt(kimble) * std::polar(1.0, beta_v);
  return out;
}

VictorOutput victor_output(const PlantParams& p, double omega,
                           const SpectralMatrix& v, double beta_b,
                           double beta_v) {
  return victor_output(kimble_factor(p, omega), v, beta_b, beta_v);
}

SpectralMatrix alice_output(double theta_a, double beta_a,
                            const SpectralMatrix& a) {
  require_valid(a);
  return propagate(alice_transfer(theta_a, beta_a), a);
}

SpectralMatrix bob_output(const SpectralMatrix& b) {
  require_valid(b);
  return b;
}

double tuned_alice_rotation(double /*omega*/, double kimble) {
  return std::atan(kimble);
}

}  // namespace qtvr
