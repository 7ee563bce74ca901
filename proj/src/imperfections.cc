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

#include "qtvr/imperfections.h"

#include <cmath>
#include <string>

#include "qtvr/errors.h"
#include "qtvr/plant.h"

namespace qtvr {

namespace {

constexpr double kMaxJitter = 0.3;

void check_fraction(double v, const char* name) {
  if (!(v >= 0.0 && v < 1.0))
    throw InvalidInputError(std::string(name) + " must be a fraction in [0, 1)");
}

void check_nonnegative(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v))
    throw InvalidInputError(std::string(name) + " must be finite and >= 0");
}

void check_efficiency(double eta) {
  if (!(eta > 0.0 && eta <= 1.0))
    throw InvalidInputError("efficiency must lie in (0, 1]");
}

void check_jitter(double rms) {
  if (!(rms >= 0.0) || !std::isfinite(rms))
    throw InvalidInputError("RMS phase noise must be finite and >= 0");
  if (rms >= kMaxJitter)
    throw ModelValidityError(
        "RMS phase noise >= 0.3 rad; second-order averaging is not valid");
}

}  // namespace

void ImperfectionBudget::validate() const {
  check_fraction(injection_loss, "injection loss");
  check_fraction(arm_round_trip_loss, "arm round-trip loss");
  check_fraction(sec_loss, "SEC loss");
  check_fraction(readout_loss, "readout loss");
  check_fraction(fc_round_trip_loss, "filter-cavity round-trip loss");
  check_nonnegative(squeezer_rms, "squeezer RMS");
  check_nonnegative(lo_rms, "local-oscillator RMS");
  check_nonnegative(sec_length_rms, "SEC length RMS");
  check_nonnegative(fc_length_rms, "filter-cavity length RMS");
  check_nonnegative(detuning, "detuning");
  if (!std::isfinite(squeeze_db))
    throw InvalidInputError("squeezing level must be finite");
}

ImperfectionBudget ImperfectionBudget::ethf_like() {
  ImperfectionBudget b;
  b.injection_loss = 0.03;
  b.arm_round_trip_loss = 80e-6;
  b.sec_loss = 1000e-6;
  b.readout_loss = 0.03;
  b.fc_round_trip_loss = 45e-6;
  b.squeezer_rms = 10e-3;
  b.lo_rms = 10e-3;
  b.sec_length_rms = 1e-12;
  b.fc_length_rms = 1e-12;
  b.detuning = 2.0 * kPi * 49.4e6;
  b.squeeze_db = -18.0;
  return b;
}

SpectralMatrix apply_loss(const SpectralMatrix& s, double eta) {
  check_efficiency(eta);
  return {eta * s.s11 + (1.0 - eta), eta * s.s22 + (1.0 - eta), eta * s.s12};
}

Mat2c apply_loss_cross(const Mat2c& cross, double eta_x, double eta_y) {
  check_efficiency(eta_x);
  check_efficiency(eta_y);
  return std::sqrt(eta_x * eta_y) * cross;
}

SpectralMatrix apply_dephasing(const SpectralMatrix& s, double rms) {
  check_jitter(rms);
  const double v = rms * rms;
  // J S J^T for J = [[0, -1], [1, 0]] swaps the diagonal and maps s12 to
  // -conj(s12).
  return {(1.0 - v) * s.s11 + v * s.s22, (1.0 - v) * s.s22 + v * s.s11,
          (1.0 - v) * s.s12 - v * std::conj(s.s12)};
}

Mat2c apply_dephasing_cross(const Mat2c& cross, double rms_x, double rms_y) {
  check_jitter(rms_x);
  check_jitter(rms_y);
  return (1.0 - 0.5 * (rms_x * rms_x + rms_y * rms_y)) * cross;
}

double length_rms_to_phase(double length_rms, double wavelength) {
  if (!(length_rms >= 0.0)) throw InvalidInputError("length RMS must be >= 0");
  if (!(wavelength > 0.0)) throw InvalidInputError("wavelength must be > 0");
  return 2.0 * kPi * length_rms / wavelength;
}

}  // namespace qtvr
