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

// Run configuration: a flat "key = value" text file with '#' comments.
//
//   # plant (required, SI units)
//   mass_kg = 200
//   arm_length_m = 10000
//   circulating_power_w = 3e6
//   carrier_omega_rad_s = 1.77e15
//   half_bandwidth_rad_s = 500
//   # entanglement and budget
//   squeeze_db = -18
//   budget_preset = ethf         # or ideal; explicit keys override it
//   lo_rms_rad = 0.01
//   # grid (required)
//   fmin_hz = 1
//   fmax_hz = 1000
//   points_per_decade = 20
//   schemes = fds, eprs, qtvr
//   normalized = true

#ifndef QTVR_CONFIG_H_
#define QTVR_CONFIG_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qtvr/field_algebra.h"
#include "qtvr/imperfections.h"
#include "qtvr/plant.h"
#include "qtvr/schemes.h"
#include "qtvr/teleportation.h"

namespace qtvr {

struct GridSpec {
  double fmin_hz = 0.0;
  double fmax_hz = 0.0;
  int points_per_decade = 0;

  bool operator==(const GridSpec&) const = default;
};

struct RunConfig {
  PlantParams plant;
  EntanglementParams entanglement;
  ImperfectionBudget budget;
  PhaseConvention phases;
  GridSpec grid;
  std::vector<Scheme> schemes;
  bool normalized = false;

  /// Throws ConfigError naming the offending key.
  void validate() const;
  /// Log-spaced angular-frequency grid, both ends included, at least
  /// points_per_decade points per decade.
  FrequencyGrid frequency_grid() const;
};

bool operator==(const RunConfig& a, const RunConfig& b);

/// Unknown keys are errors unless `lenient`, in which case they are appended
/// to `warnings`.
RunConfig parse_config(std::string_view text, bool lenient = false,
                       std::vector<std::string>* warnings = nullptr);
RunConfig load_config(const std::string& path, bool lenient = false,
                      std::vector<std::string>* warnings = nullptr);

/// "fds, qtvr" -> {kFds, kQtvr}. Throws ConfigError on unknown names.
std::vector<Scheme> parse_scheme_list(std::string_view list);

nlohmann::json config_to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

}  // namespace qtvr

#endif  // QTVR_CONFIG_H_
