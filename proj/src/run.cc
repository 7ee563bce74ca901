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

#include "qtvr/run.h"

#include <string>

#include "qtvr/errors.h"

namespace qtvr {

std::vector<SchemeResult> run(const RunConfig& config) {
  config.validate();
  const FrequencyGrid grid = config.frequency_grid();
  QtvrOptions options;
  options.phases = config.phases;

  std::vector<SchemeResult> results;
  for (Scheme scheme : config.schemes) {
    try {
      switch (scheme) {
        case Scheme::kConventional:
          results.push_back(conventional_curve(config.plant, grid));
          break;
        case Scheme::kFds:
          results.push_back(fds_baseline_curve(config.plant, config.entanglement.r,
                                               grid, config.budget));
          break;
        case Scheme::kEprs:
          results.push_back(eprs_reference_curve(
              config.plant, config.entanglement.r, grid, config.budget));
          break;
        case Scheme::kQtvr:
          results.push_back(qtvr_curve(config.plant, config.entanglement, grid,
                                       config.budget, options));
          break;
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ComputationError(std::string(scheme_name(scheme)) + ": " + e.what());
    }
  }
  return results;
}

}  // namespace qtvr
