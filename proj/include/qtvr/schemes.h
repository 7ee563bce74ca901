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

// End-to-end sensitivity curves for the four readout schemes and their
// comparison.
//
// Every point function returns S_h / h_SQL^2 at a given Kimble factor, so the
// physics can be exercised in normalized units; the *_curve functions
// evaluate them on a frequency grid for concrete plant parameters.

#ifndef QTVR_SCHEMES_H_
#define QTVR_SCHEMES_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtvr/field_algebra.h"
#include "qtvr/imperfections.h"
#include "qtvr/plant.h"
#include "qtvr/teleportation.h"

namespace qtvr {

enum class Scheme { kConventional, kFds, kEprs, kQtvr };

std::string_view scheme_name(Scheme s);
/// Case-insensitive; accepts "conventional", "fds", "eprs", "qtvr".
std::optional<Scheme> parse_scheme(std::string_view name);

struct NoiseCurve {
  FrequencyGrid grid;
  std::vector<double> sh;        // strain PSD, 1/Hz
  std::vector<double> hsql_sq;   // h_SQL^2 at each point
  std::vector<double> kimble;    // K at each point
  // Split of sh into Victor's and the entanglement's share (QTVR only).
  std::optional<std::vector<double>> term_victor;
  std::optional<std::vector<double>> term_entanglement;
};

struct SchemeResult {
  Scheme scheme = Scheme::kConventional;
  NoiseCurve curve;
  std::map<std::string, double> metadata;
};

struct QtvrOptions {
  PhaseConvention phases;
  AliceRotation alice_rotation = tuned_alice_rotation;
};

struct QtvrPoint {
  double sh_rel = 0.0;            // S_h / h_SQL^2
  double victor_rel = 0.0;
  double entanglement_rel = 0.0;
};

/// (K + 1/K) / 2.
double conventional_point(double kimble);

/// Ideally rotated squeezing with the common budget plus filter-cavity loss
/// and length noise.
double fds_point(double kimble, double r, const ImperfectionBudget& budget,
                 double wavelength);

/// Signal beam through the interferometer, idler read out in its best
/// quadrature and subtracted. Reduces to conventional / cosh 2r when ideal.
double eprs_point(double kimble, double r, const ImperfectionBudget& budget,
                  double wavelength);

/// Teleportation readout at one frequency with Alice's rotation theta_a.
QtvrPoint qtvr_point(double kimble, const EntanglementParams& epr,
                     double theta_a, const ImperfectionBudget& budget,
                     double wavelength, const PhaseConvention& phases = {});

SchemeResult conventional_curve(const PlantParams& p, const FrequencyGrid& grid);
SchemeResult eprs_reference_curve(const PlantParams& p, double r,
                                  const FrequencyGrid& grid,
                                  const ImperfectionBudget& budget);
SchemeResult fds_baseline_curve(const PlantParams& p, double r,
                                const FrequencyGrid& grid,
                                const ImperfectionBudget& budget);
SchemeResult qtvr_curve(const PlantParams& p, const EntanglementParams& epr,
                        const FrequencyGrid& grid,
                        const ImperfectionBudget& budget,
                        const QtvrOptions& options = {});

/// Contiguous run of grid points with S_h below h_SQL^2.
struct SqlBand {
  double omega_lo = 0.0;
  double omega_hi = 0.0;
};

struct SchemeSummary {
  Scheme scheme = Scheme::kConventional;
  double min_rel_sql = 0.0;      // min S_h / h_SQL^2
  double omega_at_min = 0.0;
  std::vector<SqlBand> below_sql;
};

/// numerator / denominator at every grid point.
struct PairRatio {
  Scheme numerator = Scheme::kConventional;
  Scheme denominator = Scheme::kConventional;
  std::vector<double> ratio;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

struct ComparisonReport {
  FrequencyGrid grid;
  std::vector<SchemeSummary> summaries;
  std::vector<PairRatio> ratios;
  /// Set when EPRS and QTVR results share r and budget: whether EPRS stays
  /// at or below QTVR at every point.
  std::optional<bool> eprs_bounds_qtvr;

  std::string verdict_table() const;
};

/// Throws InvalidInputError when the results are empty or live on different
/// grids.
ComparisonReport compare(const std::vector<SchemeResult>& results);

}  // namespace qtvr

#endif  // QTVR_SCHEMES_H_
