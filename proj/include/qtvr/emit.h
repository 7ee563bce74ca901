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

// Output writers.
//
// CSV columns: freq_hz,scheme,s_h,s_h_rel_sql,term_victor,term_entanglement.
// The term columns are empty for schemes without a breakdown. In normalized
// runs the first column holds Omega/gamma and s_h (and the terms) are divided
// by h_SQL^2. Numbers are written with 17 significant digits in the C locale.

#ifndef QTVR_EMIT_H_
#define QTVR_EMIT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtvr/config.h"
#include "qtvr/schemes.h"

namespace qtvr {

inline constexpr std::string_view kVersion = "1.0.0";

enum class OutputFormat { kCsv, kJson, kPlotData };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Locale-independent, 17 significant digits.
std::string format_double(double v);

std::string render(const std::vector<SchemeResult>& results,
                   const RunConfig& config, OutputFormat format);

/// Renders and writes atomically (temporary file in the same directory, then
/// rename). Throws Error when the results are empty or the path is not
/// writable.
void emit(const std::vector<SchemeResult>& results, const RunConfig& config,
          OutputFormat format, const std::string& path);

}  // namespace qtvr

#endif  // QTVR_EMIT_H_
