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

#include "qtvr/emit.h"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "qtvr/errors.h"

namespace qtvr {

namespace {

struct Row {
  double x;
  double sh;
  double rel;
  std::optional<double> victor;
  std::optional<double> ent;
};

// One row per grid point, already in the output units.
std::vector<Row> rows_for(const SchemeResult& res, const RunConfig& config) {
  const auto& c = res.curve;
  std::vector<Row> rows(c.grid.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double omega = c.grid[i];
    const double scale = config.normalized ? 1.0 / c.hsql_sq[i] : 1.0;
    Row& r = rows[i];
    r.x = config.normalized ? omega / config.plant.half_bandwidth
                            : omega / (2.0 * kPi);
    r.sh = c.sh[i] * scale;
    r.rel = c.sh[i] / c.hsql_sq[i];
    if (c.term_victor) r.victor = (*c.term_victor)[i] * scale;
    if (c.term_entanglement) r.ent = (*c.term_entanglement)[i] * scale;
  }
  return rows;
}

std::string render_csv(const std::vector<SchemeResult>& results,
                       const RunConfig& config) {
  std::string out = config.normalized ? "omega_over_gamma" : "freq_hz";
  out += ",scheme,s_h,s_h_rel_sql,term_victor,term_entanglement\n";
  for (const auto& res : results) {
    const std::string name(scheme_name(res.scheme));
    for (const Row& r : rows_for(res, config)) {
      out += format_double(r.x) + ',' + name + ',' + format_double(r.sh) + ',' +
             format_double(r.rel) + ',' + (r.victor ? format_double(*r.victor) : "") +
             ',' + (r.ent ? format_double(*r.ent) : "") + '\n';
    }
  }
  return out;
}

std::string render_json(const std::vector<SchemeResult>& results,
                        const RunConfig& config) {
  nlohmann::json doc;
  doc["tool"] = "qtvr";
  doc["version"] = std::string(kVersion);
  doc["config"] = config_to_json(config);
  doc["results"] = nlohmann::json::array();
  for (const auto& res : results) {
    nlohmann::json j;
    j["scheme"] = std::string(scheme_name(res.scheme));
    j["x_unit"] = config.normalized ? "omega_over_gamma" : "hz";
    std::vector<double> x, sh, rel, victor, ent;
    for (const Row& r : rows_for(res, config)) {
      x.push_back(r.x);
      sh.push_back(r.sh);
      rel.push_back(r.rel);
      if (r.victor) victor.push_back(*r.victor);
      if (r.ent) ent.push_back(*r.ent);
    }
    j["x"] = x;
    j["s_h"] = sh;
    j["s_h_rel_sql"] = rel;
    if (res.curve.term_victor) j["term_victor"] = victor;
    if (res.curve.term_entanglement) j["term_entanglement"] = ent;
    j["metadata"] = res.metadata;
    doc["results"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string render_plotdata(const std::vector<SchemeResult>& results,
                            const RunConfig& config) {
  std::string out;
  bool first = true;
  for (const auto& res : results) {
    if (!first) out += "\n\n";
    first = false;
    out += "# scheme: " + std::string(scheme_name(res.scheme)) + "\n";
    out += config.normalized ? "# omega_over_gamma s_h_over_hsql2\n"
                             : "# freq_hz s_h\n";
    for (const Row& r : rows_for(res, config))
      out += format_double(r.x) + ' ' + format_double(r.sh) + '\n';
  }
  return out;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  if (name == "plotdata") return OutputFormat::kPlotData;
  return std::nullopt;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v,
                                 std::chars_format::general, 17);
  if (ec != std::errc()) throw InternalConsistencyError("number formatting failed");
  return std::string(buf, ptr);
}

std::string render(const std::vector<SchemeResult>& results,
                   const RunConfig& config, OutputFormat format) {
  if (results.empty()) throw InvalidInputError("no scheme results to emit");
  switch (format) {
    case OutputFormat::kCsv: return render_csv(results, config);
    case OutputFormat::kJson: return render_json(results, config);
    case OutputFormat::kPlotData: return render_plotdata(results, config);
  }
  throw InvalidInputError("unknown output format");
}

void emit(const std::vector<SchemeResult>& results, const RunConfig& config,
          OutputFormat format, const std::string& path) {
  const std::string text = render(results, config, format);
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write output file '" + path + "'");
    f << text;
    f.flush();
    if (!f) throw Error("failed while writing '" + path + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot move output into place at '" + path + "'");
  }
}

}  // namespace qtvr
