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

#include "qtvr/config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "qtvr/errors.h"

namespace qtvr {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_number(const std::string& value, const std::string& key, int line) {
  double out = 0.0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  // from_chars rejects a leading '+', accept it for convenience.
  if (begin != end && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out))
    throw ConfigError("cannot parse '" + value + "' as a number", key, line);
  return out;
}

int parse_int(const std::string& value, const std::string& key, int line) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw ConfigError("cannot parse '" + value + "' as an integer", key, line);
  return out;
}

bool parse_bool(const std::string& value, const std::string& key, int line) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  throw ConfigError("expected true or false, got '" + value + "'", key, line);
}

std::vector<Scheme> scheme_list(const std::string& value,
                                      const std::string& key, int line) {
  std::vector<Scheme> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto s = parse_scheme(item);
    if (!s) throw ConfigError("unknown scheme '" + item + "'", key, line);
    if (std::find(out.begin(), out.end(), *s) == out.end()) out.push_back(*s);
  }
  if (out.empty()) throw ConfigError("at least one scheme is required", key, line);
  return out;
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&, int)>;


template <typename F>
Setter numeric(F assign) {
  return [assign](RunConfig& c, const std::string& v, const std::string& k, int line) {
    assign(c, parse_number(v, k, line));
  };
}

struct KeySpec {
  bool required;
  Setter set;
};

const std::map<std::string, KeySpec>& key_table() {
  static const std::map<std::string, KeySpec> table = {
      {"mass_kg", {true, numeric([](RunConfig& c, double x) { c.plant.mirror_mass = x; })}},
      {"arm_length_m", {true, numeric([](RunConfig& c, double x) { c.plant.arm_length = x; })}},
      {"circulating_power_w", {true, numeric([](RunConfig& c, double x) { c.plant.circulating_power = x; })}},
      {"carrier_omega_rad_s", {true, numeric([](RunConfig& c, double x) { c.plant.carrier_omega = x; })}},
      {"half_bandwidth_rad_s", {true, numeric([](RunConfig& c, double x) { c.plant.half_bandwidth = x; })}},
      {"squeeze_db", {true, numeric([](RunConfig& c, double x) {
                        c.budget.squeeze_db = x;
                        c.entanglement.r = squeeze_db_to_r(x);
                      })}},
      {"victor_squeeze_db", {false, numeric([](RunConfig& c, double x) { c.entanglement.victor_r = squeeze_db_to_r(x); })}},
      {"victor_angle_rad", {false, numeric([](RunConfig& c, double x) { c.entanglement.victor_angle = x; })}},
      {"injection_loss", {false, numeric([](RunConfig& c, double x) { c.budget.injection_loss = x; })}},
      {"arm_round_trip_loss", {false, numeric([](RunConfig& c, double x) { c.budget.arm_round_trip_loss = x; })}},
      {"sec_loss", {false, numeric([](RunConfig& c, double x) { c.budget.sec_loss = x; })}},
      {"readout_loss", {false, numeric([](RunConfig& c, double x) { c.budget.readout_loss = x; })}},
      {"fc_round_trip_loss", {false, numeric([](RunConfig& c, double x) { c.budget.fc_round_trip_loss = x; })}},
      {"squeezer_rms_rad", {false, numeric([](RunConfig& c, double x) { c.budget.squeezer_rms = x; })}},
      {"lo_rms_rad", {false, numeric([](RunConfig& c, double x) { c.budget.lo_rms = x; })}},
      {"sec_length_rms_m", {false, numeric([](RunConfig& c, double x) { c.budget.sec_length_rms = x; })}},
      {"fc_length_rms_m", {false, numeric([](RunConfig& c, double x) { c.budget.fc_length_rms = x; })}},
      {"detuning_hz", {false, numeric([](RunConfig& c, double x) { c.budget.detuning = 2.0 * kPi * x; })}},
      {"beta_a_rad", {false, numeric([](RunConfig& c, double x) { c.phases.beta_a = x; })}},
      {"beta_b_rad", {false, numeric([](RunConfig& c, double x) { c.phases.beta_b = x; })}},
      {"beta_v_rad", {false, numeric([](RunConfig& c, double x) { c.phases.beta_v = x; })}},
      {"fmin_hz", {true, numeric([](RunConfig& c, double x) { c.grid.fmin_hz = x; })}},
      {"fmax_hz", {true, numeric([](RunConfig& c, double x) { c.grid.fmax_hz = x; })}},
      {"points_per_decade", {true, [](RunConfig& c, const std::string& v, const std::string& k, int line) {
                               c.grid.points_per_decade = parse_int(v, k, line);
                             }}},
      {"schemes", {false, [](RunConfig& c, const std::string& v, const std::string& k, int line) {
                     c.schemes = scheme_list(v, k, line);
                   }}},
      {"normalized", {false, [](RunConfig& c, const std::string& v, const std::string& k, int line) {
                        c.normalized = parse_bool(v, k, line);
                      }}},
      // Applied before every other key; see parse_config.
      {"budget_preset", {false, [](RunConfig&, const std::string&, const std::string&, int) {}}},
  };
  return table;
}

void check_positive(double v, const char* key) {
  if (!(v > 0.0)) throw ConfigError("must be > 0", key);
}

void check_fraction(double v, const char* key) {
  if (!(v >= 0.0 && v < 1.0)) throw ConfigError("fraction out of range [0, 1)", key);
}

void check_nonnegative(double v, const char* key) {
  if (!(v >= 0.0)) throw ConfigError("must be >= 0", key);
}

}  // namespace

void RunConfig::validate() const {
  check_positive(plant.mirror_mass, "mass_kg");
  check_positive(plant.arm_length, "arm_length_m");
  check_positive(plant.circulating_power, "circulating_power_w");
  check_positive(plant.carrier_omega, "carrier_omega_rad_s");
  check_positive(plant.half_bandwidth, "half_bandwidth_rad_s");
  if (budget.squeeze_db > 0.0)
    throw ConfigError("squeezing level must be <= 0 dB", "squeeze_db");
  check_fraction(budget.injection_loss, "injection_loss");
  check_fraction(budget.arm_round_trip_loss, "arm_round_trip_loss");
  check_fraction(budget.sec_loss, "sec_loss");
  check_fraction(budget.readout_loss, "readout_loss");
  check_fraction(budget.fc_round_trip_loss, "fc_round_trip_loss");
  check_nonnegative(budget.squeezer_rms, "squeezer_rms_rad");
  check_nonnegative(budget.lo_rms, "lo_rms_rad");
  check_nonnegative(budget.sec_length_rms, "sec_length_rms_m");
  check_nonnegative(budget.fc_length_rms, "fc_length_rms_m");
  check_nonnegative(budget.detuning, "detuning_hz");
  if (budget.squeezer_rms >= 0.3)
    throw ConfigError("phase noise >= 0.3 rad is outside the model", "squeezer_rms_rad");
  if (budget.lo_rms >= 0.3)
    throw ConfigError("phase noise >= 0.3 rad is outside the model", "lo_rms_rad");
  check_positive(grid.fmin_hz, "fmin_hz");
  if (!(grid.fmax_hz > grid.fmin_hz))
    throw ConfigError("fmax_hz must exceed fmin_hz", "fmax_hz");
  if (grid.points_per_decade < 1)
    throw ConfigError("must be >= 1", "points_per_decade");
  if (schemes.empty()) throw ConfigError("at least one scheme is required", "schemes");
}

FrequencyGrid RunConfig::frequency_grid() const {
  const double decades = std::log10(grid.fmax_hz / grid.fmin_hz);
  const auto intervals = static_cast<std::size_t>(
      std::ceil(decades * grid.points_per_decade - 1e-9));
  return FrequencyGrid::log_spaced(2.0 * kPi * grid.fmin_hz,
                                   2.0 * kPi * grid.fmax_hz,
                                   std::max<std::size_t>(intervals, 1) + 1);
}

bool operator==(const RunConfig& a, const RunConfig& b) {
  return a.plant == b.plant && a.entanglement == b.entanglement &&
         a.budget == b.budget && a.phases.beta_a == b.phases.beta_a &&
         a.phases.beta_b == b.phases.beta_b &&
         a.phases.beta_v == b.phases.beta_v && a.grid == b.grid &&
         a.schemes == b.schemes && a.normalized == b.normalized;
}

std::vector<Scheme> parse_scheme_list(std::string_view list) {
  return scheme_list(std::string(list), "schemes", 0);
}

RunConfig parse_config(std::string_view text, bool lenient,
                       std::vector<std::string>* warnings) {
  struct Entry {
    std::string value;
    int line;
  };
  std::map<std::string, Entry> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected 'key = value'", {}, line_no);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", {}, line_no);
    if (value.empty()) throw ConfigError("missing value", key, line_no);
    if (!key_table().count(key)) {
      if (!lenient) throw ConfigError("unknown key", key, line_no);
      if (warnings)
        warnings->push_back("line " + std::to_string(line_no) +
                            ": ignoring unknown key '" + key + "'");
      continue;
    }
    if (entries.count(key))
      throw ConfigError("duplicate key (first set on line " +
                            std::to_string(entries[key].line) + ")",
                        key, line_no);
    entries[key] = {value, line_no};
  }

  RunConfig config;
  config.schemes = {Scheme::kConventional, Scheme::kFds, Scheme::kEprs, Scheme::kQtvr};
  if (auto it = entries.find("budget_preset"); it != entries.end()) {
    if (it->second.value == "ethf") {
      config.budget = ImperfectionBudget::ethf_like();
    } else if (it->second.value != "ideal") {
      throw ConfigError("expected 'ideal' or 'ethf'", "budget_preset", it->second.line);
    }
  }
  for (const auto& [key, spec] : key_table()) {
    auto it = entries.find(key);
    if (it == entries.end()) {
      if (spec.required) throw ConfigError("missing required key", key);
      continue;
    }
    spec.set(config, it->second.value, key, it->second.line);
  }
  try {
    config.validate();
  } catch (const ConfigError& e) {
    auto it = entries.find(e.key());
    if (it == entries.end() || e.line() != 0) throw;
    // Re-raise with the line the offending key was set on.
    std::string msg = e.what();
    msg = msg.substr(msg.find(": ") + 2);
    throw ConfigError(msg, e.key(), it->second.line);
  }
  return config;
}

RunConfig load_config(const std::string& path, bool lenient,
                      std::vector<std::string>* warnings) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_config(buf.str(), lenient, warnings);
}

nlohmann::json config_to_json(const RunConfig& c) {
  nlohmann::json schemes = nlohmann::json::array();
  for (Scheme s : c.schemes) schemes.push_back(std::string(scheme_name(s)));
  return {
      {"plant",
       {{"mirror_mass", c.plant.mirror_mass},
        {"arm_length", c.plant.arm_length},
        {"circulating_power", c.plant.circulating_power},
        {"carrier_omega", c.plant.carrier_omega},
        {"half_bandwidth", c.plant.half_bandwidth}}},
      {"entanglement",
       {{"r", c.entanglement.r},
        {"victor_r", c.entanglement.victor_r},
        {"victor_angle", c.entanglement.victor_angle}}},
      {"budget",
       {{"injection_loss", c.budget.injection_loss},
        {"arm_round_trip_loss", c.budget.arm_round_trip_loss},
        {"sec_loss", c.budget.sec_loss},
        {"readout_loss", c.budget.readout_loss},
        {"fc_round_trip_loss", c.budget.fc_round_trip_loss},
        {"squeezer_rms", c.budget.squeezer_rms},
        {"lo_rms", c.budget.lo_rms},
        {"sec_length_rms", c.budget.sec_length_rms},
        {"fc_length_rms", c.budget.fc_length_rms},
        {"detuning", c.budget.detuning},
        {"squeeze_db", c.budget.squeeze_db}}},
      {"phases",
       {{"beta_a", c.phases.beta_a},
        {"beta_b", c.phases.beta_b},
        {"beta_v", c.phases.beta_v}}},
      {"grid",
       {{"fmin_hz", c.grid.fmin_hz},
        {"fmax_hz", c.grid.fmax_hz},
        {"points_per_decade", c.grid.points_per_decade}}},
      {"schemes", schemes},
      {"normalized", c.normalized},
  };
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  const auto& p = j.at("plant");
  c.plant = {p.at("mirror_mass"), p.at("arm_length"), p.at("circulating_power"),
             p.at("carrier_omega"), p.at("half_bandwidth")};
  const auto& e = j.at("entanglement");
  c.entanglement = {e.at("r"), e.at("victor_r"), e.at("victor_angle")};
  const auto& b = j.at("budget");
  c.budget.injection_loss = b.at("injection_loss");
  c.budget.arm_round_trip_loss = b.at("arm_round_trip_loss");
  c.budget.sec_loss = b.at("sec_loss");
  c.budget.readout_loss = b.at("readout_loss");
  c.budget.fc_round_trip_loss = b.at("fc_round_trip_loss");
  c.budget.squeezer_rms = b.at("squeezer_rms");
  c.budget.lo_rms = b.at("lo_rms");
  c.budget.sec_length_rms = b.at("sec_length_rms");
  c.budget.fc_length_rms = b.at("fc_length_rms");
  c.budget.detuning = b.at("detuning");
  c.budget.squeeze_db = b.at("squeeze_db");
  const auto& ph = j.at("phases");
  c.phases = {ph.at("beta_b"), ph.at("beta_a"), ph.at("beta_v")};
  const auto& g = j.at("grid");
  c.grid = {g.at("fmin_hz"), g.at("fmax_hz"), g.at("points_per_decade")};
  for (const auto& s : j.at("schemes")) {
    auto parsed = parse_scheme(s.get<std::string>());
    if (!parsed) throw ConfigError("unknown scheme in JSON config", "schemes");
    c.schemes.push_back(*parsed);
  }
  c.normalized = j.at("normalized");
  return c;
}

}  // namespace qtvr
