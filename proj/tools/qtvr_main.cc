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

// qtvr run <config> [--out PATH] [--format csv|json|plotdata] [--lenient]
//                   [--schemes LIST] [--report]
//
// Exit codes: 0 success, 2 configuration error, 3 computation or output error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtvr/config.h"
#include "qtvr/emit.h"
#include "qtvr/errors.h"
#include "qtvr/run.h"
#include "qtvr/schemes.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitCompute = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-noise strain sensitivity of teleportation-based "
               "variational readout"};
  app.set_version_flag("--version", std::string(qtvr::kVersion));
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "Evaluate the configured schemes");
  std::string config_path;
  std::string out_path;
  std::string format_name = "csv";
  std::string schemes_override;
  bool lenient = false;
  bool report = false;
  run_cmd->add_option("config", config_path, "Configuration file")->required();
  run_cmd->add_option("--out", out_path, "Output file (stdout when omitted)");
  run_cmd->add_option("--format", format_name, "csv, json or plotdata")
      ->check(CLI::IsMember({"csv", "json", "plotdata"}));
  run_cmd->add_flag("--lenient", lenient, "Warn about unknown keys instead of failing");
  run_cmd->add_option("--schemes", schemes_override,
                      "Comma-separated subset of conventional,fds,eprs,qtvr");
  run_cmd->add_flag("--report", report, "Print a comparison table to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  qtvr::RunConfig config;
  try {
    std::vector<std::string> warnings;
    config = qtvr::load_config(config_path, lenient, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    if (!schemes_override.empty()) {
      config.schemes = qtvr::parse_scheme_list(schemes_override);
    }
  } catch (const qtvr::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const qtvr::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    const auto results = qtvr::run(config);
    const auto format = *qtvr::parse_format(format_name);
    if (out_path.empty()) {
      std::cout << qtvr::render(results, config, format);
    } else {
      qtvr::emit(results, config, format, out_path);
    }
    if (report) std::cerr << qtvr::compare(results).verdict_table();
  } catch (const qtvr::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  }
  return 0;
}
