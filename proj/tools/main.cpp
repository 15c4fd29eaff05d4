// Copyright 2026 The entroledger Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// entroledger run <config.toml> [--output DIR]
// entroledger sweep <config.toml> --param NAME --values v1,v2,... [--output DIR]
// entroledger list

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "entroledger/error.hpp"
#include "entroledger/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact bipartite quantum dynamics with entropy-production ledgers"};
  app.set_version_flag("--version", std::string(entroledger::version()));
  app.require_subcommand(1);

  std::string run_config;
  std::string run_output;
  auto* run = app.add_subcommand("run", "Run one scenario and write ledger.csv and summary.json");
  run->add_option("config", run_config, "TOML configuration file")->required();
  run->add_option("-o,--output", run_output, "Output directory (overrides the config)");

  std::string sweep_config;
  std::string sweep_param;
  std::string sweep_values;
  std::string sweep_output;
  auto* sweep = app.add_subcommand("sweep", "Run a scenario once per parameter value and aggregate sweep.csv");
  sweep->add_option("config", sweep_config, "TOML configuration file")->required();
  sweep->add_option("--param", sweep_param, "Scenario parameter to vary")->required();
  sweep->add_option("--values", sweep_values, "Comma-separated values")->required();
  sweep->add_option("-o,--output", sweep_output, "Output root directory (overrides the config)");

  auto* list = app.add_subcommand("list", "List scenarios, their parameters and checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : entroledger::kExitError;
  }

  const auto optional_path = [](const std::string& s) -> std::optional<std::filesystem::path> {
    if (s.empty()) return std::nullopt;
    return std::filesystem::path(s);
  };

  if (*run) return entroledger::run_command(run_config, optional_path(run_output), std::cout, std::cerr);
  if (*sweep) {
    std::vector<double> values;
    try {
      values = entroledger::parse_value_list(sweep_values);
    } catch (const entroledger::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return entroledger::kExitError;
    }
    return entroledger::sweep_command(sweep_config, sweep_param, values, optional_path(sweep_output), std::cout,
                                      std::cerr);
  }
  if (*list) {
    entroledger::list_scenarios(std::cout);
    return entroledger::kExitOk;
  }
  return entroledger::kExitError;
}
