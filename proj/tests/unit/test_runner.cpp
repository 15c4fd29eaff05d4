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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "entroledger/error.hpp"
#include "entroledger/runner.hpp"

namespace el = entroledger;
namespace fs = std::filesystem;

namespace {

const fs::path kConfigs = ENTROLEDGER_CONFIG_DIR;

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / "entroledger_test_runner" / name;
  fs::remove_all(p);
  return p;
}

fs::path write_config(const std::string& name, const std::string& text) {
  const fs::path dir = scratch("configs_" + name);
  fs::create_directories(dir);
  const fs::path p = dir / (name + ".toml");
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string join(const std::vector<std::string>& cols) {
  std::string s;
  for (std::size_t i = 0; i < cols.size(); ++i) s += (i ? "," : "") + cols[i];
  return s;
}

TEST(RunConfig, ParsesAndFillsDefaults) {
  const auto c = el::parse_run_config(R"(
scenario = "twin_bodies"
dt = 0.2
steps = 7
[params]
beta_B0 = 2.0
)");
  EXPECT_EQ(c.scenario, "twin_bodies");
  EXPECT_EQ(c.steps, 7u);
  EXPECT_DOUBLE_EQ(c.dt, 0.2);
  EXPECT_DOUBLE_EQ(c.params.at("beta_B0"), 2.0);
  EXPECT_DOUBLE_EQ(c.params.at("beta_A0"), 1.0);
  EXPECT_EQ(c.output, fs::path("runs/twin_bodies"));
}

TEST(RunConfig, UnknownKeysAreRejectedByName) {
  try {
    (void)el::parse_run_config("scenario = \"twin_bodies\"\n[params]\nbetaa = 1.0\n");
    FAIL() << "expected ConfigError";
  } catch (const el::ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("betaa"), std::string::npos);
  }
  EXPECT_THROW((void)el::parse_run_config("scenario = \"pure_bath\"\nstep = 3\n"), el::ConfigError);
  EXPECT_THROW((void)el::parse_run_config("scenario = \"nope\"\n"), el::Error);
  EXPECT_THROW((void)el::parse_run_config("scenario = \"pure_bath\"\n[params]\nd_B = 2.5\n"), el::ConfigError);
}

TEST(CoarseGrainingChoice, RoundTrip) {
  for (const char* text : {"identity", "eigenbasis", "half_chain_number", "energy_bins(3)"}) {
    EXPECT_EQ(el::to_string(el::parse_coarse_graining(text)), text);
  }
  EXPECT_THROW((void)el::parse_coarse_graining("energy_bins(0)"), el::ConfigError);
  EXPECT_THROW((void)el::parse_coarse_graining("bogus"), el::ConfigError);
}

TEST(ValueList, Parsing) {
  EXPECT_EQ(el::parse_value_list("1,2, 3.5"), (std::vector<double>{1.0, 2.0, 3.5}));
  EXPECT_THROW((void)el::parse_value_list(""), el::ConfigError);
  EXPECT_THROW((void)el::parse_value_list("1,x"), el::ConfigError);
}

TEST(RunCommand, UnknownParameterExitsWithError) {
  const auto cfg = write_config("bad", "scenario = \"twin_bodies\"\n[params]\nbetaa = 1.0\n");
  std::ostringstream out, err;
  EXPECT_EQ(el::run_command(cfg, scratch("bad"), out, err), el::kExitError);
  EXPECT_NE(err.str().find("betaa"), std::string::npos);
}

TEST(RunCommand, DegenerateGroundWritesLedger) {
  const auto dir = scratch("degenerate_ground");
  std::ostringstream out, err;
  ASSERT_EQ(el::run_command(kConfigs / "degenerate_ground.toml", dir, out, err), el::kExitOk) << err.str();
  EXPECT_NE(out.str().find("PASS"), std::string::npos);

  const auto csv = lines(slurp(dir / "ledger.csv"));
  ASSERT_EQ(csv.size(), 12u);  // header + steps + 1
  EXPECT_EQ(csv.front(), join(el::ledger_columns()));
  EXPECT_NE(csv[1].find("no_solution"), std::string::npos);

  const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  for (const char* key : {"version", "csv_schema_version", "seed", "config", "checks", "all_passed", "columns",
                          "wall_clock_seconds"}) {
    EXPECT_TRUE(summary.contains(key)) << key;
  }
  EXPECT_EQ(summary["csv_schema_version"], el::kCsvSchemaVersion);
  EXPECT_TRUE(summary["all_passed"].get<bool>());
  EXPECT_EQ(summary["version"], std::string(el::version()));
}

TEST(RunCommand, RerunIsBitIdentical) {
  const auto a = scratch("rerun_a");
  const auto b = scratch("rerun_b");
  std::ostringstream out, err;
  ASSERT_EQ(el::run_command(kConfigs / "pure_bath.toml", a, out, err), el::kExitOk) << err.str();
  ASSERT_EQ(el::run_command(kConfigs / "pure_bath.toml", b, out, err), el::kExitOk) << err.str();
  EXPECT_EQ(slurp(a / "ledger.csv"), slurp(b / "ledger.csv"));
}

TEST(RunCommand, MissingConfigIsAnError) {
  std::ostringstream out, err;
  EXPECT_EQ(el::run_command("/nonexistent/config.toml", std::nullopt, out, err), el::kExitError);
  EXPECT_FALSE(err.str().empty());
}

TEST(ListScenarios, NamesEveryScenarioAndCheck) {
  std::ostringstream out;
  el::list_scenarios(out);
  for (const auto& info : el::scenario_registry()) {
    EXPECT_NE(out.str().find(info.name), std::string::npos);
    for (const auto& c : info.check_names) EXPECT_NE(out.str().find(c), std::string::npos) << c;
  }
}

TEST(SweepCommand, EmptyValueListIsAnError) {
  std::ostringstream out, err;
  EXPECT_EQ(el::sweep_command(kConfigs / "driven_qubit.toml", "g", {}, scratch("sweep_empty"), out, err),
            el::kExitError);
}

TEST(SweepCommand, UnknownParameterIsAnError) {
  std::ostringstream out, err;
  EXPECT_EQ(el::sweep_command(kConfigs / "driven_qubit.toml", "gg", {0.1}, scratch("sweep_bad"), out, err),
            el::kExitError);
}

TEST(SweepCommand, ZeroCouplingGivesNoProduction) {
  const auto cfg = write_config("driven_short", R"(
scenario = "driven_qubit"
dt = 0.5
steps = 40
)");
  const auto dir = scratch("sweep_zero");
  std::ostringstream out, err;
  ASSERT_EQ(el::sweep_command(cfg, "g", {0.0, 0.1}, dir, out, err), el::kExitOk) << err.str();
  const auto csv = lines(slurp(dir / "sweep.csv"));
  ASSERT_EQ(csv.size(), 3u);
  EXPECT_EQ(csv.front(), join(el::sweep_columns()));
  std::istringstream row(csv[1]);
  std::string value, sigma;
  std::getline(row, value, ',');
  std::getline(row, sigma, ',');
  EXPECT_DOUBLE_EQ(std::stod(value), 0.0);
  EXPECT_LE(std::abs(std::stod(sigma)), 1e-9);
  EXPECT_TRUE(fs::exists(dir / "g=0" / "ledger.csv") || fs::exists(dir / "g=0.0" / "ledger.csv"));
}

}  // namespace
