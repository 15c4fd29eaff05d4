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

#ifndef ENTROLEDGER_RUNNER_HPP
#define ENTROLEDGER_RUNNER_HPP

// Run configuration, orchestration and serialization behind the
// command-line tool.
//
// ledger.csv columns (schema version 1, fixed order):
//   t, S_A, S_B, S_AB, I_AB, beta_B, beta_B_kind, Qdot_B, sigma_clausius,
//   sigma_clausius_quadrature, sigma_fixed_beta, sigma_fixed_kind, Q_energy,
//   delta_sum_vn, s_obs_A, s_obs_B, sigma_obs, beta_obs_B, beta_obs_kind
// Numbers are written with 17 significant digits; infinite or undefined
// values are empty cells and the companion *_kind column says why.
//
// sweep.csv columns:
//   value, max_sigma_clausius, max_delta_s_obs_A, max_sigma_obs, max_I_AB,
//   checks_passed, checks_total

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entroledger/scenarios.hpp"

namespace entroledger {

inline constexpr int kCsvSchemaVersion = 1;

/// Exit codes of run and sweep.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCheckFailed = 2;

[[nodiscard]] const std::vector<std::string>& ledger_columns();
[[nodiscard]] const std::vector<std::string>& sweep_columns();

struct CoarseGrainingChoice {
  enum class Kind { ScenarioDefault, Identity, Eigenbasis, HalfChainNumber, EnergyBins };
  Kind kind = Kind::ScenarioDefault;
  std::size_t bins = 0;  // EnergyBins only
};

/// Accepts "identity", "eigenbasis", "half_chain_number", "energy_bins(n)".
[[nodiscard]] CoarseGrainingChoice parse_coarse_graining(std::string_view text);
[[nodiscard]] std::string to_string(const CoarseGrainingChoice& choice);

struct RunConfig {
  std::string scenario;
  ParameterMap params;  // complete: defaults filled in
  double dt = 0.0;
  std::size_t steps = 0;
  std::uint64_t seed = 0;
  std::filesystem::path output;
  std::size_t dim_cap = kDefaultDimCap;
  CoarseGrainingChoice cg_A;
  CoarseGrainingChoice cg_B;
};

/// Parses TOML text. Unknown keys, missing scenario, wrong types and
/// non-integral values for integral parameters throw ConfigError naming
/// the offending key. dim_cap falls back to ENTROLEDGER_DIM_CAP, then to
/// the library default.
[[nodiscard]] RunConfig parse_run_config(std::string_view toml_text);
[[nodiscard]] RunConfig load_run_config(const std::filesystem::path& path);

/// Builds the scenario and applies coarse-graining overrides.
[[nodiscard]] Scenario build_scenario(const RunConfig& config);

struct ColumnRange {
  std::string column;
  std::optional<double> min;
  std::optional<double> max;
};

struct RunResult {
  RunConfig config;
  ScenarioRun run;
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;

  [[nodiscard]] bool all_passed() const noexcept;
  [[nodiscard]] std::size_t passed_count() const noexcept;
};

[[nodiscard]] RunResult execute(const RunConfig& config);

void write_ledger_csv(std::ostream& out, const ScenarioRun& run);
/// Min and max of every numeric ledger column over its defined cells.
[[nodiscard]] std::vector<ColumnRange> column_ranges(const ScenarioRun& run);
void write_summary_json(std::ostream& out, const RunResult& result);

/// Writes ledger.csv and summary.json into config.output.
void write_outputs(const RunResult& result);

/// Comma-separated numbers; throws ConfigError on malformed or empty lists.
[[nodiscard]] std::vector<double> parse_value_list(std::string_view text);

int run_command(const std::filesystem::path& config_path,
                const std::optional<std::filesystem::path>& output_override, std::ostream& out,
                std::ostream& err);

int sweep_command(const std::filesystem::path& config_path, const std::string& parameter,
                  const std::vector<double>& values,
                  const std::optional<std::filesystem::path>& output_override, std::ostream& out,
                  std::ostream& err);

void list_scenarios(std::ostream& out);

[[nodiscard]] std::string_view version() noexcept;

}  // namespace entroledger

#endif  // ENTROLEDGER_RUNNER_HPP
