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

#include "entroledger/runner.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>
#include <toml.hpp>

#include "entroledger/error.hpp"

#ifndef ENTROLEDGER_VERSION
#define ENTROLEDGER_VERSION "unknown"
#endif

namespace entroledger {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::vector<std::string> kTopLevelKeys = {"scenario", "dt",      "steps", "seed", "output",
                                                "dim_cap",  "cg_A",    "cg_B",  "params"};

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string cell(double v) { return std::isfinite(v) ? format_number(v) : std::string(); }

// --- config -----------------------------------------------------------------

double number_of(const toml::node& node, const std::string& key) {
  if (const auto* i = node.as_integer()) return static_cast<double>(i->get());
  if (const auto* f = node.as_floating_point()) return f->get();
  throw ConfigError("key '" + key + "' must be a number");
}

std::int64_t integer_of(const toml::node& node, const std::string& key) {
  if (const auto* i = node.as_integer()) return i->get();
  throw ConfigError("key '" + key + "' must be an integer");
}

std::string string_of(const toml::node& node, const std::string& key) {
  if (const auto* s = node.as_string()) return s->get();
  throw ConfigError("key '" + key + "' must be a string");
}

std::size_t dim_cap_from_env() {
  const char* env = std::getenv("ENTROLEDGER_DIM_CAP");
  if (env == nullptr || *env == '\0') return kDefaultDimCap;
  const std::string_view text(env);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw ConfigError("ENTROLEDGER_DIM_CAP must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

void set_parameter(RunConfig& config, const ScenarioInfo& info, const std::string& name, double value) {
  const auto param = std::find_if(info.parameters.begin(), info.parameters.end(),
                                 [&](const ParameterSpec& p) { return p.name == name; });
  if (param == info.parameters.end()) {
    throw ConfigError("unknown parameter '" + name + "' for scenario " + info.name);
  }
  if (!std::isfinite(value)) throw ConfigError("parameter '" + name + "' must be finite");
  if (param->integral && value != std::round(value)) {
    throw ConfigError("parameter '" + name + "' must be an integer");
  }
  config.params[name] = value;
}

CoarseGraining resolve(const CoarseGrainingChoice& choice, const Scenario& s, Subsystem which) {
  const bool is_A = which == Subsystem::A;
  const char* label = is_A ? "cg_A" : "cg_B";
  const HermitianOperator& h = is_A ? s.model.h_A : s.model.h_B;
  switch (choice.kind) {
    case CoarseGrainingChoice::Kind::ScenarioDefault:
      return is_A ? s.cg_A : s.cg_B;
    case CoarseGrainingChoice::Kind::Identity:
      return CoarseGraining::identity(h.dim());
    case CoarseGrainingChoice::Kind::Eigenbasis:
      return CoarseGraining::eigenbasis(partial_trace(s.rho0, s.model.space, which).matrix());
    case CoarseGrainingChoice::Kind::EnergyBins:
      return energy_coarse_graining(h, choice.bins);
    case CoarseGrainingChoice::Kind::HalfChainNumber: {
      const auto it = s.named_coarse_grainings.find("half_chain_number");
      if (!is_A || it == s.named_coarse_grainings.end()) {
        throw ConfigError(std::string(label) + " = \"half_chain_number\" is only available for subsystem A "
                                               "of gas_expansion");
      }
      return it->second;
    }
  }
  throw ConfigError(std::string("bad coarse-graining choice for ") + label);
}

// --- ledger ---------------------------------------------------------------

struct LedgerCells {
  std::vector<double> numbers;  // NaN for empty cells
  std::vector<std::string> kinds;
};

// Column index of each *_kind column in ledger_columns().
constexpr std::size_t kBetaKindColumn = 6;
constexpr std::size_t kFixedKindColumn = 11;
constexpr std::size_t kObsKindColumn = 18;

LedgerCells row_cells(const EllRow& e, const ObsRow& o) {
  const double beta = e.beta_B.kind == BetaKind::Finite ? e.beta_B.beta : kNaN;
  const double qdot = e.qdot_B.status == HeatRateStatus::Undefined ? kNaN : e.qdot_B.value;
  const double quad = e.clausius.quadrature_valid ? e.clausius.quadrature : kNaN;
  const double fixed = e.fixed_beta.kind == FixedBetaKind::Finite ? e.fixed_beta.value : kNaN;
  const double beta_obs = o.beta_obs_B.kind == BetaKind::Finite ? o.beta_obs_B.beta : kNaN;
  LedgerCells c;
  c.numbers = {e.t,        e.s_A,          e.s_B,     e.s_AB,      e.i_AB,      beta,
               kNaN,       qdot,           e.clausius.telescoped, quad, fixed,  kNaN,
               e.q_energy, o.delta_sum_vn, o.obs.s_obs_A,         o.obs.s_obs_B,  o.obs.sigma_obs,
               beta_obs,   kNaN};
  c.kinds.assign(c.numbers.size(), std::string());
  c.kinds[kBetaKindColumn] = std::string(kind_label(e.beta_B));
  c.kinds[kFixedKindColumn] = std::string(to_string(e.fixed_beta.kind));
  c.kinds[kObsKindColumn] = std::string(kind_label(o.beta_obs_B));
  return c;
}

bool is_kind_column(std::size_t i) {
  return i == kBetaKindColumn || i == kFixedKindColumn || i == kObsKindColumn;
}

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json finite_or_null(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  return {{"scenario", c.scenario},
          {"params", params},
          {"dt", c.dt},
          {"steps", c.steps},
          {"seed", c.seed},
          {"output", c.output.generic_string()},
          {"dim_cap", c.dim_cap},
          {"cg_A", to_string(c.cg_A)},
          {"cg_B", to_string(c.cg_B)}};
}

double max_of(const std::vector<double>& v) {
  double m = -std::numeric_limits<double>::infinity();
  for (const double x : v) m = std::max(m, x);
  return m;
}

void print_checks(std::ostream& out, const RunResult& r) {
  for (const auto& c : r.checks) {
    out << (c.outcome.passed ? "PASS " : "FAIL ") << c.name << "  measured=" << format_number(c.outcome.measured)
        << " threshold=" << format_number(c.outcome.threshold) << '\n';
  }
  out << r.passed_count() << '/' << r.checks.size() << " checks passed\n";
}

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<std::string>& ledger_columns() {
  static const std::vector<std::string> columns = {
      "t",          "S_A",         "S_B",         "S_AB",        "I_AB",
      "beta_B",     "beta_B_kind", "Qdot_B",      "sigma_clausius", "sigma_clausius_quadrature",
      "sigma_fixed_beta", "sigma_fixed_kind", "Q_energy", "delta_sum_vn", "s_obs_A",
      "s_obs_B",    "sigma_obs",   "beta_obs_B",  "beta_obs_kind"};
  return columns;
}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> columns = {"value",     "max_sigma_clausius", "max_delta_s_obs_A",
                                                   "max_sigma_obs", "max_I_AB",        "checks_passed",
                                                   "checks_total"};
  return columns;
}

CoarseGrainingChoice parse_coarse_graining(std::string_view text) {
  using Kind = CoarseGrainingChoice::Kind;
  if (text == "identity") return {Kind::Identity, 0};
  if (text == "eigenbasis") return {Kind::Eigenbasis, 0};
  if (text == "half_chain_number") return {Kind::HalfChainNumber, 0};
  constexpr std::string_view prefix = "energy_bins(";
  if (text.starts_with(prefix) && text.ends_with(")")) {
    const auto inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), n);
    if (ec == std::errc() && ptr == inner.data() + inner.size() && n > 0) return {Kind::EnergyBins, n};
  }
  throw ConfigError("unknown coarse-graining '" + std::string(text) +
                    "' (expected identity, eigenbasis, half_chain_number or energy_bins(n))");
}

std::string to_string(const CoarseGrainingChoice& choice) {
  using Kind = CoarseGrainingChoice::Kind;
  switch (choice.kind) {
    case Kind::ScenarioDefault: return "default";
    case Kind::Identity: return "identity";
    case Kind::Eigenbasis: return "eigenbasis";
    case Kind::HalfChainNumber: return "half_chain_number";
    case Kind::EnergyBins: return "energy_bins(" + std::to_string(choice.bins) + ")";
  }
  return "default";
}

RunConfig parse_run_config(std::string_view toml_text) {
  toml::table table;
  try {
    table = toml::parse(toml_text);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << "config parse error at line " << e.source().begin.line << ": " << e.description();
    throw ConfigError(msg.str());
  }

  for (const auto& [key, node] : table) {
    const std::string k(key.str());
    if (std::find(kTopLevelKeys.begin(), kTopLevelKeys.end(), k) == kTopLevelKeys.end()) {
      throw ConfigError("unknown key '" + k + "'");
    }
  }
  const auto* scenario_node = table.get("scenario");
  if (scenario_node == nullptr) throw ConfigError("missing required key 'scenario'");

  RunConfig config;
  config.scenario = string_of(*scenario_node, "scenario");
  const ScenarioInfo* info = nullptr;
  try {
    info = &find_scenario(config.scenario);
  } catch (const InvalidArgument&) {
    throw ConfigError("key 'scenario': unknown scenario '" + config.scenario + "'");
  }

  for (const auto& p : info->parameters) config.params[p.name] = p.default_value;
  if (const auto* params_node = table.get("params")) {
    const auto* params = params_node->as_table();
    if (params == nullptr) throw ConfigError("key 'params' must be a table");
    for (const auto& [key, node] : *params) {
      const std::string k(key.str());
      set_parameter(config, *info, k, number_of(node, "params." + k));
    }
  }

  config.dt = info->default_dt;
  if (const auto* n = table.get("dt")) config.dt = number_of(*n, "dt");
  if (!(config.dt > 0.0) || !std::isfinite(config.dt)) throw ConfigError("key 'dt' must be positive");

  config.steps = info->default_steps;
  if (const auto* n = table.get("steps")) {
    const auto v = integer_of(*n, "steps");
    if (v <= 0) throw ConfigError("key 'steps' must be positive");
    config.steps = static_cast<std::size_t>(v);
  }
  if (const auto* n = table.get("seed")) {
    const auto v = integer_of(*n, "seed");
    if (v < 0) throw ConfigError("key 'seed' must be non-negative");
    config.seed = static_cast<std::uint64_t>(v);
  }
  config.output = std::filesystem::path("runs") / config.scenario;
  if (const auto* n = table.get("output")) config.output = string_of(*n, "output");

  if (const auto* n = table.get("dim_cap")) {
    const auto v = integer_of(*n, "dim_cap");
    if (v <= 0) throw ConfigError("key 'dim_cap' must be positive");
    config.dim_cap = static_cast<std::size_t>(v);
  } else {
    config.dim_cap = dim_cap_from_env();
  }
  if (const auto* n = table.get("cg_A")) config.cg_A = parse_coarse_graining(string_of(*n, "cg_A"));
  if (const auto* n = table.get("cg_B")) config.cg_B = parse_coarse_graining(string_of(*n, "cg_B"));
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_run_config(text.str());
}

Scenario build_scenario(const RunConfig& config) {
  const auto& info = find_scenario(config.scenario);
  Scenario s = info.build(config.params, config.dt, config.steps, config.seed, config.dim_cap);
  s.cg_A = resolve(config.cg_A, s, Subsystem::A);
  s.cg_B = resolve(config.cg_B, s, Subsystem::B);
  return s;
}

bool RunResult::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.outcome.passed; });
}

std::size_t RunResult::passed_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.outcome.passed; }));
}

RunResult execute(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const Scenario scenario = build_scenario(config);
  ScenarioRun run = run_scenario(scenario);
  auto checks = evaluate_checks(scenario, run);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return RunResult{config, std::move(run), std::move(checks), elapsed.count()};
}

void write_ledger_csv(std::ostream& out, const ScenarioRun& run) {
  const auto& columns = ledger_columns();
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (std::size_t k = 0; k < run.ell.size(); ++k) {
    const auto cells = row_cells(run.ell[k], run.obs[k]);
    for (std::size_t i = 0; i < cells.numbers.size(); ++i) {
      if (i) out << ',';
      out << (is_kind_column(i) ? cells.kinds[i] : cell(cells.numbers[i]));
    }
    out << '\n';
  }
}

std::vector<ColumnRange> column_ranges(const ScenarioRun& run) {
  const auto& columns = ledger_columns();
  std::vector<ColumnRange> ranges;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (!is_kind_column(i)) ranges.push_back({columns[i], std::nullopt, std::nullopt});
  }
  for (std::size_t k = 0; k < run.ell.size(); ++k) {
    const auto cells = row_cells(run.ell[k], run.obs[k]);
    std::size_t r = 0;
    for (std::size_t i = 0; i < cells.numbers.size(); ++i) {
      if (is_kind_column(i)) continue;
      auto& range = ranges[r++];
      const double v = cells.numbers[i];
      if (!std::isfinite(v)) continue;
      range.min = range.min ? std::min(*range.min, v) : v;
      range.max = range.max ? std::max(*range.max, v) : v;
    }
  }
  return ranges;
}

void write_summary_json(std::ostream& out, const RunResult& result) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : result.checks) {
    checks.push_back({{"name", c.name},
                      {"description", c.description},
                      {"passed", c.outcome.passed},
                      {"measured", finite_or_null(c.outcome.measured)},
                      {"threshold", finite_or_null(c.outcome.threshold)}});
  }
  nlohmann::ordered_json columns = nlohmann::ordered_json::object();
  for (const auto& r : column_ranges(result.run)) {
    columns[r.column] = {{"min", optional_number(r.min)}, {"max", optional_number(r.max)}};
  }
  const nlohmann::ordered_json summary = {{"version", std::string(version())},
                                  {"csv_schema_version", kCsvSchemaVersion},
                                  {"seed", result.config.seed},
                                  {"config", config_json(result.config)},
                                  {"checks", checks},
                                  {"all_passed", result.all_passed()},
                                  {"columns", columns},
                                  {"wall_clock_seconds", result.wall_seconds}};
  out << std::setw(2) << summary << '\n';
}

void write_outputs(const RunResult& result) {
  std::filesystem::create_directories(result.config.output);
  {
    std::ofstream csv(result.config.output / "ledger.csv");
    if (!csv) throw Error("cannot write " + (result.config.output / "ledger.csv").string());
    write_ledger_csv(csv, result.run);
  }
  std::ofstream json(result.config.output / "summary.json");
  if (!json) throw Error("cannot write " + (result.config.output / "summary.json").string());
  write_summary_json(json, result);
}

std::vector<double> parse_value_list(std::string_view text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    auto item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) {
      if (text.find_first_not_of(' ') == std::string_view::npos) break;
      throw ConfigError("empty entry in value list '" + std::string(text) + "'");
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw ConfigError("bad number '" + std::string(item) + "' in value list");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  if (values.empty()) throw ConfigError("value list is empty");
  return values;
}

int run_command(const std::filesystem::path& config_path,
                const std::optional<std::filesystem::path>& output_override, std::ostream& out,
                std::ostream& err) {
  try {
    RunConfig config = load_run_config(config_path);
    if (output_override) config.output = *output_override;
    const RunResult result = execute(config);
    write_outputs(result);
    out << "scenario " << config.scenario << ": " << result.run.ell.size() << " rows -> "
        << config.output.generic_string() << '\n';
    print_checks(out, result);
    return result.all_passed() ? kExitOk : kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int sweep_command(const std::filesystem::path& config_path, const std::string& parameter,
                  const std::vector<double>& values,
                  const std::optional<std::filesystem::path>& output_override, std::ostream& out,
                  std::ostream& err) {
  std::vector<RunConfig> configs;
  std::filesystem::path root;
  try {
    if (values.empty()) throw ConfigError("sweep needs at least one value");
    const RunConfig base = load_run_config(config_path);
    root = output_override ? *output_override : base.output;
    const auto& info = find_scenario(base.scenario);
    for (const double v : values) {
      RunConfig c = base;
      set_parameter(c, info, parameter, v);
      c.output = root / (parameter + "=" + format_number(v));
      configs.push_back(std::move(c));
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  // Each run owns its output directory; results are gathered afterwards.
  std::vector<std::future<RunResult>> futures;
  futures.reserve(configs.size());
  for (const auto& c : configs) {
    futures.push_back(std::async(std::launch::async, [c] {
      RunResult r = execute(c);
      write_outputs(r);
      return r;
    }));
  }

  int code = kExitOk;
  std::ostringstream table;
  const auto& columns = sweep_columns();
  for (std::size_t i = 0; i < columns.size(); ++i) table << (i ? "," : "") << columns[i];
  table << '\n';
  for (std::size_t i = 0; i < futures.size(); ++i) {
    try {
      const RunResult r = futures[i].get();
      std::vector<double> sigma, ds_obs_A, sigma_obs, mi;
      for (std::size_t k = 0; k < r.run.ell.size(); ++k) {
        sigma.push_back(r.run.ell[k].clausius.telescoped);
        ds_obs_A.push_back(r.run.obs[k].obs.s_obs_A - r.run.obs[0].obs.s_obs_A);
        sigma_obs.push_back(r.run.obs[k].obs.sigma_obs);
        mi.push_back(r.run.ell[k].i_AB);
      }
      table << format_number(values[i]) << ',' << cell(max_of(sigma)) << ',' << cell(max_of(ds_obs_A)) << ','
            << cell(max_of(sigma_obs)) << ',' << cell(max_of(mi)) << ',' << r.passed_count() << ','
            << r.checks.size() << '\n';
      out << parameter << '=' << format_number(values[i]) << ": " << r.passed_count() << '/' << r.checks.size()
          << " checks passed\n";
      if (!r.all_passed() && code == kExitOk) code = kExitCheckFailed;
    } catch (const std::exception& e) {
      err << "error: " << parameter << '=' << format_number(values[i]) << ": " << e.what() << '\n';
      code = kExitError;
    }
  }
  if (code == kExitError) return code;
  try {
    std::filesystem::create_directories(root);
    std::ofstream csv(root / "sweep.csv");
    if (!csv) throw Error("cannot write " + (root / "sweep.csv").string());
    csv << table.str();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  out << "sweep.csv -> " << (root / "sweep.csv").generic_string() << '\n';
  return code;
}

void list_scenarios(std::ostream& out) {
  for (const auto& info : scenario_registry()) {
    out << info.name << '\n';
    out << "  claim: " << info.claim << '\n';
    out << "  defaults: dt = " << format_number(info.default_dt) << ", steps = " << info.default_steps << '\n';
    out << "  parameters:\n";
    for (const auto& p : info.parameters) {
      out << "    " << p.name << " = " << format_number(p.default_value) << (p.integral ? " (integer)" : "")
          << "  " << p.description << '\n';
    }
    out << "  checks:";
    for (const auto& c : info.check_names) out << ' ' << c << ';';
    out << "\n\n";
  }
}

std::string_view version() noexcept { return ENTROLEDGER_VERSION; }

}  // namespace entroledger
