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

#ifndef ENTROLEDGER_SCENARIOS_HPP
#define ENTROLEDGER_SCENARIOS_HPP

// Configured counterexample experiments. Each factory returns the model,
// initial state, time grid, coarse-grainings and the named checks that the
// completed ledgers must satisfy.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "entroledger/dynamics.hpp"
#include "entroledger/ell_ledger.hpp"
#include "entroledger/obs_ledger.hpp"
#include "entroledger/qstate.hpp"

namespace entroledger {

struct ScenarioRun {
  Trajectory trajectory;
  std::vector<EllRow> ell;
  std::vector<ObsRow> obs;
};

struct CheckOutcome {
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
};

struct Check {
  std::string name;
  std::string description;
  std::function<CheckOutcome(const ScenarioRun&)> evaluate;
};

struct CheckResult {
  std::string name;
  std::string description;
  CheckOutcome outcome;
};

struct Scenario {
  std::string name;
  CompositeModel model;
  DensityMatrix rho0;
  double dt;
  std::size_t steps;
  CoarseGraining cg_A;
  CoarseGraining cg_B;
  bool correlated_initial_state = false;
  /// Scenario-specific coarse-grainings selectable by name (e.g. half_chain_number).
  std::map<std::string, CoarseGraining> named_coarse_grainings;
  std::vector<Check> checks;
};

/// Evolves the scenario and fills both ledgers.
[[nodiscard]] ScenarioRun run_scenario(const Scenario& scenario);
[[nodiscard]] std::vector<CheckResult> evaluate_checks(const Scenario& scenario, const ScenarioRun& run);

// ---------------------------------------------------------------------------
// Model building blocks

/// Configurations of n hardcore particles on l sites as ascending bitmasks
/// (bit i set = site i occupied).
[[nodiscard]] std::vector<std::uint64_t> hardcore_basis(int sites, int particles);

/// Uniform ladder lowering operator sum_{n>=1} |n-1><n|.
[[nodiscard]] ComplexMatrix ladder_lowering(std::size_t levels);

/// rho = sum_i w_i |Bell_i><Bell_i| over (Phi+, Phi-, Psi+, Psi-).
[[nodiscard]] DensityMatrix bell_diagonal_state(const std::array<double, 4>& weights);

/// Haar-like random state from the Hilbert-Schmidt (Ginibre) ensemble.
[[nodiscard]] DensityMatrix random_density_matrix(std::size_t dim, std::mt19937_64& rng);
/// (G + G^dagger)/2 with complex Gaussian G, scaled by `scale`.
[[nodiscard]] HermitianOperator random_hermitian(std::size_t dim, std::mt19937_64& rng, double scale = 1.0);

// ---------------------------------------------------------------------------
// Scenarios

struct GasExpansionParams {
  int sites = 8;           // L
  int initial_sites = 4;   // L_init
  int particles = 1;       // N
  double hopping = 1.0;    // J
  double coupling = 0.5;   // g
  double omega_B = 1.0;
  double beta_B = 1.0;
  double dt = 0.05;
  std::size_t steps = 400;
};

/// N hardcore particles released from the first L_init sites of an L-site
/// chain (A), weakly watched by a qubit (B) coupled to the last site.
[[nodiscard]] Scenario gas_expansion(const GasExpansionParams& p, std::size_t dim_cap = kDefaultDimCap);

struct DrivenQubitParams {
  int levels_B = 16;
  double coupling = 0.1;  // g
  double omega = 1.0;
  double top_weight = 0.9;
  double dt = 0.5;
  std::size_t steps = 400;
};

/// Qubit A exchanging excitations with a resonant uniform ladder B prepared
/// near its top level.
[[nodiscard]] Scenario driven_qubit(const DrivenQubitParams& p, std::size_t dim_cap = kDefaultDimCap);

struct TwinBodiesParams {
  int spins = 3;  // per body
  double beta_A0 = 1.0;
  double beta_B0 = 1.0;
  double coupling = 0.1;  // g
  double zz = 1.0;
  double field_x = 0.9;
  double field_z = 0.4;
  double dt = 0.1;
  std::size_t steps = 300;
};

/// Two identical mixed-field Ising chains in Gibbs states, coupled through
/// sigma^x sigma^x between the facing edge spins.
[[nodiscard]] Scenario twin_bodies(const TwinBodiesParams& p, std::size_t dim_cap = kDefaultDimCap);

/// Hamiltonian of one twin-bodies chain.
[[nodiscard]] HermitianOperator mixed_field_ising_chain(int spins, double zz, double field_x, double field_z);

struct PureBathParams {
  int levels_B = 8;
  int excited_index = 0;
  double coupling = 0.2;  // g
  double beta_A = 1.0;
  double dt = 0.05;
  std::size_t steps = 100;
};

/// B prepared in an energy eigenstate of a nondegenerate ladder.
[[nodiscard]] Scenario pure_bath(const PureBathParams& p, std::size_t dim_cap = kDefaultDimCap);

struct DegenerateGroundParams {
  int degeneracy = 2;  // g0
  double s_target = 0.3;
  double coupling = 0.0;
  double dt = 0.1;
  std::size_t steps = 10;
};

/// H_B = diag(0 x g0, 1) with rho_B(0) of entropy s_target.
[[nodiscard]] Scenario degenerate_ground(const DegenerateGroundParams& p,
                                         std::size_t dim_cap = kDefaultDimCap);

/// Expected classification of the entropy-matched beta for the
/// degenerate-ground Hamiltonian at the given target.
[[nodiscard]] BetaKind expected_degenerate_ground_kind(int degeneracy, double s_target);

/// Random product-state scenario used by the bounds sampler.
[[nodiscard]] Scenario random_product_scenario(std::size_t d_A, std::size_t d_B, double dt,
                                               std::size_t steps, std::mt19937_64& rng,
                                               std::size_t dim_cap = kDefaultDimCap);

struct BoundsReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t d_A = 0;
  std::size_t d_B = 0;
  std::size_t mutual_information_violations = 0;
  std::size_t entropy_change_violations = 0;
  double max_mutual_information = 0.0;
  double max_mutual_information_ratio = 0.0;  // I_AB / (2 ln d_A)
  double max_entropy_change = 0.0;            // |Delta S_B|
  double max_entropy_change_ratio = 0.0;      // |Delta S_B| / (3 ln d_A)
};

/// Random models and product states; checks I_AB <= 2 ln d_A and
/// |Delta S_B| <= 3 ln d_A at every grid point. Requires d_A <= d_B.
[[nodiscard]] BoundsReport bounds_sampler(std::uint64_t seed, std::size_t trials, std::size_t d_A,
                                          std::size_t d_B, double dt = 0.1, std::size_t steps = 100,
                                          std::size_t dim_cap = kDefaultDimCap);

// ---------------------------------------------------------------------------
// Registry used by the command-line front end

struct ParameterSpec {
  std::string name;
  double default_value = 0.0;
  bool integral = false;
  std::string description;
};

using ParameterMap = std::map<std::string, double, std::less<>>;

struct ScenarioInfo {
  std::string name;
  std::string claim;
  std::vector<ParameterSpec> parameters;
  double default_dt = 0.1;
  std::size_t default_steps = 100;
  std::vector<std::string> check_names;
  /// Builds the scenario from a complete parameter map (defaults filled in).
  std::function<Scenario(const ParameterMap&, double dt, std::size_t steps, std::uint64_t seed,
                         std::size_t dim_cap)>
      build;
};

[[nodiscard]] const std::vector<ScenarioInfo>& scenario_registry();
/// Throws InvalidArgument for unknown names.
[[nodiscard]] const ScenarioInfo& find_scenario(std::string_view name);

}  // namespace entroledger

#endif  // ENTROLEDGER_SCENARIOS_HPP
