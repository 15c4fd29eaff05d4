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

#include "entroledger/scenarios.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "entroledger/error.hpp"

namespace entroledger {

namespace {

constexpr double kIdentityTolerance = 1e-9;
constexpr double kBoundSlack = 1e-9;
constexpr double kEnergyTolerance = 1e-9;
constexpr double kNoFlowTolerance = 1e-8;
constexpr double kHeatThreshold = 1e-12;
constexpr double kHeatDisagreement = 1e-6;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ComplexMatrix pauli_x() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

/// |1><0| on a qubit.
ComplexMatrix raising() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

/// Single-site operator embedded into an n-site spin chain, site 0 leftmost.
ComplexMatrix site_operator(const ComplexMatrix& op, int site, int spins) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int s = 0; s < spins; ++s) out = kron(out, s == site ? op : identity(2));
  return out;
}

template <typename F>
double max_over(std::size_t n, F&& f) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) m = std::max(m, f(k));
  return m;
}

double ln(std::size_t d) { return std::log(static_cast<double>(d)); }

// --- checks shared by every scenario ---------------------------------------

Check unitarity_check() {
  return {"unitarity", "S_AB(t) stays at S_AB(0) within 1e-9", [](const ScenarioRun& r) {
            const auto& s = r.trajectory.entropy_AB();
            const double m = max_over(s.size(), [&](std::size_t k) { return std::abs(s[k] - s[0]); });
            return CheckOutcome{m <= kIdentityTolerance, m, kIdentityTolerance};
          }};
}

Check energy_conservation_check() {
  return {"energy_conservation", "|Tr[H_AB rho(t)] - Tr[H_AB rho(0)]| <= 1e-9 ||H_AB||",
          [](const ScenarioRun& r) {
            const auto& e = r.trajectory.total_energy();
            const double m = max_over(e.size(), [&](std::size_t k) { return std::abs(e[k] - e[0]); });
            const double tol = kEnergyTolerance * r.trajectory.model().h_AB.norm();
            return CheckOutcome{m <= tol, m, tol};
          }};
}

Check master_identity_check() {
  return {"master_identity", "telescoped Clausius functional equals I_AB(t) within 1e-9",
          [](const ScenarioRun& r) {
            const double m = max_over(r.ell.size(), [&](std::size_t k) {
              return std::abs(r.ell[k].clausius.telescoped - r.ell[k].i_AB);
            });
            return CheckOutcome{m <= kIdentityTolerance, m, kIdentityTolerance};
          }};
}

Check entropy_sum_identity_check(bool product_initial_state) {
  if (product_initial_state) {
    return {"entropy_sum_identity", "Delta S_A + Delta S_B equals I_AB(t) within 1e-9",
            [](const ScenarioRun& r) {
              const double m = max_over(r.obs.size(), [&](std::size_t k) {
                return std::abs(r.obs[k].delta_sum_vn - r.ell[k].i_AB);
              });
              return CheckOutcome{m <= kIdentityTolerance, m, kIdentityTolerance};
            }};
  }
  return {"entropy_sum_identity", "Delta S_A + Delta S_B equals I_AB(t) - I_AB(0) within 1e-9",
          [](const ScenarioRun& r) {
            const double m = max_over(r.obs.size(), [&](std::size_t k) {
              return std::abs(r.obs[k].delta_sum_vn - (r.ell[k].i_AB - r.ell[0].i_AB));
            });
            return CheckOutcome{m <= kIdentityTolerance, m, kIdentityTolerance};
          }};
}

Check sigma_bound_check() {
  return {"sigma_ell_bound", "max_t Sigma_ELL <= 2 min(ln d_A, ln d_B) + 1e-9", [](const ScenarioRun& r) {
            const auto& sp = r.trajectory.space();
            const double bound = 2.0 * std::min(ln(sp.d_A), ln(sp.d_B)) + kBoundSlack;
            const double m =
                max_over(r.ell.size(), [&](std::size_t k) { return r.ell[k].clausius.telescoped; });
            return CheckOutcome{m <= bound, m, bound};
          }};
}

Check entropy_change_bound_check() {
  return {"entropy_change_bound", "|S_B(t) - S_B(0)| <= 3 ln d_A + 1e-9 (d_A <= d_B)",
          [](const ScenarioRun& r) {
            const double bound = 3.0 * ln(r.trajectory.space().d_A) + kBoundSlack;
            const auto& s = r.trajectory.entropy_B();
            const double m = max_over(s.size(), [&](std::size_t k) { return std::abs(s[k] - s[0]); });
            return CheckOutcome{m <= bound, m, bound};
          }};
}

void add_standard_checks(Scenario& s) {
  const bool product = !s.correlated_initial_state;
  s.checks.push_back(unitarity_check());
  s.checks.push_back(energy_conservation_check());
  if (product) s.checks.push_back(master_identity_check());
  s.checks.push_back(entropy_sum_identity_check(product));
  s.checks.push_back(sigma_bound_check());
  if (s.model.space.d_A <= s.model.space.d_B) s.checks.push_back(entropy_change_bound_check());
}

Scenario make_scenario(std::string name, CompositeModel model, DensityMatrix rho0, double dt,
                       std::size_t steps, CoarseGraining cg_A, CoarseGraining cg_B) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be positive and finite");
  if (steps == 0) throw InvalidArgument("steps must be positive");
  return Scenario{std::move(name), std::move(model), std::move(rho0), dt, steps,
                  std::move(cg_A), std::move(cg_B), false, {}, {}};
}

// Distribution over the g0 ground levels, weight q on the first, with the
// requested entropy (0 <= s <= ln g0).
std::vector<double> ground_distribution(int g0, double s) {
  const auto entropy = [g0](double q) {
    double h = q > 0.0 ? -q * std::log(q) : 0.0;
    const double rest = (1.0 - q) / (g0 - 1);
    if (rest > 0.0) h -= (1.0 - q) * std::log(rest);
    return h;
  };
  double lo = 1.0 / g0;  // entropy ln g0
  double hi = 1.0;       // entropy 0
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (entropy(mid) >= s) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  std::vector<double> p(static_cast<std::size_t>(g0) + 1, 0.0);
  p[0] = lo;
  for (int i = 1; i < g0; ++i) p[static_cast<std::size_t>(i)] = (1.0 - lo) / (g0 - 1);
  return p;
}

// Mixture of the uniform ground-space state and the uniform state over all
// g0 + 1 levels with entropy s in [ln g0, ln(g0 + 1)].
std::vector<double> mixed_distribution(int g0, double s) {
  const auto make = [g0](double x) {
    std::vector<double> p(static_cast<std::size_t>(g0) + 1);
    for (int i = 0; i < g0; ++i) p[static_cast<std::size_t>(i)] = (1.0 - x) / g0 + x / (g0 + 1);
    p[static_cast<std::size_t>(g0)] = x / (g0 + 1);
    return p;
  };
  const auto entropy = [](const std::vector<double>& p) {
    double h = 0.0;
    for (const double v : p) {
      if (v > 0.0) h -= v * std::log(v);
    }
    return h;
  };
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (entropy(make(mid)) <= s) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return make(lo);
}

int as_int(const ParameterMap& params, std::string_view name) {
  const auto it = params.find(name);
  if (it == params.end()) throw InvalidArgument("missing parameter " + std::string(name));
  return static_cast<int>(std::lround(it->second));
}

double as_double(const ParameterMap& params, std::string_view name) {
  const auto it = params.find(name);
  if (it == params.end()) throw InvalidArgument("missing parameter " + std::string(name));
  return it->second;
}

}  // namespace

// ---------------------------------------------------------------------------

ScenarioRun run_scenario(const Scenario& scenario) {
  auto traj = evolve(scenario.model, scenario.rho0, scenario.dt, scenario.steps);
  auto ell = compute_ell_ledger(traj);
  auto obs = compute_obs_ledger(traj, scenario.cg_A, scenario.cg_B);
  return ScenarioRun{std::move(traj), std::move(ell), std::move(obs)};
}

std::vector<CheckResult> evaluate_checks(const Scenario& scenario, const ScenarioRun& run) {
  std::vector<CheckResult> out;
  out.reserve(scenario.checks.size());
  for (const auto& c : scenario.checks) out.push_back({c.name, c.description, c.evaluate(run)});
  return out;
}

std::vector<std::uint64_t> hardcore_basis(int sites, int particles) {
  if (sites < 1 || sites > 62) throw InvalidArgument("hardcore_basis: sites must be in [1, 62]");
  if (particles < 0 || particles > sites) throw InvalidArgument("hardcore_basis: bad particle number");
  std::vector<std::uint64_t> out;
  const std::uint64_t end = std::uint64_t{1} << sites;
  for (std::uint64_t c = 0; c < end; ++c) {
    if (std::popcount(c) == particles) out.push_back(c);
  }
  return out;
}

ComplexMatrix ladder_lowering(std::size_t levels) {
  const auto n = static_cast<Eigen::Index>(levels);
  ComplexMatrix b = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) b(i - 1, i) = 1.0;
  return b;
}

DensityMatrix bell_diagonal_state(const std::array<double, 4>& weights) {
  const double r = 1.0 / std::numbers::sqrt2;
  std::array<ComplexVector, 4> bell;
  for (auto& v : bell) v = ComplexVector::Zero(4);
  bell[0](0) = r;  // Phi+ = (|00> + |11>)/sqrt2
  bell[0](3) = r;
  bell[1](0) = r;  // Phi-
  bell[1](3) = -r;
  bell[2](1) = r;  // Psi+
  bell[2](2) = r;
  bell[3](1) = r;  // Psi-
  bell[3](2) = -r;
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  for (std::size_t i = 0; i < 4; ++i) rho += weights[i] * bell[i] * bell[i].adjoint();
  return DensityMatrix(rho);
}

DensityMatrix random_density_matrix(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

HermitianOperator random_hermitian(std::size_t dim, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> normal;
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  }
  return HermitianOperator(scale / std::sqrt(2.0 * static_cast<double>(dim)) * (g + g.adjoint()));
}

// ---------------------------------------------------------------------------
// gas_expansion

Scenario gas_expansion(const GasExpansionParams& p, std::size_t dim_cap) {
  const int L = p.sites;
  if (!(1 <= p.particles && p.particles <= p.initial_sites && p.initial_sites < L)) {
    throw InvalidArgument("gas_expansion requires 1 <= N <= L_init < L");
  }
  if (L > 30) throw InvalidArgument("gas_expansion supports at most 30 sites");
  const auto basis = hardcore_basis(L, p.particles);
  check_dim_cap(BipartiteSpace{basis.size(), 2}, dim_cap);

  std::unordered_map<std::uint64_t, Eigen::Index> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<Eigen::Index>(i));

  const auto dim_A = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix h_A = ComplexMatrix::Zero(dim_A, dim_A);
  ComplexMatrix n_last = ComplexMatrix::Zero(dim_A, dim_A);
  for (Eigen::Index col = 0; col < dim_A; ++col) {
    const std::uint64_t c = basis[static_cast<std::size_t>(col)];
    for (int site = 0; site + 1 < L; ++site) {
      const bool left = (c >> site) & 1U;
      const bool right = (c >> (site + 1)) & 1U;
      if (left != right) {
        const std::uint64_t hopped = c ^ ((std::uint64_t{1} << site) | (std::uint64_t{1} << (site + 1)));
        h_A(index.at(hopped), col) += -p.hopping;
      }
    }
    if ((c >> (L - 1)) & 1U) n_last(col, col) = 1.0;
  }

  // Uniform classical mixture over configurations inside the first L_init sites.
  const std::uint64_t confined_mask = (std::uint64_t{1} << p.initial_sites) - 1;
  std::vector<double> populations(basis.size(), 0.0);
  std::size_t confined = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if ((basis[i] & ~confined_mask) == 0) {
      populations[i] = 1.0;
      ++confined;
    }
  }
  for (auto& v : populations) v /= static_cast<double>(confined);

  // Particle number in the left half of the chain.
  const int half = L / 2;
  const std::uint64_t left_mask = (std::uint64_t{1} << half) - 1;
  std::vector<std::vector<std::size_t>> groups(static_cast<std::size_t>(p.particles) + 1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    groups[static_cast<std::size_t>(std::popcount(basis[i] & left_mask))].push_back(i);
  }
  std::erase_if(groups, [](const auto& g) { return g.empty(); });
  auto half_chain = CoarseGraining::from_index_groups(basis.size(), groups);

  HermitianOperator h_B = HermitianOperator::diagonal({0.0, p.omega_B});
  HermitianOperator v(p.coupling * kron(n_last, pauli_x()));
  auto model = CompositeModel::assemble(HermitianOperator(h_A), h_B, std::move(v), dim_cap);
  auto rho0 = product_state(DensityMatrix::diagonal(populations), gibbs_state(h_B, p.beta_B).state);
  auto cg_B = energy_coarse_graining(h_B, 2);

  Scenario s = make_scenario("gas_expansion", std::move(model), std::move(rho0), p.dt, p.steps, half_chain,
                             std::move(cg_B));
  s.named_coarse_grainings.emplace("half_chain_number", std::move(half_chain));
  add_standard_checks(s);
  return s;
}

// ---------------------------------------------------------------------------
// driven_qubit

Scenario driven_qubit(const DrivenQubitParams& p, std::size_t dim_cap) {
  if (p.levels_B < 4) throw InvalidArgument("driven_qubit requires levels_B >= 4");
  if (!(p.top_weight >= 0.0 && p.top_weight <= 1.0)) throw InvalidArgument("top_weight must lie in [0, 1]");
  const auto levels = static_cast<std::size_t>(p.levels_B);
  check_dim_cap(BipartiteSpace{2, levels}, dim_cap);

  std::vector<double> ladder(levels);
  for (std::size_t n = 0; n < levels; ++n) ladder[n] = p.omega * static_cast<double>(n);
  HermitianOperator h_A = HermitianOperator::diagonal({0.0, p.omega});
  HermitianOperator h_B = HermitianOperator::diagonal(ladder);
  const ComplexMatrix b = ladder_lowering(levels);
  HermitianOperator v(p.coupling * (kron(raising(), b) + kron(raising().adjoint(), b.adjoint())));

  std::vector<double> pop_B(levels, 0.0);
  pop_B[levels - 1] = p.top_weight;
  pop_B[levels - 2] = 1.0 - p.top_weight;
  auto rho0 = product_state(DensityMatrix::diagonal({1.0, 0.0}), DensityMatrix::diagonal(pop_B));

  auto cg_A = energy_coarse_graining(h_A, 2);
  auto cg_B = energy_coarse_graining(h_B, 4);
  auto model = CompositeModel::assemble(std::move(h_A), std::move(h_B), std::move(v), dim_cap);
  Scenario s = make_scenario("driven_qubit", std::move(model), std::move(rho0), p.dt, p.steps,
                             std::move(cg_A), std::move(cg_B));
  add_standard_checks(s);
  return s;
}

// ---------------------------------------------------------------------------
// twin_bodies

HermitianOperator mixed_field_ising_chain(int spins, double zz, double field_x, double field_z) {
  if (spins < 1) throw InvalidArgument("chain needs at least one spin");
  const auto dim = static_cast<Eigen::Index>(1) << spins;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < spins; ++i) {
    h += field_x * site_operator(pauli_x(), i, spins) + field_z * site_operator(pauli_z(), i, spins);
    if (i + 1 < spins) {
      h += zz * site_operator(pauli_z(), i, spins) * site_operator(pauli_z(), i + 1, spins);
    }
  }
  return HermitianOperator(h);
}

Scenario twin_bodies(const TwinBodiesParams& p, std::size_t dim_cap) {
  if (p.spins < 1 || p.spins > 6) throw InvalidArgument("twin_bodies supports 1..6 spins per body");
  if (!(p.beta_A0 >= 0.0) || !(p.beta_B0 >= 0.0)) throw InvalidArgument("inverse temperatures must be >= 0");
  const std::size_t d = std::size_t{1} << p.spins;
  check_dim_cap(BipartiteSpace{d, d}, dim_cap);

  HermitianOperator h = mixed_field_ising_chain(p.spins, p.zz, p.field_x, p.field_z);
  // A's last spin faces B's first spin, so the pair is mirror symmetric.
  HermitianOperator v(p.coupling *
                      kron(site_operator(pauli_x(), p.spins - 1, p.spins), site_operator(pauli_x(), 0, p.spins)));
  auto rho0 = product_state(gibbs_state(h, p.beta_A0).state, gibbs_state(h, p.beta_B0).state);
  auto cg_A = energy_coarse_graining(h, 4);
  auto cg_B = energy_coarse_graining(h, 4);
  const double norm_B = h.norm();
  auto model = CompositeModel::assemble(h, h, std::move(v), dim_cap);

  Scenario s = make_scenario("twin_bodies", std::move(model), std::move(rho0), p.dt, p.steps,
                             std::move(cg_A), std::move(cg_B));
  add_standard_checks(s);

  if (p.beta_A0 == p.beta_B0) {
    s.checks.push_back({"no_energy_flow", "equal bodies at equal temperature: |Q_energy(t)| <= 1e-8 ||H_B||",
                        [norm_B](const ScenarioRun& r) {
                          const double m = max_over(r.ell.size(),
                                                    [&](std::size_t k) { return std::abs(r.ell[k].q_energy); });
                          const double tol = kNoFlowTolerance * norm_B;
                          return CheckOutcome{m <= tol, m, tol};
                        }});
    s.checks.push_back({"equal_body_energies",
                        "equal bodies at equal temperature: |Tr[H_A rho_A] - Tr[H_B rho_B]| <= 1e-8 ||H_B||",
                        [norm_B](const ScenarioRun& r) {
                          const auto& traj = r.trajectory;
                          const double m = max_over(traj.size(), [&](std::size_t k) {
                            return std::abs(traj.reduced_A(k).expectation(traj.model().h_A) -
                                            traj.reduced_B(k).expectation(traj.model().h_B));
                          });
                          const double tol = kNoFlowTolerance * norm_B;
                          return CheckOutcome{m <= tol, m, tol};
                        }});
    s.checks.push_back(
        {"ell_temperature_drift",
         "max_t |beta_B(t) - beta_B(0)| >= 10x the beta uncertainty implied by the solver residual",
         [](const ScenarioRun& r) {
           const auto& b0 = r.ell.front().beta_B;
           if (!b0.is_finite()) return CheckOutcome{false, kNaN, kNaN};
           const RealVector energies = r.trajectory.model().h_B.eigenvalues();
           const double slope = std::abs(gibbs_entropy_derivative(energies, b0.beta));
           const double threshold = 10.0 * kBetaResidualTolerance / std::max(slope, 1e-300);
           double drift = 0.0;
           for (const auto& row : r.ell) {
             if (row.beta_B.is_finite()) drift = std::max(drift, std::abs(row.beta_B.beta - b0.beta));
           }
           return CheckOutcome{drift >= threshold, drift, threshold};
         }});
  } else {
    s.checks.push_back(
        {"energy_flows_hot_to_cold",
         "first nonzero Q_energy has the sign of E_B(0) - E_A(0) (energy enters the colder body)",
         [](const ScenarioRun& r) {
           const auto& traj = r.trajectory;
           const double gap = traj.reduced_B(0).expectation(traj.model().h_B) -
                              traj.reduced_A(0).expectation(traj.model().h_A);
           for (const auto& row : r.ell) {
             if (std::abs(row.q_energy) > kHeatThreshold) {
               const bool same_sign = (row.q_energy > 0.0) == (gap > 0.0);
               return CheckOutcome{same_sign, row.q_energy, gap};
             }
           }
           return CheckOutcome{false, 0.0, gap};
         }});
  }
  s.checks.push_back({"ell_heat_differs_from_energy_flow",
                      "|Q_B(t_end) - Q_energy(t_end)| > 1e-6 (entropy-based heat is not the energy flow)",
                      [](const ScenarioRun& r) {
                        const auto& last = r.ell.back();
                        if (!last.fixed_beta.heat_valid) return CheckOutcome{false, kNaN, kHeatDisagreement};
                        const double diff = std::abs(last.fixed_beta.heat - last.q_energy);
                        return CheckOutcome{diff > kHeatDisagreement, diff, kHeatDisagreement};
                      }});
  return s;
}

// ---------------------------------------------------------------------------
// pure_bath

Scenario pure_bath(const PureBathParams& p, std::size_t dim_cap) {
  if (p.levels_B < 2) throw InvalidArgument("pure_bath requires d_B >= 2");
  if (p.excited_index < 0 || p.excited_index >= p.levels_B) {
    throw InvalidArgument("pure_bath requires 0 <= excited_index < d_B");
  }
  const auto levels = static_cast<std::size_t>(p.levels_B);
  check_dim_cap(BipartiteSpace{2, levels}, dim_cap);

  std::vector<double> ladder(levels);
  for (std::size_t n = 0; n < levels; ++n) ladder[n] = static_cast<double>(n);
  HermitianOperator h_A = HermitianOperator::diagonal({0.0, 1.0});
  HermitianOperator h_B = HermitianOperator::diagonal(ladder);
  const ComplexMatrix b = ladder_lowering(levels);
  HermitianOperator v(p.coupling * kron(pauli_x(), b + b.adjoint()));

  std::vector<double> pop_B(levels, 0.0);
  pop_B[static_cast<std::size_t>(p.excited_index)] = 1.0;
  auto rho0 = product_state(gibbs_state(h_A, p.beta_A).state, DensityMatrix::diagonal(pop_B));
  auto cg_A = energy_coarse_graining(h_A, 2);
  auto cg_B = energy_coarse_graining(h_B, levels);
  auto model = CompositeModel::assemble(std::move(h_A), std::move(h_B), std::move(v), dim_cap);

  Scenario s = make_scenario("pure_bath", std::move(model), std::move(rho0), p.dt, p.steps, std::move(cg_A),
                             std::move(cg_B));
  add_standard_checks(s);
  s.checks.push_back({"pure_state_zero_temperature", "beta_B(0) is classified ZeroTemperature",
                      [](const ScenarioRun& r) {
                        const bool ok = r.ell.front().beta_B.kind == BetaKind::ZeroTemperature;
                        return CheckOutcome{ok, r.ell.front().s_B, kBetaResidualTolerance};
                      }});
  s.checks.push_back({"fixed_beta_divergence",
                      "Sigma_fix is Divergent at every step with |Q_B| > 1e-12, and such a step exists",
                      [](const ScenarioRun& r) {
                        double first = kNaN;
                        bool all_divergent = true;
                        for (const auto& row : r.ell) {
                          const auto& f = row.fixed_beta;
                          if (!f.heat_valid || std::abs(f.heat) <= kHeatThreshold) continue;
                          if (std::isnan(first)) first = f.heat;
                          all_divergent = all_divergent && f.kind == FixedBetaKind::Divergent;
                        }
                        return CheckOutcome{!std::isnan(first) && all_divergent, first, kHeatThreshold};
                      }});
  return s;
}

// ---------------------------------------------------------------------------
// degenerate_ground

BetaKind expected_degenerate_ground_kind(int degeneracy, double s_target) {
  const double ln_g0 = std::log(static_cast<double>(degeneracy));
  if (s_target < ln_g0 - kBetaResidualTolerance) return BetaKind::NoSolution;
  if (s_target <= ln_g0 + kBetaResidualTolerance) return BetaKind::ZeroTemperature;
  return BetaKind::Finite;
}

Scenario degenerate_ground(const DegenerateGroundParams& p, std::size_t dim_cap) {
  if (p.degeneracy < 2) throw InvalidArgument("degenerate_ground requires g0 >= 2");
  const int g0 = p.degeneracy;
  const double ln_g0 = std::log(static_cast<double>(g0));
  const double ln_d = std::log(static_cast<double>(g0 + 1));
  if (!(p.s_target >= 0.0) || p.s_target > ln_d) {
    throw InvalidArgument("degenerate_ground requires 0 <= S_target <= ln(g0 + 1)");
  }
  const auto levels = static_cast<std::size_t>(g0) + 1;
  check_dim_cap(BipartiteSpace{2, levels}, dim_cap);

  std::vector<double> energies(levels, 0.0);
  energies.back() = 1.0;
  HermitianOperator h_A = HermitianOperator::diagonal({0.0, 1.0});
  HermitianOperator h_B = HermitianOperator::diagonal(energies);
  const ComplexMatrix b = ladder_lowering(levels);
  HermitianOperator v(p.coupling * kron(pauli_x(), b + b.adjoint()));

  const auto pop_B = p.s_target <= ln_g0 ? ground_distribution(g0, p.s_target)
                                         : mixed_distribution(g0, p.s_target);
  auto rho0 = product_state(DensityMatrix::diagonal({1.0, 0.0}), DensityMatrix::diagonal(pop_B));
  auto cg_A = energy_coarse_graining(h_A, 2);
  auto cg_B = energy_coarse_graining(h_B, 2);
  auto model = CompositeModel::assemble(std::move(h_A), h_B, std::move(v), dim_cap);

  Scenario s = make_scenario("degenerate_ground", std::move(model), std::move(rho0), p.dt, p.steps,
                             std::move(cg_A), std::move(cg_B));
  add_standard_checks(s);
  const BetaKind expected = expected_degenerate_ground_kind(g0, p.s_target);
  const double s_target = p.s_target;
  s.checks.push_back(
      {"beta_classification",
       "entropy-matched beta is NoSolution below ln g0, ZeroTemperature at ln g0, Finite above",
       [expected, s_target, h_B, ln_g0](const ScenarioRun& r) {
         const auto direct = solve_beta_from_entropy(h_B, s_target);
         const bool ok = direct.kind == expected && r.ell.front().beta_B.kind == expected;
         return CheckOutcome{ok, s_target - ln_g0, -kBetaResidualTolerance};
       }});
  return s;
}

// ---------------------------------------------------------------------------
// bounds_sampler

Scenario random_product_scenario(std::size_t d_A, std::size_t d_B, double dt, std::size_t steps,
                                 std::mt19937_64& rng, std::size_t dim_cap) {
  check_dim_cap(BipartiteSpace{d_A, d_B}, dim_cap);
  auto h_A = random_hermitian(d_A, rng);
  auto h_B = random_hermitian(d_B, rng);
  auto v = random_hermitian(d_A * d_B, rng);
  auto rho_A = random_density_matrix(d_A, rng);
  auto rho_B = random_density_matrix(d_B, rng);
  auto model = CompositeModel::assemble(std::move(h_A), std::move(h_B), std::move(v), dim_cap);
  auto cg_A = CoarseGraining::identity(d_A);
  auto cg_B = CoarseGraining::identity(d_B);
  Scenario s = make_scenario("random_product", std::move(model), product_state(rho_A, rho_B), dt, steps,
                             std::move(cg_A), std::move(cg_B));
  add_standard_checks(s);
  return s;
}

BoundsReport bounds_sampler(std::uint64_t seed, std::size_t trials, std::size_t d_A, std::size_t d_B,
                            double dt, std::size_t steps, std::size_t dim_cap) {
  if (d_A < 1 || d_A > d_B) throw InvalidArgument("bounds_sampler requires 1 <= d_A <= d_B");
  check_dim_cap(BipartiteSpace{d_A, d_B}, dim_cap);
  BoundsReport report{seed, trials, d_A, d_B};
  const double mi_bound = 2.0 * ln(d_A);
  const double change_bound = 3.0 * ln(d_A);
  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Scenario s = random_product_scenario(d_A, d_B, dt, steps, rng, dim_cap);
    const Trajectory traj = evolve(s.model, s.rho0, s.dt, s.steps);
    const auto mi = traj.mutual_information();
    const auto& s_B = traj.entropy_B();
    for (std::size_t k = 0; k < traj.size(); ++k) {
      const double change = std::abs(s_B[k] - s_B[0]);
      if (mi[k] > mi_bound + kBoundSlack) ++report.mutual_information_violations;
      if (change > change_bound + kBoundSlack) ++report.entropy_change_violations;
      report.max_mutual_information = std::max(report.max_mutual_information, mi[k]);
      report.max_entropy_change = std::max(report.max_entropy_change, change);
    }
  }
  if (mi_bound > 0.0) {
    report.max_mutual_information_ratio = report.max_mutual_information / mi_bound;
    report.max_entropy_change_ratio = report.max_entropy_change / change_bound;
  }
  return report;
}

// ---------------------------------------------------------------------------
// registry

namespace {

std::vector<ScenarioInfo> build_registry() {
  std::vector<ScenarioInfo> r;

  {
    GasExpansionParams d;
    r.push_back(ScenarioInfo{
        "gas_expansion",
        "a gas of N particles released into a larger volume produces entropy growing with N, while the "
        "ELL entropy production with a qubit partner never exceeds 2 ln 2",
        {{"L", double(d.sites), true, "chain sites (volume V)"},
         {"L_init", double(d.initial_sites), true, "initially occupied sites (volume V')"},
         {"N", double(d.particles), true, "hardcore particles"},
         {"J", d.hopping, false, "hopping energy"},
         {"g", d.coupling, false, "qubit coupling to the last site"},
         {"omega_B", d.omega_B, false, "qubit level splitting"},
         {"beta_B", d.beta_B, false, "initial inverse temperature of the qubit"}},
        d.dt,
        d.steps,
        {"unitarity", "energy_conservation", "master_identity", "entropy_sum_identity", "sigma_ell_bound"},
        [](const ParameterMap& m, double dt, std::size_t steps, std::uint64_t, std::size_t cap) {
          GasExpansionParams p;
          p.sites = as_int(m, "L");
          p.initial_sites = as_int(m, "L_init");
          p.particles = as_int(m, "N");
          p.hopping = as_double(m, "J");
          p.coupling = as_double(m, "g");
          p.omega_B = as_double(m, "omega_B");
          p.beta_B = as_double(m, "beta_B");
          p.dt = dt;
          p.steps = steps;
          return gas_expansion(p, cap);
        }});
  }
  {
    DrivenQubitParams d;
    r.push_back(ScenarioInfo{
        "driven_qubit",
        "a qubit driven for a long time by a work source keeps the ELL entropy production below 2 ln 2",
        {{"levels_B", double(d.levels_B), true, "levels of the driving ladder"},
         {"g", d.coupling, false, "exchange coupling"},
         {"omega", d.omega, false, "qubit and ladder spacing (resonant)"},
         {"top_weight", d.top_weight, false, "population of the top ladder level"}},
        d.dt,
        d.steps,
        {"unitarity", "energy_conservation", "master_identity", "entropy_sum_identity", "sigma_ell_bound",
         "entropy_change_bound"},
        [](const ParameterMap& m, double dt, std::size_t steps, std::uint64_t, std::size_t cap) {
          DrivenQubitParams p;
          p.levels_B = as_int(m, "levels_B");
          p.coupling = as_double(m, "g");
          p.omega = as_double(m, "omega");
          p.top_weight = as_double(m, "top_weight");
          p.dt = dt;
          p.steps = steps;
          return driven_qubit(p, cap);
        }});
  }
  {
    TwinBodiesParams d;
    r.push_back(ScenarioInfo{
        "twin_bodies",
        "for two equal bodies energy flows according to their energy difference, while the ELL "
        "temperature changes through the build-up of correlations",
        {{"n_spins", double(d.spins), true, "spins per body"},
         {"beta_A0", d.beta_A0, false, "initial inverse temperature of A"},
         {"beta_B0", d.beta_B0, false, "initial inverse temperature of B"},
         {"g", d.coupling, false, "edge coupling"},
         {"zz", d.zz, false, "Ising coupling inside each body"},
         {"field_x", d.field_x, false, "transverse field"},
         {"field_z", d.field_z, false, "longitudinal field"}},
        d.dt,
        d.steps,
        {"unitarity", "energy_conservation", "master_identity", "entropy_sum_identity", "sigma_ell_bound",
         "entropy_change_bound", "no_energy_flow (equal temperatures)",
         "equal_body_energies (equal temperatures)", "ell_temperature_drift (equal temperatures)",
         "energy_flows_hot_to_cold (unequal temperatures)", "ell_heat_differs_from_energy_flow"},
        [](const ParameterMap& m, double dt, std::size_t steps, std::uint64_t, std::size_t cap) {
          TwinBodiesParams p;
          p.spins = as_int(m, "n_spins");
          p.beta_A0 = as_double(m, "beta_A0");
          p.beta_B0 = as_double(m, "beta_B0");
          p.coupling = as_double(m, "g");
          p.zz = as_double(m, "zz");
          p.field_x = as_double(m, "field_x");
          p.field_z = as_double(m, "field_z");
          p.dt = dt;
          p.steps = steps;
          return twin_bodies(p, cap);
        }});
  }
  {
    PureBathParams d;
    r.push_back(ScenarioInfo{
        "pure_bath",
        "the ELL temperature of a pure state is zero independent of its energy, and the fixed-beta "
        "functional diverges",
        {{"d_B", double(d.levels_B), true, "levels of B"},
         {"excited_index", double(d.excited_index), true, "eigenstate B starts in"},
         {"g", d.coupling, false, "coupling"},
         {"beta_A", d.beta_A, false, "initial inverse temperature of A"}},
        d.dt,
        d.steps,
        {"unitarity", "energy_conservation", "master_identity", "entropy_sum_identity", "sigma_ell_bound",
         "entropy_change_bound", "pure_state_zero_temperature", "fixed_beta_divergence"},
        [](const ParameterMap& m, double dt, std::size_t steps, std::uint64_t, std::size_t cap) {
          PureBathParams p;
          p.levels_B = as_int(m, "d_B");
          p.excited_index = as_int(m, "excited_index");
          p.coupling = as_double(m, "g");
          p.beta_A = as_double(m, "beta_A");
          p.dt = dt;
          p.steps = steps;
          return pure_bath(p, cap);
        }});
  }
  {
    DegenerateGroundParams d;
    r.push_back(ScenarioInfo{
        "degenerate_ground",
        "the ELL temperature is not always defined when the ground state of B is degenerate",
        {{"g0", double(d.degeneracy), true, "ground-state degeneracy"},
         {"S_target", d.s_target, false, "entropy of rho_B(0)"},
         {"g", d.coupling, false, "coupling"}},
        d.dt,
        d.steps,
        {"unitarity", "energy_conservation", "master_identity", "entropy_sum_identity", "sigma_ell_bound",
         "entropy_change_bound", "beta_classification"},
        [](const ParameterMap& m, double dt, std::size_t steps, std::uint64_t, std::size_t cap) {
          DegenerateGroundParams p;
          p.degeneracy = as_int(m, "g0");
          p.s_target = as_double(m, "S_target");
          p.coupling = as_double(m, "g");
          p.dt = dt;
          p.steps = steps;
          return degenerate_ground(p, cap);
        }});
  }
  {
    r.push_back(ScenarioInfo{
        "bounds_sampler",
        "mutual information is bounded by 2 min(ln d_A, ln d_B), and |Delta S_B| by 3 ln d_A when "
        "d_A <= d_B",
        {{"trials", 100.0, true, "random models"},
         {"d_A", 2.0, true, "dimension of A"},
         {"d_B", 2.0, true, "dimension of B (>= d_A)"}},
        0.1,
        100,
        {"unitarity", "energy_conservation", "master_identity", "entropy_sum_identity", "sigma_ell_bound",
         "entropy_change_bound", "sampled_mutual_information_bound", "sampled_entropy_change_bound"},
        [](const ParameterMap& m, double dt, std::size_t steps, std::uint64_t seed, std::size_t cap) {
          const int trials = as_int(m, "trials");
          const int d_A = as_int(m, "d_A");
          const int d_B = as_int(m, "d_B");
          if (trials < 0 || d_A < 1 || d_B < d_A) {
            throw InvalidArgument("bounds_sampler requires trials >= 0 and 1 <= d_A <= d_B");
          }
          const auto report = std::make_shared<const BoundsReport>(
              bounds_sampler(seed, static_cast<std::size_t>(trials), static_cast<std::size_t>(d_A),
                             static_cast<std::size_t>(d_B), dt, steps, cap));
          // The ledger shows the first trial of the same random stream.
          std::mt19937_64 rng(seed);
          Scenario s = random_product_scenario(static_cast<std::size_t>(d_A), static_cast<std::size_t>(d_B),
                                               dt, steps, rng, cap);
          s.name = "bounds_sampler";
          s.checks.push_back({"sampled_mutual_information_bound",
                              "zero violations of I_AB <= 2 ln d_A + 1e-9 over all trials and grid points",
                              [report](const ScenarioRun&) {
                                return CheckOutcome{report->mutual_information_violations == 0,
                                                    report->max_mutual_information,
                                                    2.0 * ln(report->d_A) + kBoundSlack};
                              }});
          s.checks.push_back({"sampled_entropy_change_bound",
                              "zero violations of |Delta S_B| <= 3 ln d_A + 1e-9 over all trials and grid points",
                              [report](const ScenarioRun&) {
                                return CheckOutcome{report->entropy_change_violations == 0,
                                                    report->max_entropy_change,
                                                    3.0 * ln(report->d_A) + kBoundSlack};
                              }});
          return s;
        }});
  }
  return r;
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_registry() {
  static const std::vector<ScenarioInfo> registry = build_registry();
  return registry;
}

const ScenarioInfo& find_scenario(std::string_view name) {
  for (const auto& info : scenario_registry()) {
    if (info.name == name) return info;
  }
  throw InvalidArgument("unknown scenario '" + std::string(name) + "'");
}

}  // namespace entroledger
