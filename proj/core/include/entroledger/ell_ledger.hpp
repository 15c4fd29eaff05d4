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

#ifndef ENTROLEDGER_ELL_LEDGER_HPP
#define ENTROLEDGER_ELL_LEDGER_HPP

// Entropy-matched temperature bookkeeping.
//
// The inverse temperature of B is the beta >= 0 for which the Gibbs state
// w_B(beta) has the same von Neumann entropy as rho_B(t). The heat rate is
// Qdot_B = -dS_B/dt / beta_B, and the Clausius functional is
// Sigma(t) = Delta S_A - int_0^t beta_B Qdot_B dt'.

#include <cstddef>
#include <string_view>
#include <vector>

#include "entroledger/dynamics.hpp"
#include "entroledger/qstate.hpp"

namespace entroledger {

/// Entropy residual guaranteed for Finite solutions.
inline constexpr double kBetaResidualTolerance = 1e-10;
/// Upper end of the bracket search before the infinite-beta cases apply.
inline constexpr double kBetaCeiling = 1e12;

enum class BetaKind { Finite, ZeroTemperature, NoSolution };

struct BetaSolution {
  BetaKind kind = BetaKind::NoSolution;
  double beta = 0.0;      // +inf for ZeroTemperature, NaN for NoSolution
  double residual = 0.0;  // entropy mismatch in nats
  bool degenerate = false;    // flat matching curve, leftmost root returned
  bool non_monotone = false;  // matching curve failed the monotonicity pre-check

  [[nodiscard]] bool is_finite() const noexcept { return kind == BetaKind::Finite; }
};

/// Solves S(w(beta)) = s_target for beta in [0, inf] by bracket doubling and
/// bisection. Throws TargetOutOfRange if s_target > ln d + 1e-9 or < 0.
[[nodiscard]] BetaSolution solve_beta_from_entropy(const RealVector& ascending_energies,
                                                   double s_target);
[[nodiscard]] BetaSolution solve_beta_from_entropy(const HermitianOperator& h_B, double s_target);

/// Central difference of a uniformly sampled series, one-sided at the ends.
[[nodiscard]] double time_derivative(const std::vector<double>& series, double dt, std::size_t k);

enum class HeatRateStatus {
  Defined,
  ZeroTemperature,  // beta = +inf; value is the limit 0
  Undefined,        // no beta solution, or beta = 0 with nonzero dS_B/dt
};

struct HeatRate {
  double value = 0.0;  // NaN when Undefined
  HeatRateStatus status = HeatRateStatus::Undefined;
};

[[nodiscard]] HeatRate heat_rate(double entropy_rate, const BetaSolution& beta);

/// Qdot_B(t_k) = -dS_B/dt(t_k) / beta_B(t_k).
[[nodiscard]] HeatRate ell_heat_rate(const Trajectory& traj, std::size_t k);

struct ClausiusPoint {
  double telescoped = 0.0;  // Delta S_A + Delta S_B, the reference value
  double quadrature = 0.0;  // trapezoid rule on beta_B * Qdot_B
  bool quadrature_valid = false;
};

[[nodiscard]] std::vector<ClausiusPoint> clausius_functional(const Trajectory& traj);

enum class FixedBetaKind { Finite, Divergent, Indeterminate, NoSolution };

struct FixedBetaPoint {
  FixedBetaKind kind = FixedBetaKind::Finite;
  double value = 0.0;      // NaN unless Finite
  int divergence_sign = 0; // +1 / -1 for Divergent
  double heat = 0.0;       // Q_B(t) = int Qdot_B dt' (trapezoid)
  bool heat_valid = false;
};

/// Sigma_fix(t) = Delta S_A - beta_B(0) Q_B(t).
[[nodiscard]] std::vector<FixedBetaPoint> fixed_beta_functional(const Trajectory& traj);

/// Q_energy(t_k) = -(Tr[H_B rho_B(t_k)] - Tr[H_B rho_B(0)]).
[[nodiscard]] std::vector<double> energy_heat(const Trajectory& traj);

struct EllRow {
  double t = 0.0;
  double s_A = 0.0;
  double s_B = 0.0;
  double s_AB = 0.0;
  double i_AB = 0.0;
  BetaSolution beta_B;
  HeatRate qdot_B;
  ClausiusPoint clausius;
  FixedBetaPoint fixed_beta;
  double q_energy = 0.0;
};

/// Every quantity above on every grid point, sharing one beta solve per step.
[[nodiscard]] std::vector<EllRow> compute_ell_ledger(const Trajectory& traj);

[[nodiscard]] std::string_view to_string(BetaKind kind) noexcept;
[[nodiscard]] std::string_view to_string(FixedBetaKind kind) noexcept;
/// CSV label of a solution, including degenerate / non_monotone flags.
[[nodiscard]] std::string_view kind_label(const BetaSolution& s) noexcept;

}  // namespace entroledger

#endif  // ENTROLEDGER_ELL_LEDGER_HPP
