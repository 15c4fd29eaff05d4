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

#ifndef ENTROLEDGER_OBS_LEDGER_HPP
#define ENTROLEDGER_OBS_LEDGER_HPP

// Sum-of-entropies second law and its observational-entropy counterpart,
// including the observational-entropy-matched temperature.

#include <vector>

#include "entroledger/dynamics.hpp"
#include "entroledger/ell_ledger.hpp"
#include "entroledger/qstate.hpp"

namespace entroledger {

/// Number of samples used to verify monotonicity of the matching curve.
inline constexpr int kMonotonicitySamples = 64;

/// Delta S_A(t_k) + Delta S_B(t_k) with von Neumann entropies.
[[nodiscard]] std::vector<double> sum_entropy_second_law(const Trajectory& traj);

struct ObsPoint {
  double s_obs_A = 0.0;
  double s_obs_B = 0.0;
  double sigma_obs = 0.0;  // Delta S_obs_A + Delta S_obs_B
};

/// Throws IncompatibleDimension if a coarse-graining does not match d_A / d_B.
[[nodiscard]] std::vector<ObsPoint> observational_entropy_production(const Trajectory& traj,
                                                                     const CoarseGraining& cg_A,
                                                                     const CoarseGraining& cg_B);

/// beta -> S_obs[w(beta); cg] evaluated from the spectrum of H and the cell
/// overlaps <v_k|Pi_i|v_k>, so that each evaluation costs O(cells * dim).
class ObservationalGibbsCurve {
 public:
  ObservationalGibbsCurve(const HermitianOperator& h, const CoarseGraining& cg);

  [[nodiscard]] double operator()(double beta) const;
  [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(energies_.size()); }

 private:
  RealVector energies_;
  Eigen::MatrixXd overlaps_;  // cells x levels
  std::vector<double> volumes_;
};

/// Finds beta with S_obs[w(beta); cg] = target by bisection on [0, beta_hi]
/// after a 64-point monotonicity check. Throws TargetOutOfRange.
[[nodiscard]] BetaSolution solve_beta_obs(const ObservationalGibbsCurve& curve, double target);
[[nodiscard]] BetaSolution solve_beta_obs(const HermitianOperator& h_B, const DensityMatrix& rho_B,
                                          const CoarseGraining& cg_B);

struct ObsRow {
  double delta_sum_vn = 0.0;
  ObsPoint obs;
  BetaSolution beta_obs_B;
};

[[nodiscard]] std::vector<ObsRow> compute_obs_ledger(const Trajectory& traj, const CoarseGraining& cg_A,
                                                     const CoarseGraining& cg_B);

}  // namespace entroledger

#endif  // ENTROLEDGER_OBS_LEDGER_HPP
