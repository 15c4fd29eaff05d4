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

#include "entroledger/obs_ledger.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "entroledger/error.hpp"

namespace entroledger {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kTargetSlack = 1e-9;
constexpr double kTopOfCurve = 1e-13;
constexpr double kMonotoneSlack = 1e-12;
constexpr double kFlatness = 1e-12;
constexpr int kMaxBisections = 400;

void require_compatible(const CoarseGraining& cg, std::size_t dim, const char* which) {
  if (cg.dim() != dim) {
    std::ostringstream msg;
    msg << "coarse-graining for subsystem " << which << " has dimension " << cg.dim() << ", expected "
        << dim;
    throw IncompatibleDimension(msg.str());
  }
}

}  // namespace

std::vector<double> sum_entropy_second_law(const Trajectory& traj) {
  const auto& s_A = traj.entropy_A();
  const auto& s_B = traj.entropy_B();
  std::vector<double> out(traj.size());
  for (std::size_t k = 0; k < traj.size(); ++k) out[k] = (s_A[k] - s_A[0]) + (s_B[k] - s_B[0]);
  return out;
}

std::vector<ObsPoint> observational_entropy_production(const Trajectory& traj, const CoarseGraining& cg_A,
                                                       const CoarseGraining& cg_B) {
  require_compatible(cg_A, traj.space().d_A, "A");
  require_compatible(cg_B, traj.space().d_B, "B");
  std::vector<ObsPoint> out(traj.size());
  for (std::size_t k = 0; k < traj.size(); ++k) {
    out[k].s_obs_A = observational_entropy(traj.reduced_A(k), cg_A);
    out[k].s_obs_B = observational_entropy(traj.reduced_B(k), cg_B);
    out[k].sigma_obs = (out[k].s_obs_A - out[0].s_obs_A) + (out[k].s_obs_B - out[0].s_obs_B);
  }
  return out;
}

ObservationalGibbsCurve::ObservationalGibbsCurve(const HermitianOperator& h, const CoarseGraining& cg)
    : volumes_(cg.volumes()) {
  require_compatible(cg, h.dim(), "B");
  const auto eig = h.spectrum();
  energies_ = eig.eigenvalues;
  const auto levels = eig.eigenvectors.cols();
  overlaps_.resize(static_cast<Eigen::Index>(cg.size()), levels);
  for (std::size_t i = 0; i < cg.size(); ++i) {
    const ComplexMatrix projected = cg.isometries()[i].adjoint() * eig.eigenvectors;
    overlaps_.row(static_cast<Eigen::Index>(i)) = projected.colwise().squaredNorm();
  }
}

double ObservationalGibbsCurve::operator()(double beta) const {
  // Within a degenerate level the Gibbs weights are equal, so the sum over
  // that level does not depend on the eigenvector basis chosen there.
  const RealVector w = gibbs_populations(energies_, beta);
  const RealVector p = overlaps_ * w;
  return observational_entropy(std::vector<double>(p.data(), p.data() + p.size()), volumes_);
}

BetaSolution solve_beta_obs(const ObservationalGibbsCurve& curve, double target) {
  const double ln_d = std::log(static_cast<double>(curve.dim()));
  if (!(target >= -kTargetSlack) || target > ln_d + kTargetSlack) {
    std::ostringstream msg;
    msg << "observational entropy target " << target << " outside [0, ln " << curve.dim() << "]";
    throw TargetOutOfRange(msg.str());
  }
  target = std::clamp(target, 0.0, ln_d);

  double hi = 1.0;
  while (curve(hi) >= target && hi <= kBetaCeiling) hi *= 2.0;

  std::vector<double> samples(kMonotonicitySamples);
  for (int j = 0; j < kMonotonicitySamples; ++j) {
    samples[static_cast<std::size_t>(j)] = curve(hi * j / (kMonotonicitySamples - 1));
  }
  for (std::size_t j = 1; j < samples.size(); ++j) {
    if (samples[j] > samples[j - 1] + kMonotoneSlack) {
      return BetaSolution{BetaKind::NoSolution, kNaN, kNaN, false, true};
    }
  }
  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  const bool flat = *hi_it - *lo_it <= kFlatness;

  const double f0 = samples.front();
  if (target >= f0 - kTopOfCurve) {
    return BetaSolution{BetaKind::Finite, 0.0, std::abs(f0 - target), flat, false};
  }
  // Same classification against the beta -> infinity limit as the ELL solver.
  const double f_inf = curve(kInfiniteBeta);
  if (target < f_inf - kBetaResidualTolerance) {
    return BetaSolution{BetaKind::NoSolution, kNaN, f_inf - target, flat, false};
  }
  if (target <= f_inf + kBetaResidualTolerance || hi > kBetaCeiling) {
    return BetaSolution{BetaKind::ZeroTemperature, kInfiniteBeta, std::abs(target - f_inf), flat, false};
  }

  double lo = hi > 1.0 ? 0.5 * hi : 0.0;
  for (int it = 0; it < kMaxBisections; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (curve(mid) >= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double r_lo = std::abs(curve(lo) - target);
  const double r_hi = std::abs(curve(hi) - target);
  const double beta = r_lo <= r_hi ? lo : hi;
  return BetaSolution{BetaKind::Finite, beta, std::min(r_lo, r_hi), false, false};
}

BetaSolution solve_beta_obs(const HermitianOperator& h_B, const DensityMatrix& rho_B,
                            const CoarseGraining& cg_B) {
  if (rho_B.dim() != h_B.dim()) throw DimensionMismatch("solve_beta_obs: state and Hamiltonian differ");
  return solve_beta_obs(ObservationalGibbsCurve(h_B, cg_B), observational_entropy(rho_B, cg_B));
}

std::vector<ObsRow> compute_obs_ledger(const Trajectory& traj, const CoarseGraining& cg_A,
                                       const CoarseGraining& cg_B) {
  const auto sums = sum_entropy_second_law(traj);
  const auto obs = observational_entropy_production(traj, cg_A, cg_B);
  const ObservationalGibbsCurve curve(traj.model().h_B, cg_B);
  std::vector<ObsRow> rows(traj.size());
  for (std::size_t k = 0; k < traj.size(); ++k) {
    rows[k].delta_sum_vn = sums[k];
    rows[k].obs = obs[k];
    rows[k].beta_obs_B = solve_beta_obs(curve, obs[k].s_obs_B);
  }
  return rows;
}

}  // namespace entroledger
