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

#include "entroledger/ell_ledger.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "entroledger/error.hpp"

namespace entroledger {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kTargetSlack = 1e-9;
// Targets this close to ln d are matched by beta = 0.
constexpr double kTopOfCurve = 1e-13;
constexpr double kHeatThreshold = 1e-12;
constexpr int kMaxBisections = 400;

BetaSolution finite(double beta, double residual) {
  return BetaSolution{BetaKind::Finite, beta, residual, false, false};
}

std::vector<BetaSolution> solve_all(const Trajectory& traj) {
  const RealVector energies = traj.model().h_B.eigenvalues();
  std::vector<BetaSolution> out;
  out.reserve(traj.size());
  for (const double s : traj.entropy_B()) out.push_back(solve_beta_from_entropy(energies, s));
  return out;
}

std::vector<HeatRate> heat_rates(const Trajectory& traj, const std::vector<BetaSolution>& betas) {
  std::vector<HeatRate> out;
  out.reserve(traj.size());
  for (std::size_t k = 0; k < traj.size(); ++k) {
    out.push_back(heat_rate(time_derivative(traj.entropy_B(), traj.dt(), k), betas[k]));
  }
  return out;
}

std::vector<ClausiusPoint> clausius_from(const Trajectory& traj, const std::vector<BetaSolution>& betas,
                                         const std::vector<HeatRate>& rates) {
  const auto& s_A = traj.entropy_A();
  const auto& s_B = traj.entropy_B();
  std::vector<ClausiusPoint> out(traj.size());
  double integral = 0.0;
  bool valid = true;
  double previous = 0.0;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    auto& p = out[k];
    p.telescoped = (s_A[k] - s_A[0]) + (s_B[k] - s_B[0]);

    // The quadrature is only defined while beta_B * Qdot_B is a finite product.
    const bool defined = rates[k].status == HeatRateStatus::Defined;
    const double integrand = defined ? betas[k].beta * rates[k].value : kNaN;
    valid = valid && defined;
    if (valid && k > 0) integral += 0.5 * traj.dt() * (previous + integrand);
    previous = integrand;

    p.quadrature_valid = valid;
    p.quadrature = valid ? (s_A[k] - s_A[0]) - integral : kNaN;
  }
  return out;
}

std::vector<FixedBetaPoint> fixed_beta_from(const Trajectory& traj, const std::vector<BetaSolution>& betas,
                                            const std::vector<HeatRate>& rates) {
  const auto& s_A = traj.entropy_A();
  const BetaSolution& beta0 = betas.front();
  std::vector<FixedBetaPoint> out(traj.size());

  double heat = 0.0;
  bool heat_valid = true;
  FixedBetaKind broken_kind = FixedBetaKind::Indeterminate;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    auto& p = out[k];
    if (heat_valid && rates[k].status == HeatRateStatus::Undefined) {
      heat_valid = false;
      broken_kind = betas[k].kind == BetaKind::NoSolution ? FixedBetaKind::NoSolution
                                                          : FixedBetaKind::Indeterminate;
    }
    if (heat_valid && k > 0) heat += 0.5 * traj.dt() * (rates[k - 1].value + rates[k].value);
    p.heat_valid = heat_valid;
    p.heat = heat_valid ? heat : kNaN;
    p.value = kNaN;

    const double delta_s_A = s_A[k] - s_A[0];
    if (beta0.kind == BetaKind::NoSolution) {
      p.kind = FixedBetaKind::NoSolution;
    } else if (!heat_valid) {
      p.kind = broken_kind;
    } else if (beta0.kind == BetaKind::ZeroTemperature) {
      if (std::abs(heat) > kHeatThreshold) {
        p.kind = FixedBetaKind::Divergent;
        p.divergence_sign = heat > 0.0 ? -1 : +1;
      } else {
        p.kind = FixedBetaKind::Indeterminate;  // infinity times zero
      }
    } else {
      p.kind = FixedBetaKind::Finite;
      p.value = delta_s_A - beta0.beta * heat;
    }
  }
  return out;
}

}  // namespace

BetaSolution solve_beta_from_entropy(const RealVector& energies, double s_target) {
  const auto d = energies.size();
  if (d == 0) throw InvalidArgument("empty spectrum");
  const double ln_d = std::log(static_cast<double>(d));
  if (!(s_target >= -kTargetSlack) || s_target > ln_d + kTargetSlack) {
    std::ostringstream msg;
    msg << "entropy target " << s_target << " outside [0, ln " << d << "]";
    throw TargetOutOfRange(msg.str());
  }
  s_target = std::clamp(s_target, 0.0, ln_d);

  const std::size_t g0 = ground_degeneracy(energies);
  const double ln_g0 = std::log(static_cast<double>(g0));

  // Below the beta -> infinity limit there is no Gibbs state with this entropy.
  if (s_target < ln_g0 - kBetaResidualTolerance) {
    return BetaSolution{BetaKind::NoSolution, kNaN, ln_g0 - s_target, false, false};
  }
  if (g0 == static_cast<std::size_t>(d)) {
    // H proportional to identity: the curve is flat at ln d.
    return BetaSolution{BetaKind::Finite, 0.0, std::abs(ln_d - s_target), true, false};
  }
  if (s_target <= ln_g0 + kBetaResidualTolerance) {
    return BetaSolution{BetaKind::ZeroTemperature, kInfiniteBeta, std::abs(s_target - ln_g0), false,
                        false};
  }
  if (s_target >= ln_d - kTopOfCurve) return finite(0.0, ln_d - s_target);

  double lo = 0.0;
  double hi = 1.0;
  while (gibbs_entropy(energies, hi) >= s_target) {
    lo = hi;
    hi *= 2.0;
    if (hi > kBetaCeiling) {
      return BetaSolution{BetaKind::ZeroTemperature, kInfiniteBeta, std::abs(s_target - ln_g0), false,
                          false};
    }
  }
  // Invariant: S(lo) >= target > S(hi).
  for (int it = 0; it < kMaxBisections; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (gibbs_entropy(energies, mid) >= s_target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double r_lo = std::abs(gibbs_entropy(energies, lo) - s_target);
  const double r_hi = std::abs(gibbs_entropy(energies, hi) - s_target);
  return r_lo <= r_hi ? finite(lo, r_lo) : finite(hi, r_hi);
}

BetaSolution solve_beta_from_entropy(const HermitianOperator& h_B, double s_target) {
  return solve_beta_from_entropy(h_B.eigenvalues(), s_target);
}

double time_derivative(const std::vector<double>& series, double dt, std::size_t k) {
  const std::size_t n = series.size();
  if (n < 2) throw InvalidArgument("time_derivative needs at least two samples");
  if (k >= n) throw InvalidArgument("time_derivative index out of range");
  if (k == 0) return (series[1] - series[0]) / dt;
  if (k == n - 1) return (series[n - 1] - series[n - 2]) / dt;
  return (series[k + 1] - series[k - 1]) / (2.0 * dt);
}

HeatRate heat_rate(double entropy_rate, const BetaSolution& beta) {
  switch (beta.kind) {
    case BetaKind::ZeroTemperature:
      return {0.0, HeatRateStatus::ZeroTemperature};
    case BetaKind::NoSolution:
      return {kNaN, HeatRateStatus::Undefined};
    case BetaKind::Finite:
      break;
  }
  if (beta.beta > 0.0) return {-entropy_rate / beta.beta, HeatRateStatus::Defined};
  return {kNaN, HeatRateStatus::Undefined};
}

HeatRate ell_heat_rate(const Trajectory& traj, std::size_t k) {
  const auto beta = solve_beta_from_entropy(traj.model().h_B, traj.entropy_B().at(k));
  return heat_rate(time_derivative(traj.entropy_B(), traj.dt(), k), beta);
}

std::vector<ClausiusPoint> clausius_functional(const Trajectory& traj) {
  const auto betas = solve_all(traj);
  return clausius_from(traj, betas, heat_rates(traj, betas));
}

std::vector<FixedBetaPoint> fixed_beta_functional(const Trajectory& traj) {
  const auto betas = solve_all(traj);
  return fixed_beta_from(traj, betas, heat_rates(traj, betas));
}

std::vector<double> energy_heat(const Trajectory& traj) {
  const auto& h_B = traj.model().h_B;
  std::vector<double> out(traj.size());
  const double e0 = traj.reduced_B(0).expectation(h_B);
  for (std::size_t k = 0; k < traj.size(); ++k) {
    out[k] = e0 - traj.reduced_B(k).expectation(h_B);
  }
  return out;
}

std::vector<EllRow> compute_ell_ledger(const Trajectory& traj) {
  const auto betas = solve_all(traj);
  const auto rates = heat_rates(traj, betas);
  const auto clausius = clausius_from(traj, betas, rates);
  const auto fixed = fixed_beta_from(traj, betas, rates);
  const auto q_energy = energy_heat(traj);

  std::vector<EllRow> rows(traj.size());
  for (std::size_t k = 0; k < traj.size(); ++k) {
    auto& r = rows[k];
    r.t = traj.time(k);
    r.s_A = traj.entropy_A()[k];
    r.s_B = traj.entropy_B()[k];
    r.s_AB = traj.entropy_AB()[k];
    r.i_AB = r.s_A + r.s_B - r.s_AB;
    r.beta_B = betas[k];
    r.qdot_B = rates[k];
    r.clausius = clausius[k];
    r.fixed_beta = fixed[k];
    r.q_energy = q_energy[k];
  }
  return rows;
}

std::string_view to_string(BetaKind kind) noexcept {
  switch (kind) {
    case BetaKind::Finite: return "finite";
    case BetaKind::ZeroTemperature: return "zero_temperature";
    case BetaKind::NoSolution: return "no_solution";
  }
  return "unknown";
}

std::string_view to_string(FixedBetaKind kind) noexcept {
  switch (kind) {
    case FixedBetaKind::Finite: return "finite";
    case FixedBetaKind::Divergent: return "divergent";
    case FixedBetaKind::Indeterminate: return "indeterminate";
    case FixedBetaKind::NoSolution: return "no_solution";
  }
  return "unknown";
}

std::string_view kind_label(const BetaSolution& s) noexcept {
  if (s.non_monotone) return "non_monotone";
  if (s.degenerate) return "degenerate";
  return to_string(s.kind);
}

}  // namespace entroledger
