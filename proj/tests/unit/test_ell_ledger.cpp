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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "entroledger/dynamics.hpp"
#include "entroledger/ell_ledger.hpp"
#include "entroledger/error.hpp"
#include "oracles.hpp"

namespace el = entroledger;

namespace {

const double kLn2 = std::numbers::ln2;

el::CompositeModel random_model(std::size_t dA, std::size_t dB, std::mt19937_64& rng, double coupling) {
  return el::CompositeModel::assemble(el::HermitianOperator(oracle::random_hermitian(dA, rng)),
                                      el::HermitianOperator(oracle::random_hermitian(dB, rng)),
                                      el::HermitianOperator(coupling * oracle::random_hermitian(dA * dB, rng)));
}

el::Trajectory thermal_b_run(double dt, std::size_t steps, std::uint64_t seed = 17) {
  std::mt19937_64 rng(seed);
  const auto m = random_model(2, 3, rng, 0.5);
  const auto rho_A = el::DensityMatrix(oracle::random_state(2, rng));
  const auto rho_B = el::gibbs_state(m.h_B, 1.0).state;
  return el::evolve(m, el::product_state(rho_A, rho_B), dt, steps);
}

el::Trajectory rabi_run(double g, double dt, std::size_t steps) {
  el::ComplexMatrix v = el::ComplexMatrix::Zero(4, 4);
  v(1, 2) = v(2, 1) = g;
  const auto m = el::CompositeModel::assemble(el::HermitianOperator::diagonal({0.0, 1.0}),
                                              el::HermitianOperator::diagonal({0.0, 1.0}), el::HermitianOperator(v));
  el::ComplexVector psi = el::ComplexVector::Zero(4);
  psi(2) = 1.0;
  return el::evolve(m, el::DensityMatrix::pure(psi), dt, steps);
}

// --- solve_beta_from_entropy -----------------------------------------------------

TEST(SolveBeta, MaximalEntropyGivesInfiniteTemperature) {
  const auto s = el::solve_beta_from_entropy(el::HermitianOperator::diagonal({0.0, 1.0}), kLn2);
  EXPECT_EQ(s.kind, el::BetaKind::Finite);
  EXPECT_EQ(s.beta, 0.0);
}

TEST(SolveBeta, PureStateIsZeroTemperatureForEveryLevel) {
  const auto h = el::HermitianOperator::diagonal({0.0, 0.3, 1.1, 2.0});
  for (int level = 0; level < 4; ++level) {
    std::vector<double> pops(4, 0.0);
    pops[static_cast<std::size_t>(level)] = 1.0;
    const double s = el::von_neumann_entropy(el::DensityMatrix::diagonal(pops));
    EXPECT_EQ(el::solve_beta_from_entropy(h, s).kind, el::BetaKind::ZeroTemperature) << "level " << level;
  }
}

TEST(SolveBeta, DegenerateGroundHasNoSolutionBelowLogG0) {
  const auto h = el::HermitianOperator::diagonal({0.0, 0.0, 1.0});
  EXPECT_EQ(el::solve_beta_from_entropy(h, 0.5).kind, el::BetaKind::NoSolution);
  EXPECT_EQ(el::solve_beta_from_entropy(h, kLn2).kind, el::BetaKind::ZeroTemperature);
  EXPECT_EQ(el::solve_beta_from_entropy(h, kLn2 + 0.05).kind, el::BetaKind::Finite);
  const auto h3 = el::HermitianOperator::diagonal({0.0, 0.0, 0.0, 1.0});
  EXPECT_EQ(el::solve_beta_from_entropy(h3, 1.0).kind, el::BetaKind::NoSolution);  // ln 3 = 1.0986
}

TEST(SolveBeta, QubitMatchesDenseScanOracle) {
  for (const double target : {0.05, 0.2, 0.5, 0.65}) {
    const auto s = el::solve_beta_from_entropy(el::HermitianOperator::diagonal({0.0, 1.0}), target);
    ASSERT_EQ(s.kind, el::BetaKind::Finite);
    EXPECT_LE(s.residual, 1e-10);
    EXPECT_NEAR(oracle::binary_entropy(1.0 / (1.0 + std::exp(s.beta))), target, 1e-10);
    EXPECT_NEAR(s.beta, oracle::qubit_beta_for_entropy(target), 1e-7 * std::max(1.0, s.beta));
  }
}

TEST(SolveBeta, ResidualWithinToleranceProperty) {
  std::mt19937_64 rng(30);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const el::HermitianOperator h(oracle::random_hermitian(6, rng));
    const double target = u(rng) * std::log(6.0);
    const auto s = el::solve_beta_from_entropy(h, target);
    ASSERT_EQ(s.kind, el::BetaKind::Finite);
    EXPECT_LE(std::abs(el::gibbs_entropy_curve(h, s.beta) - target), 1e-10);
  }
}

TEST(SolveBeta, MonotoneInTargetProperty) {
  std::mt19937_64 rng(31);
  const el::HermitianOperator h(oracle::random_hermitian(5, rng));
  double previous = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 100; ++i) {
    const auto s = el::solve_beta_from_entropy(h, std::log(5.0) * i / 100.0);
    ASSERT_EQ(s.kind, el::BetaKind::Finite);
    EXPECT_LE(s.beta, previous);
    previous = s.beta;
  }
}

TEST(SolveBeta, TargetOutOfRange) {
  const auto h = el::HermitianOperator::diagonal({0.0, 1.0});
  EXPECT_THROW((void)el::solve_beta_from_entropy(h, kLn2 + 1e-6), el::TargetOutOfRange);
  EXPECT_THROW((void)el::solve_beta_from_entropy(h, -0.1), el::TargetOutOfRange);
  EXPECT_NO_THROW((void)el::solve_beta_from_entropy(h, kLn2 + 5e-10));
}

TEST(SolveBeta, FlatSpectrumIsFlaggedDegenerate) {
  const auto s = el::solve_beta_from_entropy(el::HermitianOperator::diagonal({2.0, 2.0, 2.0}), std::log(3.0));
  EXPECT_EQ(s.kind, el::BetaKind::Finite);
  EXPECT_EQ(s.beta, 0.0);
  EXPECT_TRUE(s.degenerate);
  EXPECT_EQ(el::kind_label(s), "degenerate");
}

// --- heat rate -----------------------------------------------------------------------

TEST(HeatRate, NoInteractionGivesZero) {
  std::mt19937_64 rng(40);
  const auto m = random_model(2, 3, rng, 0.0);
  const auto rho0 = el::product_state(el::DensityMatrix(oracle::random_state(2, rng)),
                                      el::DensityMatrix(oracle::random_state(3, rng)));
  const auto traj = el::evolve(m, rho0, 0.1, 20);
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const auto q = el::ell_heat_rate(traj, k);
    ASSERT_EQ(q.status, el::HeatRateStatus::Defined);
    EXPECT_NEAR(q.value, 0.0, 1e-9);
  }
}

TEST(HeatRate, SignForcedByDefinition) {
  const el::BetaSolution beta{el::BetaKind::Finite, 2.0, 0.0, false, false};
  EXPECT_LT(el::heat_rate(0.3, beta).value, 0.0);
  EXPECT_GT(el::heat_rate(-0.3, beta).value, 0.0);
  const el::BetaSolution zero{el::BetaKind::ZeroTemperature, std::numeric_limits<double>::infinity(), 0.0, false,
                              false};
  EXPECT_EQ(el::heat_rate(0.3, zero).status, el::HeatRateStatus::ZeroTemperature);
  EXPECT_EQ(el::heat_rate(0.3, zero).value, 0.0);
  const el::BetaSolution none{el::BetaKind::NoSolution, std::nan(""), 0.0, false, false};
  EXPECT_EQ(el::heat_rate(0.3, none).status, el::HeatRateStatus::Undefined);
}

TEST(HeatRate, RabiMidTrajectoryMatchesFiniteDifferenceOracle) {
  const double g = 0.3;
  const double dt = 0.01;
  const auto traj = rabi_run(g, dt, 200);
  for (const std::size_t k : {37u, 100u, 163u}) {
    const auto q = el::ell_heat_rate(traj, k);
    ASSERT_EQ(q.status, el::HeatRateStatus::Defined);
    // B's populations are (cos^2, sin^2)(gt) reversed; invert its entropy independently.
    const double s_prev = oracle::rabi_subsystem_entropy(g, (k - 1) * dt);
    const double s_next = oracle::rabi_subsystem_entropy(g, (k + 1) * dt);
    const double beta = oracle::qubit_beta_for_entropy(oracle::rabi_subsystem_entropy(g, k * dt));
    const double expected = (s_next - s_prev) / (2.0 * dt * -beta);
    EXPECT_NEAR(q.value, expected, 1e-6 * std::max(1.0, std::abs(expected)));
  }
}

TEST(TimeDerivative, CentralAndOneSided) {
  const std::vector<double> f = {0.0, 1.0, 4.0, 9.0};
  EXPECT_DOUBLE_EQ(el::time_derivative(f, 1.0, 0), 1.0);
  EXPECT_DOUBLE_EQ(el::time_derivative(f, 1.0, 1), 2.0);
  EXPECT_DOUBLE_EQ(el::time_derivative(f, 1.0, 3), 5.0);
}

// --- Clausius functional ------------------------------------------------------------

TEST(Clausius, ZeroAtStartAndEqualsMutualInformation) {
  const auto traj = thermal_b_run(0.05, 200);
  const auto c = el::clausius_functional(traj);
  const auto mi = traj.mutual_information();
  EXPECT_EQ(c.front().telescoped, 0.0);
  for (std::size_t k = 0; k < traj.size(); ++k) {
    EXPECT_NEAR(c[k].telescoped, mi[k], 1e-9);
    EXPECT_GE(c[k].telescoped, -1e-8);
  }
}

TEST(Clausius, QuadratureErrorIsSecondOrder) {
  // Trapezoid over central differences telescopes at the last point, so the
  // discretization error is measured as the maximum over the grid.
  const double horizon = 2.0;
  double errors[2];
  for (int i = 0; i < 2; ++i) {
    const double dt = 0.02 / (1 << i);
    const auto steps = static_cast<std::size_t>(std::lround(horizon / dt));
    const auto c = el::clausius_functional(thermal_b_run(dt, steps));
    errors[i] = 0.0;
    for (const auto& p : c) {
      ASSERT_TRUE(p.quadrature_valid);
      errors[i] = std::max(errors[i], std::abs(p.quadrature - p.telescoped));
    }
  }
  const double ratio = errors[0] / errors[1];
  EXPECT_GT(ratio, 3.0);
  EXPECT_LT(ratio, 5.0);
}

TEST(Clausius, QuadratureExactAtFinalPoint) {
  const auto c = el::clausius_functional(thermal_b_run(0.05, 60));
  EXPECT_NEAR(c.back().quadrature, c.back().telescoped, 1e-12);
}

TEST(Clausius, QuadratureMatchesTrapezoidOracle) {
  const double dt = 0.05;
  const auto traj = thermal_b_run(dt, 80);
  const auto ledger = el::compute_ell_ledger(traj);
  std::vector<double> integrand;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    integrand.push_back(ledger[k].beta_B.beta * ledger[k].qdot_B.value);
  }
  const auto integral = oracle::trapezoid(integrand, dt);
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const double expected = (traj.entropy_A()[k] - traj.entropy_A()[0]) - integral[k];
    EXPECT_NEAR(ledger[k].clausius.quadrature, expected, 1e-12);
  }
}

TEST(Clausius, QuadratureInvalidatedByUndefinedBeta) {
  // B maximally mixed at t = 0: beta = 0 and the ELL heat is undefined there.
  std::mt19937_64 rng(41);
  const auto m = random_model(2, 2, rng, 0.5);
  const auto rho0 = el::product_state(el::DensityMatrix(oracle::random_state(2, rng)),
                                      el::DensityMatrix::maximally_mixed(2));
  const auto c = el::clausius_functional(el::evolve(m, rho0, 0.1, 10));
  for (const auto& p : c) EXPECT_FALSE(p.quadrature_valid);
}

// --- fixed-beta functional -------------------------------------------------------------

TEST(FixedBeta, ZeroAtStartForGibbsB) {
  const auto f = el::fixed_beta_functional(thermal_b_run(0.05, 10));
  EXPECT_EQ(f.front().kind, el::FixedBetaKind::Finite);
  EXPECT_EQ(f.front().value, 0.0);
}

TEST(FixedBeta, MatchesQuadratureOracle) {
  const double dt = 0.05;
  const auto traj = thermal_b_run(dt, 60);
  const auto ledger = el::compute_ell_ledger(traj);
  const double beta0 = ledger.front().beta_B.beta;
  std::vector<double> qdot;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const double sdot = oracle::central_difference(traj.entropy_B(), dt, k);
    const auto beta = el::solve_beta_from_entropy(traj.model().h_B, traj.entropy_B()[k]);
    qdot.push_back(-sdot / beta.beta);
  }
  const auto q = oracle::trapezoid(qdot, dt);
  for (std::size_t k = 0; k < traj.size(); ++k) {
    ASSERT_EQ(ledger[k].fixed_beta.kind, el::FixedBetaKind::Finite);
    EXPECT_NEAR(ledger[k].fixed_beta.heat, q[k], 1e-12);
    EXPECT_NEAR(ledger[k].fixed_beta.value, (traj.entropy_A()[k] - traj.entropy_A()[0]) - beta0 * q[k], 1e-11);
  }
}

TEST(FixedBeta, PureInitialBDiverges) {
  std::mt19937_64 rng(42);
  const auto m = random_model(2, 3, rng, 0.5);
  el::ComplexVector psi = el::ComplexVector::Zero(3);
  psi(1) = 1.0;
  const auto rho0 = el::product_state(el::DensityMatrix(oracle::random_state(2, rng)), el::DensityMatrix::pure(psi));
  const auto f = el::fixed_beta_functional(el::evolve(m, rho0, 0.05, 40));
  EXPECT_EQ(f.front().kind, el::FixedBetaKind::Indeterminate);  // 0 * infinity at t = 0
  bool diverged = false;
  for (const auto& p : f) {
    if (p.heat_valid && std::abs(p.heat) > 1e-12) {
      EXPECT_EQ(p.kind, el::FixedBetaKind::Divergent);
      EXPECT_NE(p.divergence_sign, 0);
      diverged = true;
    }
  }
  EXPECT_TRUE(diverged);
}

TEST(FixedBeta, NoSolutionInitialBeta) {
  // Degenerate ground with S(rho_B) < ln 2.
  std::mt19937_64 rng(43);
  const auto m = el::CompositeModel::assemble(el::HermitianOperator(oracle::random_hermitian(2, rng)),
                                              el::HermitianOperator::diagonal({0.0, 0.0, 1.0}),
                                              el::HermitianOperator(0.2 * oracle::random_hermitian(6, rng)));
  const auto rho0 = el::product_state(el::DensityMatrix::maximally_mixed(2),
                                      el::DensityMatrix::diagonal({0.9, 0.1, 0.0}));
  const auto ledger = el::compute_ell_ledger(el::evolve(m, rho0, 0.05, 10));
  EXPECT_EQ(ledger.front().beta_B.kind, el::BetaKind::NoSolution);
  EXPECT_EQ(ledger.front().qdot_B.status, el::HeatRateStatus::Undefined);
  for (const auto& row : ledger) EXPECT_EQ(row.fixed_beta.kind, el::FixedBetaKind::NoSolution);
}

// --- energy heat ---------------------------------------------------------------------

TEST(EnergyHeat, ZeroWithoutInteractionAndAtStart) {
  std::mt19937_64 rng(44);
  const auto m = random_model(2, 3, rng, 0.0);
  const auto rho0 = el::product_state(el::DensityMatrix(oracle::random_state(2, rng)),
                                      el::DensityMatrix(oracle::random_state(3, rng)));
  for (const double q : el::energy_heat(el::evolve(m, rho0, 0.2, 20))) EXPECT_NEAR(q, 0.0, 1e-12);
  EXPECT_EQ(el::energy_heat(thermal_b_run(0.1, 5)).front(), 0.0);
}

TEST(EnergyHeat, RabiExchangeDrainsA) {
  // A starts excited, B in its ground state: B gains energy, so Q_energy < 0.
  const double g = 0.3;
  const auto traj = rabi_run(g, 0.05, 40);
  const auto q = el::energy_heat(traj);
  for (std::size_t k = 1; k < traj.size(); ++k) {
    const double s = std::sin(g * traj.time(k));
    EXPECT_NEAR(q[k], -s * s, 1e-10);
  }
}

// --- invariance -----------------------------------------------------------------------

TEST(EllLedger, InvariantUnderRotationOfB) {
  std::mt19937_64 rng(45);
  const auto m = random_model(2, 3, rng, 0.5);
  const auto rho_A = el::DensityMatrix(oracle::random_state(2, rng));
  const auto rho_B = el::gibbs_state(m.h_B, 0.8).state;
  const auto u = oracle::propagator(oracle::random_hermitian(3, rng), 0.9);
  const el::ComplexMatrix big_u = oracle::kron(el::identity(2), u);
  const auto rotated = el::CompositeModel::assemble(
      m.h_A, el::HermitianOperator(u * m.h_B.matrix() * u.adjoint()),
      el::HermitianOperator(big_u * m.v_int.matrix() * big_u.adjoint()));
  const el::ComplexMatrix rho_B_rot = u * rho_B.matrix() * u.adjoint();
  const auto phase = std::polar(1.0, 0.4);  // global phase on the propagator is irrelevant

  const auto a = el::compute_ell_ledger(el::evolve(m, el::product_state(rho_A, rho_B), 0.05, 40));
  const auto b = el::compute_ell_ledger(el::evolve(
      rotated, el::product_state(rho_A, el::DensityMatrix(0.5 * (rho_B_rot + rho_B_rot.adjoint()))), 0.05, 40));
  (void)phase;
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_NEAR(a[k].qdot_B.value, b[k].qdot_B.value, 1e-8);
    EXPECT_NEAR(a[k].clausius.telescoped, b[k].clausius.telescoped, 1e-8);
    EXPECT_NEAR(a[k].clausius.quadrature, b[k].clausius.quadrature, 1e-8);
  }
}

TEST(EllLedger, InvariantUnderEnergyShift) {
  // Shifting H_AB by a constant multiplies the propagator by a global phase.
  std::mt19937_64 rng(46);
  const auto m = random_model(2, 3, rng, 0.5);
  const auto shifted = el::CompositeModel::assemble(
      el::HermitianOperator(m.h_A.matrix() + 3.0 * el::identity(2)), m.h_B, m.v_int);
  const auto rho0 = el::product_state(el::DensityMatrix(oracle::random_state(2, rng)),
                                      el::gibbs_state(m.h_B, 1.2).state);
  const auto a = el::compute_ell_ledger(el::evolve(m, rho0, 0.05, 40));
  const auto b = el::compute_ell_ledger(el::evolve(shifted, rho0, 0.05, 40));
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_NEAR(a[k].qdot_B.value, b[k].qdot_B.value, 1e-8);
    EXPECT_NEAR(a[k].clausius.telescoped, b[k].clausius.telescoped, 1e-8);
  }
}

TEST(EllLedger, Labels) {
  EXPECT_EQ(el::to_string(el::BetaKind::ZeroTemperature), "zero_temperature");
  EXPECT_EQ(el::to_string(el::FixedBetaKind::Indeterminate), "indeterminate");
  el::BetaSolution s{el::BetaKind::NoSolution, 0.0, 0.0, false, true};
  EXPECT_EQ(el::kind_label(s), "non_monotone");
}

}  // namespace
