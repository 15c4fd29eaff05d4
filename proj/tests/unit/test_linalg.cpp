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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "entroledger/error.hpp"
#include "entroledger/linalg.hpp"
#include "oracles.hpp"

namespace el = entroledger;

namespace {

double max_abs(const el::ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

TEST(Eigh, DiagonalSortsAscending) {
  el::ComplexMatrix h = el::ComplexMatrix::Zero(3, 3);
  h(0, 0) = 3.0;
  h(1, 1) = 1.0;
  h(2, 2) = 2.0;
  const auto s = el::eigh(h);
  EXPECT_NEAR(s.eigenvalues[0], 1.0, 1e-14);
  EXPECT_NEAR(s.eigenvalues[1], 2.0, 1e-14);
  EXPECT_NEAR(s.eigenvalues[2], 3.0, 1e-14);
  // Permutation eigenvectors: each column has a single unit-modulus entry.
  EXPECT_NEAR(std::abs(s.eigenvectors(1, 0)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(s.eigenvectors(2, 1)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(s.eigenvectors(0, 2)), 1.0, 1e-14);
}

TEST(Eigh, PauliX) {
  el::ComplexMatrix x = el::ComplexMatrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  const auto s = el::eigh(x);
  EXPECT_NEAR(s.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(s.eigenvalues[1], 1.0, 1e-14);
}

TEST(Eigh, RandomReconstructionAndUnitarity) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = oracle::random_hermitian(8, rng);
    const auto s = el::eigh(h);
    const el::ComplexMatrix rebuilt = s.eigenvectors * s.eigenvalues.cast<el::Complex>().asDiagonal() *
                                      s.eigenvectors.adjoint();
    EXPECT_LT((rebuilt - h).norm() / h.norm(), 1e-9);
    EXPECT_LT(max_abs(s.eigenvectors.adjoint() * s.eigenvectors - el::identity(8)), 1e-10);
    for (Eigen::Index i = 1; i < 8; ++i) EXPECT_LE(s.eigenvalues[i - 1], s.eigenvalues[i]);
  }
}

TEST(Eigh, Deterministic) {
  std::mt19937_64 rng(3);
  const auto h = oracle::random_hermitian(6, rng);
  const auto a = el::eigh(h);
  const auto b = el::eigh(h);
  EXPECT_EQ(a.eigenvalues, b.eigenvalues);
  EXPECT_EQ(a.eigenvectors, b.eigenvectors);
}

TEST(Eigh, RejectsNonHermitian) {
  el::ComplexMatrix m = el::ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW((void)el::eigh(m), el::NotHermitian);
  m(1, 0) = 1.0 + 5e-11;  // within tolerance
  EXPECT_NO_THROW((void)el::eigh(m));
}

TEST(MatrixFunction, IdentityFunctionReproducesInput) {
  std::mt19937_64 rng(11);
  const auto h = oracle::random_hermitian(5, rng);
  const auto out = el::matrix_function(h, [](double x) { return el::Complex(x); });
  EXPECT_LT(max_abs(out - h), 1e-12);
}

TEST(MatrixFunction, PropagatorMatchesTaylorOracle) {
  std::mt19937_64 rng(12);
  const auto h = oracle::random_hermitian(6, rng);
  const double t = 0.7;
  const auto u = el::matrix_function(h, [t](double e) { return std::exp(el::Complex(0.0, -t * e)); });
  EXPECT_LT(max_abs(u - oracle::propagator(h, t)), 1e-11);
  EXPECT_LT(max_abs(u * u.adjoint() - el::identity(6)), 1e-12);
}

TEST(MatrixFunction, ExponentialOfZeroIsIdentity) {
  const auto out = el::matrix_function(el::ComplexMatrix::Zero(4, 4), [](double e) { return std::exp(el::Complex(-e)); });
  EXPECT_LT(max_abs(out - el::identity(4)), 1e-15);
}

TEST(Kron, MatchesFourIndexOracle) {
  const el::ComplexMatrix a = el::ComplexMatrix::Random(2, 3);
  const el::ComplexMatrix b = el::ComplexMatrix::Random(4, 2);
  EXPECT_EQ(el::kron(a, b), oracle::kron(a, b));
}

TEST(Kron, IdentityFactors) {
  EXPECT_EQ(el::kron(el::identity(2), el::identity(3)), el::identity(6));
}

TEST(PartialTrace, MatchesIndexSumOracle) {
  std::mt19937_64 rng(21);
  for (const auto& [dA, dB] : {std::pair<std::size_t, std::size_t>{2, 3}, {3, 2}, {4, 4}, {1, 5}}) {
    const auto m = oracle::random_state(dA * dB, rng);
    const el::BipartiteSpace space{dA, dB};
    EXPECT_LT(max_abs(el::partial_trace(m, space, el::Subsystem::A) - oracle::trace_out_B(m, dA, dB)), 1e-15);
    EXPECT_LT(max_abs(el::partial_trace(m, space, el::Subsystem::B) - oracle::trace_out_A(m, dA, dB)), 1e-15);
  }
}

TEST(PartialTrace, ProductStateFactorizes) {
  std::mt19937_64 rng(22);
  const auto a = oracle::random_state(2, rng);
  const auto b = oracle::random_state(3, rng);
  const el::BipartiteSpace space{2, 3};
  const auto ab = el::kron(a, b);
  EXPECT_LT(max_abs(el::partial_trace(ab, space, el::Subsystem::A) - a), 1e-14);
  EXPECT_LT(max_abs(el::partial_trace(ab, space, el::Subsystem::B) - b), 1e-14);
}

TEST(PartialTrace, PreservesTraceProperty) {
  for (int trial = 0; trial < 10; ++trial) {
    const el::ComplexMatrix m = el::ComplexMatrix::Random(12, 12);
    const el::BipartiteSpace space{3, 4};
    EXPECT_NEAR(std::abs(el::partial_trace(m, space, el::Subsystem::A).trace() - m.trace()), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(el::partial_trace(m, space, el::Subsystem::B).trace() - m.trace()), 0.0, 1e-12);
  }
}

TEST(PartialTrace, RejectsWrongDimension) {
  EXPECT_THROW((void)el::partial_trace(el::identity(5), el::BipartiteSpace{2, 3}, el::Subsystem::A),
               el::DimensionMismatch);
}

TEST(Linalg, TraceOfProduct) {
  std::mt19937_64 rng(30);
  const auto a = oracle::random_hermitian(4, rng);
  const auto b = oracle::random_hermitian(4, rng);
  EXPECT_NEAR(std::abs(el::trace_of_product(a, b) - (a * b).trace()), 0.0, 1e-13);
}

TEST(Linalg, BipartiteIndexConvention) {
  const el::BipartiteSpace space{3, 4};
  EXPECT_EQ(space.dim(), 12u);
  EXPECT_EQ(space.index(2, 1), 9u);
}

}  // namespace
