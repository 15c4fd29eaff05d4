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

#ifndef ENTROLEDGER_QSTATE_HPP
#define ENTROLEDGER_QSTATE_HPP

// Quantum states, Hamiltonians, Gibbs states and entropy functionals.
// Units: hbar = k_B = 1, entropies in nats.

#include <cstddef>
#include <limits>
#include <vector>

#include "entroledger/linalg.hpp"

namespace entroledger {

inline constexpr double kInfiniteBeta = std::numeric_limits<double>::infinity();

/// Negative eigenvalues above -kEigenvalueClamp are treated as zero when
/// taking entropies; anything below is an invalid state.
inline constexpr double kEigenvalueClamp = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;

/// Hamiltonian or observable. Stored symmetrized.
class HermitianOperator {
 public:
  explicit HermitianOperator(const ComplexMatrix& m, double tolerance = kHermitianTolerance);

  static HermitianOperator diagonal(const std::vector<double>& entries);
  static HermitianOperator zero(std::size_t dim);

  [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return matrix_; }
  [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  [[nodiscard]] SpectralDecomposition spectrum() const { return eigh(matrix_); }
  [[nodiscard]] RealVector eigenvalues() const { return eigvalsh(matrix_); }
  /// Largest absolute eigenvalue.
  [[nodiscard]] double norm() const;

 private:
  ComplexMatrix matrix_;
};

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
 public:
  /// Validates all invariants; throws NotHermitian or InvalidState.
  explicit DensityMatrix(const ComplexMatrix& m);

  static DensityMatrix pure(const ComplexVector& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);
  static DensityMatrix diagonal(const std::vector<double>& populations);
  /// For results that are valid by construction (unitary conjugation,
  /// partial traces, Gibbs states). Skips the eigenvalue check.
  static DensityMatrix unchecked(ComplexMatrix m);

  [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return matrix_; }
  [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  [[nodiscard]] RealVector eigenvalues() const { return eigvalsh(matrix_); }
  [[nodiscard]] double expectation(const HermitianOperator& op) const;

 private:
  struct UncheckedTag {};
  DensityMatrix(ComplexMatrix m, UncheckedTag) : matrix_(std::move(m)) {}

  ComplexMatrix matrix_;
};

struct GibbsState {
  double beta;  // may be +inf
  HermitianOperator hamiltonian;
  DensityMatrix state;
};

/// Projective coarse-graining {Pi_i}, stored as isometries W_i with
/// Pi_i = W_i W_i^dagger and volume V_i = rank(Pi_i).
class CoarseGraining {
 public:
  /// Validates orthogonality and completeness; throws InvalidCoarseGraining.
  static CoarseGraining from_isometries(std::vector<ComplexMatrix> isometries);
  static CoarseGraining from_projectors(const std::vector<ComplexMatrix>& projectors);
  /// Projectors onto groups of computational basis vectors.
  static CoarseGraining from_index_groups(std::size_t dim,
                                          const std::vector<std::vector<std::size_t>>& groups);
  /// The trivial coarse-graining {I}.
  static CoarseGraining identity(std::size_t dim);
  /// Rank-1 projectors onto the eigenvectors of a Hermitian matrix.
  static CoarseGraining eigenbasis(const ComplexMatrix& hermitian);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t size() const noexcept { return isometries_.size(); }
  [[nodiscard]] const std::vector<ComplexMatrix>& isometries() const noexcept { return isometries_; }
  [[nodiscard]] const std::vector<double>& volumes() const noexcept { return volumes_; }
  [[nodiscard]] ComplexMatrix projector(std::size_t i) const;

  /// p_i = Tr[Pi_i rho] for every cell.
  [[nodiscard]] std::vector<double> probabilities(const ComplexMatrix& rho) const;

 private:
  CoarseGraining(std::size_t dim, std::vector<ComplexMatrix> isometries);

  std::size_t dim_ = 0;
  std::vector<ComplexMatrix> isometries_;
  std::vector<double> volumes_;
};

/// -sum lambda ln lambda with 0 ln 0 = 0. Eigenvalues in [-1e-10, 0) are
/// clamped; lower ones throw InvalidState.
[[nodiscard]] double entropy_of_spectrum(const RealVector& eigenvalues);

[[nodiscard]] double von_neumann_entropy(const DensityMatrix& rho);

[[nodiscard]] DensityMatrix partial_trace(const DensityMatrix& rho, const BipartiteSpace& space,
                                          Subsystem keep);

/// I = S(rho_A) + S(rho_B) - S(rho_AB).
[[nodiscard]] double mutual_information(const DensityMatrix& rho_ab, const BipartiteSpace& space);

/// Tolerance used to decide which eigenvalues belong to the ground level:
/// (lambda_max - lambda_min) * 1e-9 + 1e-12.
[[nodiscard]] double degeneracy_tolerance(const RealVector& ascending_eigenvalues);
[[nodiscard]] std::size_t ground_degeneracy(const RealVector& ascending_eigenvalues);

/// e^{-beta H}/Z via the shifted spectrum; beta = +inf gives the normalized
/// ground-space projector. Throws InvalidArgument for negative or NaN beta.
[[nodiscard]] GibbsState gibbs_state(const HermitianOperator& h, double beta);

/// Occupation probabilities of the Gibbs state in the eigenbasis.
[[nodiscard]] RealVector gibbs_populations(const RealVector& ascending_eigenvalues, double beta);

/// S(w(beta)) from the spectrum of H.
[[nodiscard]] double gibbs_entropy(const RealVector& ascending_eigenvalues, double beta);
[[nodiscard]] double gibbs_entropy_curve(const HermitianOperator& h, double beta);

/// dS(w(beta))/dbeta = -beta Var_{w(beta)}(H).
[[nodiscard]] double gibbs_entropy_derivative(const RealVector& ascending_eigenvalues, double beta);

/// S_obs = sum_i p_i (ln V_i - ln p_i). Verifies S_vN <= S_obs <= ln dim
/// within 1e-9; throws IncompatibleDimension on size mismatch.
[[nodiscard]] double observational_entropy(const DensityMatrix& rho, const CoarseGraining& cg);

/// S_obs from precomputed cell probabilities.
[[nodiscard]] double observational_entropy(const std::vector<double>& probabilities,
                                           const std::vector<double>& volumes);

/// Groups eigenvectors of H into equal-width energy bins over
/// [lambda_min, lambda_max]. Degenerate clusters share the bin of their
/// lowest member; empty bins are dropped.
[[nodiscard]] CoarseGraining energy_coarse_graining(const HermitianOperator& h,
                                                    std::size_t num_bins);

}  // namespace entroledger

#endif  // ENTROLEDGER_QSTATE_HPP
