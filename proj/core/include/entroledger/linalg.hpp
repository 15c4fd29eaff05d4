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

#ifndef ENTROLEDGER_LINALG_HPP
#define ENTROLEDGER_LINALG_HPP

// Dense complex linear algebra on finite Hilbert spaces.
//
// Composite indices follow the row-major convention i_AB = i_A * d_B + i_B
// everywhere in the library.

#include <complex>
#include <cstddef>
#include <functional>

#include <Eigen/Dense>

namespace entroledger {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Default tolerance on max|H - H^dagger| for Hermiticity checks.
inline constexpr double kHermitianTolerance = 1e-10;

/// Dimensions of a bipartite Hilbert space H_A (x) H_B.
struct BipartiteSpace {
  std::size_t d_A = 1;
  std::size_t d_B = 1;

  [[nodiscard]] std::size_t dim() const noexcept { return d_A * d_B; }
  [[nodiscard]] std::size_t index(std::size_t i_A, std::size_t i_B) const noexcept {
    return i_A * d_B + i_B;
  }

  friend bool operator==(const BipartiteSpace&, const BipartiteSpace&) = default;
};

enum class Subsystem { A, B };

/// Eigendecomposition H = V diag(lambda) V^dagger with ascending eigenvalues.
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;  // columns

  [[nodiscard]] std::size_t dim() const noexcept {
    return static_cast<std::size_t>(eigenvalues.size());
  }
};

/// max_ij |H_ij - conj(H_ji)|; infinity for non-square input.
[[nodiscard]] double hermiticity_error(const ComplexMatrix& m);

/// Hermitian eigendecomposition. Throws NotHermitian when
/// hermiticity_error(h) exceeds `tolerance`.
[[nodiscard]] SpectralDecomposition eigh(const ComplexMatrix& h,
                                         double tolerance = kHermitianTolerance);

/// Eigenvalues only, ascending.
[[nodiscard]] RealVector eigvalsh(const ComplexMatrix& h,
                                  double tolerance = kHermitianTolerance);

/// V diag(f(lambda_i)) V^dagger.
[[nodiscard]] ComplexMatrix matrix_function(const SpectralDecomposition& spectrum,
                                            const std::function<Complex(double)>& f);
[[nodiscard]] ComplexMatrix matrix_function(const ComplexMatrix& h,
                                            const std::function<Complex(double)>& f);

/// Kronecker product, (A (x) B)[i*rB + k, j*cB + l] = A[i,j] B[k,l].
[[nodiscard]] ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced operator on subsystem `keep`. Throws DimensionMismatch if the
/// matrix is not square of size space.dim().
[[nodiscard]] ComplexMatrix partial_trace(const ComplexMatrix& m, const BipartiteSpace& space,
                                          Subsystem keep);

/// Identity of the given dimension.
[[nodiscard]] ComplexMatrix identity(std::size_t dim);

/// Tr[a b] without forming the product.
[[nodiscard]] Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace entroledger

#endif  // ENTROLEDGER_LINALG_HPP
