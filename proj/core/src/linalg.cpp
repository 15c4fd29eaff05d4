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

#include "entroledger/linalg.hpp"

#include <limits>
#include <sstream>

#include "entroledger/error.hpp"

namespace entroledger {

namespace {

void require_hermitian(const ComplexMatrix& h, double tolerance) {
  const double err = hermiticity_error(h);
  if (!(err <= tolerance)) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max|H - H^dagger| = " << err << " exceeds " << tolerance;
    throw NotHermitian(msg.str());
  }
}

Eigen::SelfAdjointEigenSolver<ComplexMatrix> solve(const ComplexMatrix& h, double tolerance,
                                                   int options) {
  require_hermitian(h, tolerance);
  // Symmetrize so that both triangles carry the same information.
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, options);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigensolver did not converge");
  }
  return solver;
}

}  // namespace

double hermiticity_error(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

SpectralDecomposition eigh(const ComplexMatrix& h, double tolerance) {
  auto solver = solve(h, tolerance, Eigen::ComputeEigenvectors);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector eigvalsh(const ComplexMatrix& h, double tolerance) {
  auto solver = solve(h, tolerance, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

ComplexMatrix matrix_function(const SpectralDecomposition& spectrum,
                              const std::function<Complex(double)>& f) {
  const auto n = spectrum.eigenvalues.size();
  ComplexVector values(n);
  for (Eigen::Index i = 0; i < n; ++i) values[i] = f(spectrum.eigenvalues[i]);
  return spectrum.eigenvectors * values.asDiagonal() * spectrum.eigenvectors.adjoint();
}

ComplexMatrix matrix_function(const ComplexMatrix& h, const std::function<Complex(double)>& f) {
  return matrix_function(eigh(h), f);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index rb = b.rows();
  const Eigen::Index cb = b.cols();
  ComplexMatrix out(a.rows() * rb, a.cols() * cb);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const BipartiteSpace& space, Subsystem keep) {
  const auto dim = static_cast<Eigen::Index>(space.dim());
  if (m.rows() != dim || m.cols() != dim) {
    std::ostringstream msg;
    msg << "partial_trace: matrix is " << m.rows() << "x" << m.cols() << " but space is "
        << space.d_A << "x" << space.d_B;
    throw DimensionMismatch(msg.str());
  }
  const auto dA = static_cast<Eigen::Index>(space.d_A);
  const auto dB = static_cast<Eigen::Index>(space.d_B);

  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dA, dA);
    for (Eigen::Index i = 0; i < dA; ++i) {
      for (Eigen::Index j = 0; j < dA; ++j) {
        out(i, j) = m.block(i * dB, j * dB, dB, dB).trace();
      }
    }
    return out;
  }

  ComplexMatrix out = ComplexMatrix::Zero(dB, dB);
  for (Eigen::Index a = 0; a < dA; ++a) out += m.block(a * dB, a * dB, dB, dB);
  return out;
}

ComplexMatrix identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return ComplexMatrix::Identity(n, n);
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Tr[ab] = sum_ij a_ij b_ji
  return (a.array() * b.transpose().array()).sum();
}

}  // namespace entroledger
