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

#include "entroledger/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entroledger/error.hpp"

namespace entroledger {

namespace {

constexpr double kProjectorTolerance = 1e-9;
constexpr double kEntropyBoundSlack = 1e-9;

std::string describe_dims(std::size_t a, std::size_t b) {
  std::ostringstream s;
  s << a << " vs " << b;
  return s.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// HermitianOperator

HermitianOperator::HermitianOperator(const ComplexMatrix& m, double tolerance) {
  const double err = hermiticity_error(m);
  if (!(err <= tolerance)) {
    std::ostringstream msg;
    msg << "operator is not Hermitian: max|H - H^dagger| = " << err;
    throw NotHermitian(msg.str());
  }
  matrix_ = 0.5 * (m + m.adjoint());
}

HermitianOperator HermitianOperator::diagonal(const std::vector<double>& entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
  return HermitianOperator(m);
}

HermitianOperator HermitianOperator::zero(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return HermitianOperator(ComplexMatrix::Zero(n, n));
}

double HermitianOperator::norm() const {
  if (matrix_.size() == 0) return 0.0;
  return eigenvalues().cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
  const double herm = hermiticity_error(m);
  if (!(herm <= kHermitianTolerance)) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian: max|rho - rho^dagger| = " << herm;
    throw NotHermitian(msg.str());
  }
  if (m.rows() == 0) throw InvalidState("density matrix must have positive dimension");
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr << ", expected 1";
    throw InvalidState(msg.str());
  }
  matrix_ = 0.5 * (m + m.adjoint());
  const double min_eig = eigvalsh(matrix_).minCoeff();
  if (min_eig < -kEigenvalueClamp) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << min_eig;
    throw InvalidState(msg.str());
  }
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double n = psi.norm();
  if (!(n > 0.0)) throw InvalidState("pure state vector has zero norm");
  const ComplexVector v = psi / n;
  return DensityMatrix(v * v.adjoint(), UncheckedTag{});
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw InvalidState("density matrix must have positive dimension");
  return DensityMatrix(identity(dim) / static_cast<double>(dim), UncheckedTag{});
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double>& populations) {
  const auto n = static_cast<Eigen::Index>(populations.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = populations[static_cast<std::size_t>(i)];
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m) {
  return DensityMatrix(std::move(m), UncheckedTag{});
}

double DensityMatrix::expectation(const HermitianOperator& op) const {
  if (op.dim() != dim()) {
    throw DimensionMismatch("expectation: operator/state dimension " + describe_dims(op.dim(), dim()));
  }
  return trace_of_product(matrix_, op.matrix()).real();
}

// ---------------------------------------------------------------------------
// CoarseGraining

CoarseGraining::CoarseGraining(std::size_t dim, std::vector<ComplexMatrix> isometries)
    : dim_(dim), isometries_(std::move(isometries)) {
  volumes_.reserve(isometries_.size());
  for (const auto& w : isometries_) volumes_.push_back(static_cast<double>(w.cols()));
}

CoarseGraining CoarseGraining::from_isometries(std::vector<ComplexMatrix> isometries) {
  if (isometries.empty()) throw InvalidCoarseGraining("coarse-graining needs at least one cell");
  const Eigen::Index dim = isometries.front().rows();
  Eigen::Index total = 0;
  for (const auto& w : isometries) {
    if (w.rows() != dim) throw InvalidCoarseGraining("coarse-graining cells act on different dimensions");
    if (w.cols() < 1) throw InvalidCoarseGraining("coarse-graining cell has volume 0");
    total += w.cols();
  }
  if (total != dim) {
    throw InvalidCoarseGraining("coarse-graining volumes sum to " + describe_dims(total, dim) +
                                " (expected the Hilbert-space dimension)");
  }
  // With the stacked columns square, W^dagger W = I is equivalent to
  // orthogonality of the cells together with completeness.
  ComplexMatrix stacked(dim, dim);
  Eigen::Index col = 0;
  for (const auto& w : isometries) {
    stacked.middleCols(col, w.cols()) = w;
    col += w.cols();
  }
  const double err = (stacked.adjoint() * stacked - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (err > kProjectorTolerance) {
    std::ostringstream msg;
    msg << "coarse-graining cells are not orthogonal and complete (error " << err << ")";
    throw InvalidCoarseGraining(msg.str());
  }
  return CoarseGraining(static_cast<std::size_t>(dim), std::move(isometries));
}

CoarseGraining CoarseGraining::from_projectors(const std::vector<ComplexMatrix>& projectors) {
  std::vector<ComplexMatrix> isometries;
  isometries.reserve(projectors.size());
  for (const auto& p : projectors) {
    if (hermiticity_error(p) > kProjectorTolerance) {
      throw InvalidCoarseGraining("projector is not Hermitian");
    }
    if ((p * p - p).cwiseAbs().maxCoeff() > kProjectorTolerance) {
      throw InvalidCoarseGraining("projector is not idempotent");
    }
    const auto eig = eigh(p, kProjectorTolerance);
    std::vector<Eigen::Index> cols;
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
      if (eig.eigenvalues[i] > 0.5) cols.push_back(i);
    }
    ComplexMatrix w(p.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      w.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors.col(cols[c]);
    }
    isometries.push_back(std::move(w));
  }
  return from_isometries(std::move(isometries));
}

CoarseGraining CoarseGraining::from_index_groups(
    std::size_t dim, const std::vector<std::vector<std::size_t>>& groups) {
  std::vector<ComplexMatrix> isometries;
  for (const auto& g : groups) {
    ComplexMatrix w = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(g.size()));
    for (std::size_t c = 0; c < g.size(); ++c) {
      if (g[c] >= dim) throw InvalidCoarseGraining("basis index out of range in coarse-graining group");
      w(static_cast<Eigen::Index>(g[c]), static_cast<Eigen::Index>(c)) = 1.0;
    }
    isometries.push_back(std::move(w));
  }
  return from_isometries(std::move(isometries));
}

CoarseGraining CoarseGraining::identity(std::size_t dim) {
  return from_isometries({entroledger::identity(dim)});
}

CoarseGraining CoarseGraining::eigenbasis(const ComplexMatrix& hermitian) {
  const auto eig = eigh(hermitian);
  std::vector<ComplexMatrix> isometries;
  for (Eigen::Index i = 0; i < eig.eigenvectors.cols(); ++i) {
    isometries.emplace_back(eig.eigenvectors.col(i));
  }
  return from_isometries(std::move(isometries));
}

ComplexMatrix CoarseGraining::projector(std::size_t i) const {
  const auto& w = isometries_.at(i);
  return w * w.adjoint();
}

std::vector<double> CoarseGraining::probabilities(const ComplexMatrix& rho) const {
  if (static_cast<std::size_t>(rho.rows()) != dim_ || rho.rows() != rho.cols()) {
    throw IncompatibleDimension("coarse-graining dimension " +
                                describe_dims(dim_, static_cast<std::size_t>(rho.rows())));
  }
  std::vector<double> p;
  p.reserve(isometries_.size());
  for (const auto& w : isometries_) p.push_back((w.adjoint() * rho * w).trace().real());
  return p;
}

// ---------------------------------------------------------------------------
// Entropies

double entropy_of_spectrum(const RealVector& eigenvalues) {
  double s = 0.0;
  for (const double lambda : eigenvalues) {
    if (lambda < -kEigenvalueClamp) {
      std::ostringstream msg;
      msg << "negative eigenvalue " << lambda << " below clamping window";
      throw InvalidState(msg.str());
    }
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return std::max(s, 0.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_of_spectrum(rho.eigenvalues());
}

DensityMatrix partial_trace(const DensityMatrix& rho, const BipartiteSpace& space, Subsystem keep) {
  return DensityMatrix::unchecked(partial_trace(rho.matrix(), space, keep));
}

double mutual_information(const DensityMatrix& rho_ab, const BipartiteSpace& space) {
  const auto rho_a = partial_trace(rho_ab, space, Subsystem::A);
  const auto rho_b = partial_trace(rho_ab, space, Subsystem::B);
  return von_neumann_entropy(rho_a) + von_neumann_entropy(rho_b) - von_neumann_entropy(rho_ab);
}

double degeneracy_tolerance(const RealVector& ascending_eigenvalues) {
  if (ascending_eigenvalues.size() == 0) return 1e-12;
  const double spread = ascending_eigenvalues[ascending_eigenvalues.size() - 1] - ascending_eigenvalues[0];
  return spread * 1e-9 + 1e-12;
}

std::size_t ground_degeneracy(const RealVector& ascending_eigenvalues) {
  if (ascending_eigenvalues.size() == 0) return 0;
  const double cutoff = ascending_eigenvalues[0] + degeneracy_tolerance(ascending_eigenvalues);
  std::size_t g = 0;
  for (const double e : ascending_eigenvalues) {
    if (e <= cutoff) ++g;
  }
  return g;
}

RealVector gibbs_populations(const RealVector& ascending_eigenvalues, double beta) {
  if (std::isnan(beta) || beta < 0.0) {
    throw InvalidArgument("inverse temperature must be nonnegative");
  }
  const auto n = ascending_eigenvalues.size();
  RealVector p(n);
  if (n == 0) return p;
  if (std::isinf(beta)) {
    const auto g0 = ground_degeneracy(ascending_eigenvalues);
    for (Eigen::Index i = 0; i < n; ++i) {
      p[i] = static_cast<std::size_t>(i) < g0 ? 1.0 / static_cast<double>(g0) : 0.0;
    }
    return p;
  }
  const double e0 = ascending_eigenvalues[0];
  for (Eigen::Index i = 0; i < n; ++i) p[i] = std::exp(-beta * (ascending_eigenvalues[i] - e0));
  return p / p.sum();
}

GibbsState gibbs_state(const HermitianOperator& h, double beta) {
  const auto eig = h.spectrum();
  const RealVector p = gibbs_populations(eig.eigenvalues, beta);
  ComplexMatrix rho = eig.eigenvectors * p.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return GibbsState{beta, h, DensityMatrix::unchecked(std::move(rho))};
}

double gibbs_entropy(const RealVector& ascending_eigenvalues, double beta) {
  if (std::isnan(beta) || beta < 0.0) {
    throw InvalidArgument("inverse temperature must be nonnegative");
  }
  const auto n = ascending_eigenvalues.size();
  if (n == 0) return 0.0;
  if (beta == 0.0) return std::log(static_cast<double>(n));
  if (std::isinf(beta)) return std::log(static_cast<double>(ground_degeneracy(ascending_eigenvalues)));
  // S = ln Z + beta <E>, with energies shifted so the ground level sits at 0.
  const double e0 = ascending_eigenvalues[0];
  double z = 0.0;
  double mean = 0.0;
  for (const double e : ascending_eigenvalues) {
    const double shifted = e - e0;
    const double w = std::exp(-beta * shifted);
    z += w;
    mean += w * shifted;
  }
  mean /= z;
  return std::max(std::log(z) + beta * mean, 0.0);
}

double gibbs_entropy_curve(const HermitianOperator& h, double beta) {
  return gibbs_entropy(h.eigenvalues(), beta);
}

double gibbs_entropy_derivative(const RealVector& ascending_eigenvalues, double beta) {
  if (std::isnan(beta) || beta < 0.0) {
    throw InvalidArgument("inverse temperature must be nonnegative");
  }
  if (std::isinf(beta) || beta == 0.0 || ascending_eigenvalues.size() == 0) return 0.0;
  const RealVector p = gibbs_populations(ascending_eigenvalues, beta);
  const RealVector shifted = ascending_eigenvalues.array() - ascending_eigenvalues[0];
  const double mean = p.dot(shifted);
  const double var = p.dot((shifted.array() - mean).square().matrix());
  return -beta * var;
}

double observational_entropy(const std::vector<double>& probabilities,
                             const std::vector<double>& volumes) {
  if (probabilities.size() != volumes.size()) {
    throw IncompatibleDimension("probability/volume count " +
                                describe_dims(probabilities.size(), volumes.size()));
  }
  double s = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const double p = probabilities[i];
    if (p < -kEigenvalueClamp) {
      std::ostringstream msg;
      msg << "coarse-grained probability " << p << " is negative";
      throw InvalidState(msg.str());
    }
    if (p > 0.0) s += p * (std::log(volumes[i]) - std::log(p));
  }
  return s;
}

double observational_entropy(const DensityMatrix& rho, const CoarseGraining& cg) {
  if (cg.dim() != rho.dim()) {
    throw IncompatibleDimension("coarse-graining dimension " + describe_dims(cg.dim(), rho.dim()));
  }
  const double s_obs = observational_entropy(cg.probabilities(rho.matrix()), cg.volumes());
  const double s_vn = von_neumann_entropy(rho);
  const double ln_dim = std::log(static_cast<double>(rho.dim()));
  if (s_obs < s_vn - kEntropyBoundSlack || s_obs > ln_dim + kEntropyBoundSlack) {
    std::ostringstream msg;
    msg << "observational entropy " << s_obs << " outside [S_vN, ln dim] = [" << s_vn << ", "
        << ln_dim << "]";
    throw NumericalError(msg.str());
  }
  return s_obs;
}

CoarseGraining energy_coarse_graining(const HermitianOperator& h, std::size_t num_bins) {
  if (num_bins == 0) throw InvalidArgument("energy_coarse_graining needs at least one bin");
  const auto eig = h.spectrum();
  const auto& e = eig.eigenvalues;
  const auto n = e.size();
  const double lo = e[0];
  const double hi = e[n - 1];
  const double width = (hi - lo) / static_cast<double>(num_bins);
  const double tol = degeneracy_tolerance(e);

  std::vector<std::vector<Eigen::Index>> bins(num_bins);
  Eigen::Index i = 0;
  while (i < n) {
    // A cluster is every eigenvalue within tol of its lowest member.
    const double representative = e[i];
    std::size_t bin = 0;
    if (width > 0.0) {
      bin = static_cast<std::size_t>(std::floor((representative - lo) / width));
      bin = std::min(bin, num_bins - 1);
    }
    while (i < n && e[i] - representative <= tol) bins[bin].push_back(i++);
  }

  std::vector<ComplexMatrix> isometries;
  for (const auto& members : bins) {
    if (members.empty()) continue;
    ComplexMatrix w(n, static_cast<Eigen::Index>(members.size()));
    for (std::size_t c = 0; c < members.size(); ++c) {
      w.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors.col(members[c]);
    }
    isometries.push_back(std::move(w));
  }
  return CoarseGraining::from_isometries(std::move(isometries));
}

}  // namespace entroledger
