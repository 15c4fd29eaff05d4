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

#include "entroledger/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "entroledger/error.hpp"

namespace entroledger {

namespace {

// rho(t) in the eigenbasis: rho~_mn(t) = rho~_mn(0) exp(-i (l_m - l_n) t).
ComplexMatrix rotate_phases(const ComplexMatrix& rho_eig, const RealVector& lambda, double t) {
  const auto n = lambda.size();
  ComplexVector phase(n);
  for (Eigen::Index m = 0; m < n; ++m) phase[m] = std::polar(1.0, -lambda[m] * t);
  return phase.asDiagonal() * rho_eig * phase.conjugate().asDiagonal();
}

}  // namespace

void check_dim_cap(const BipartiteSpace& space, std::size_t dim_cap) {
  if (space.d_A == 0 || space.d_B == 0) {
    throw InvalidArgument("subsystem dimensions must be positive");
  }
  if (space.dim() > dim_cap) {
    std::ostringstream msg;
    msg << "composite dimension " << space.d_A << "*" << space.d_B << " = " << space.dim()
        << " exceeds the cap " << dim_cap;
    throw CapExceeded(msg.str());
  }
}

ComplexMatrix embed(const ComplexMatrix& op, const BipartiteSpace& space, Subsystem on) {
  if (on == Subsystem::A) {
    if (static_cast<std::size_t>(op.rows()) != space.d_A) {
      throw DimensionMismatch("embed: operator does not act on subsystem A");
    }
    return kron(op, identity(space.d_B));
  }
  if (static_cast<std::size_t>(op.rows()) != space.d_B) {
    throw DimensionMismatch("embed: operator does not act on subsystem B");
  }
  return kron(identity(space.d_A), op);
}

CompositeModel CompositeModel::assemble(HermitianOperator h_A, HermitianOperator h_B,
                                        HermitianOperator v_int, std::size_t dim_cap) {
  const BipartiteSpace space{h_A.dim(), h_B.dim()};
  check_dim_cap(space, dim_cap);
  if (v_int.dim() != space.dim()) {
    std::ostringstream msg;
    msg << "interaction has dimension " << v_int.dim() << ", expected " << space.dim();
    throw DimensionMismatch(msg.str());
  }
  HermitianOperator h_AB(embed(h_A.matrix(), space, Subsystem::A) +
                         embed(h_B.matrix(), space, Subsystem::B) + v_int.matrix());
  return CompositeModel{space, std::move(h_A), std::move(h_B), std::move(v_int), std::move(h_AB),
                        dim_cap};
}

DensityMatrix product_state(const DensityMatrix& rho_A, const DensityMatrix& rho_B) {
  return DensityMatrix::unchecked(kron(rho_A.matrix(), rho_B.matrix()));
}

DensityMatrix evolve_to(const SpectralDecomposition& spectrum, const DensityMatrix& rho, double t) {
  if (rho.dim() != spectrum.dim()) {
    throw DimensionMismatch("evolve_to: state and Hamiltonian dimensions differ");
  }
  const auto& v = spectrum.eigenvectors;
  const ComplexMatrix rho_eig = v.adjoint() * rho.matrix() * v;
  ComplexMatrix out = v * rotate_phases(rho_eig, spectrum.eigenvalues, t) * v.adjoint();
  return DensityMatrix::unchecked(0.5 * (out + out.adjoint()));
}

Trajectory::Trajectory(CompositeModel model, DensityMatrix rho0, SpectralDecomposition spectrum,
                       double dt)
    : model_(std::move(model)),
      rho0_(std::move(rho0)),
      spectrum_(std::move(spectrum)),
      dt_(dt) {
  rho0_eigenbasis_ = spectrum_.eigenvectors.adjoint() * rho0_.matrix() * spectrum_.eigenvectors;
}

DensityMatrix Trajectory::state(std::size_t k) const {
  if (k >= size()) throw InvalidArgument("trajectory index out of range");
  const auto& v = spectrum_.eigenvectors;
  ComplexMatrix out = v * rotate_phases(rho0_eigenbasis_, spectrum_.eigenvalues, time(k)) * v.adjoint();
  return DensityMatrix::unchecked(0.5 * (out + out.adjoint()));
}

std::vector<double> Trajectory::mutual_information() const {
  std::vector<double> out(size());
  for (std::size_t k = 0; k < size(); ++k) out[k] = s_A_[k] + s_B_[k] - s_AB_[k];
  return out;
}

Trajectory evolve(const CompositeModel& model, const DensityMatrix& rho0, double dt, std::size_t steps) {
  check_dim_cap(model.space, model.dim_cap);
  if (rho0.dim() != model.space.dim()) {
    std::ostringstream msg;
    msg << "initial state has dimension " << rho0.dim() << ", expected " << model.space.dim();
    throw DimensionMismatch(msg.str());
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be positive and finite");
  if (steps == 0) throw InvalidArgument("steps must be positive");

  Trajectory traj(model, rho0, model.h_AB.spectrum(), dt);
  const std::size_t n = steps + 1;
  traj.size_ = n;
  traj.reduced_A_.reserve(n);
  traj.reduced_B_.reserve(n);
  traj.s_A_.reserve(n);
  traj.s_B_.reserve(n);
  traj.s_AB_.reserve(n);
  traj.energy_AB_.reserve(n);

  for (std::size_t k = 0; k < n; ++k) {
    const DensityMatrix rho = traj.state(k);
    traj.reduced_A_.push_back(partial_trace(rho, model.space, Subsystem::A));
    traj.reduced_B_.push_back(partial_trace(rho, model.space, Subsystem::B));
    traj.s_A_.push_back(von_neumann_entropy(traj.reduced_A_.back()));
    traj.s_B_.push_back(von_neumann_entropy(traj.reduced_B_.back()));
    traj.s_AB_.push_back(von_neumann_entropy(rho));
    traj.energy_AB_.push_back(rho.expectation(model.h_AB));
  }
  return traj;
}

}  // namespace entroledger
