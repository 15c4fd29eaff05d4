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

#ifndef ENTROLEDGER_DYNAMICS_HPP
#define ENTROLEDGER_DYNAMICS_HPP

#include <cstddef>
#include <vector>

#include "entroledger/linalg.hpp"
#include "entroledger/qstate.hpp"

namespace entroledger {

inline constexpr std::size_t kDefaultDimCap = 4096;

/// Throws CapExceeded when d_A * d_B exceeds `dim_cap`.
void check_dim_cap(const BipartiteSpace& space, std::size_t dim_cap);

/// op (x) I_B or I_A (x) op.
[[nodiscard]] ComplexMatrix embed(const ComplexMatrix& op, const BipartiteSpace& space, Subsystem on);

/// H_AB = H_A (x) I + I (x) H_B + V_int.
struct CompositeModel {
  BipartiteSpace space;
  HermitianOperator h_A;
  HermitianOperator h_B;
  HermitianOperator v_int;
  HermitianOperator h_AB;
  std::size_t dim_cap = kDefaultDimCap;

  [[nodiscard]] static CompositeModel assemble(HermitianOperator h_A, HermitianOperator h_B,
                                               HermitianOperator v_int,
                                               std::size_t dim_cap = kDefaultDimCap);
};

/// rho_A (x) rho_B.
[[nodiscard]] DensityMatrix product_state(const DensityMatrix& rho_A, const DensityMatrix& rho_B);

/// e^{-iHt} rho e^{iHt} for any real t (negative t runs backwards).
[[nodiscard]] DensityMatrix evolve_to(const SpectralDecomposition& spectrum, const DensityMatrix& rho,
                                      double t);

/// Exact unitary trajectory on the grid t_k = k dt, k = 0..steps.
///
/// Every grid state is obtained from the single cached spectrum of H_AB, so
/// there is no step-to-step error accumulation. Reduced states and the
/// entropies S_A, S_B, S_AB are stored per step; the full composite state is
/// rebuilt on demand by state(k).
class Trajectory {
 public:
  [[nodiscard]] const CompositeModel& model() const noexcept { return model_; }
  [[nodiscard]] const BipartiteSpace& space() const noexcept { return model_.space; }
  [[nodiscard]] const SpectralDecomposition& spectrum() const noexcept { return spectrum_; }
  [[nodiscard]] double dt() const noexcept { return dt_; }
  /// Number of grid points (steps + 1).
  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] double time(std::size_t k) const noexcept { return static_cast<double>(k) * dt_; }

  [[nodiscard]] DensityMatrix state(std::size_t k) const;
  [[nodiscard]] const DensityMatrix& initial_state() const noexcept { return rho0_; }
  [[nodiscard]] const DensityMatrix& reduced_A(std::size_t k) const { return reduced_A_.at(k); }
  [[nodiscard]] const DensityMatrix& reduced_B(std::size_t k) const { return reduced_B_.at(k); }

  [[nodiscard]] const std::vector<double>& entropy_A() const noexcept { return s_A_; }
  [[nodiscard]] const std::vector<double>& entropy_B() const noexcept { return s_B_; }
  [[nodiscard]] const std::vector<double>& entropy_AB() const noexcept { return s_AB_; }
  /// Tr[H_AB rho(t_k)].
  [[nodiscard]] const std::vector<double>& total_energy() const noexcept { return energy_AB_; }
  /// I_AB(t_k) = S_A + S_B - S_AB.
  [[nodiscard]] std::vector<double> mutual_information() const;

  friend Trajectory evolve(const CompositeModel& model, const DensityMatrix& rho0, double dt,
                           std::size_t steps);

 private:
  Trajectory(CompositeModel model, DensityMatrix rho0, SpectralDecomposition spectrum, double dt);

  CompositeModel model_;
  DensityMatrix rho0_;
  SpectralDecomposition spectrum_;
  ComplexMatrix rho0_eigenbasis_;
  double dt_;
  std::size_t size_ = 0;
  std::vector<DensityMatrix> reduced_A_;
  std::vector<DensityMatrix> reduced_B_;
  std::vector<double> s_A_;
  std::vector<double> s_B_;
  std::vector<double> s_AB_;
  std::vector<double> energy_AB_;
};

/// Throws DimensionMismatch, CapExceeded or InvalidArgument (dt <= 0, steps == 0).
[[nodiscard]] Trajectory evolve(const CompositeModel& model, const DensityMatrix& rho0, double dt,
                                std::size_t steps);

}  // namespace entroledger

#endif  // ENTROLEDGER_DYNAMICS_HPP
