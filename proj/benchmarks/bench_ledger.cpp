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

#include <random>

#include <benchmark/benchmark.h>

#include "entroledger/dynamics.hpp"
#include "entroledger/ell_ledger.hpp"
#include "entroledger/obs_ledger.hpp"
#include "entroledger/scenarios.hpp"

namespace el = entroledger;

namespace {

void BM_Eigh(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto h = el::random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(el::eigh(h.matrix()));
}
BENCHMARK(BM_Eigh)->Arg(8)->Arg(32)->Arg(128);

void BM_Evolve(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto d_B = static_cast<std::size_t>(state.range(0));
  const auto s = el::random_product_scenario(2, d_B, 0.1, 100, rng);
  for (auto _ : state) benchmark::DoNotOptimize(el::evolve(s.model, s.rho0, s.dt, s.steps));
}
BENCHMARK(BM_Evolve)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_EllLedger(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto s = el::random_product_scenario(2, static_cast<std::size_t>(state.range(0)), 0.1, 100, rng);
  const auto traj = el::evolve(s.model, s.rho0, s.dt, s.steps);
  for (auto _ : state) benchmark::DoNotOptimize(el::compute_ell_ledger(traj));
}
BENCHMARK(BM_EllLedger)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ObsLedger(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto d_B = static_cast<std::size_t>(state.range(0));
  const auto s = el::random_product_scenario(2, d_B, 0.1, 100, rng);
  const auto traj = el::evolve(s.model, s.rho0, s.dt, s.steps);
  const auto cg_A = el::energy_coarse_graining(s.model.h_A, 2);
  const auto cg_B = el::energy_coarse_graining(s.model.h_B, 4);
  for (auto _ : state) benchmark::DoNotOptimize(el::compute_obs_ledger(traj, cg_A, cg_B));
}
BENCHMARK(BM_ObsLedger)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_GasExpansion(benchmark::State& state) {
  el::GasExpansionParams p;
  p.particles = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(el::run_scenario(el::gas_expansion(p)));
}
BENCHMARK(BM_GasExpansion)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
