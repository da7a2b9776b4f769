// Copyright 2026 The qmm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qmm/fidelity_operator.hpp"
#include "qmm/solver.hpp"

namespace {

void BM_SymmetricProjector(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qmm::symmetric_projector(m));
}
BENCHMARK(BM_SymmetricProjector)->DenseRange(2, 8, 2);

void BM_AnalyticR(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qmm::build_r_analytic(qmm::ProgramKind::Identical, n));
}
BENCHMARK(BM_AnalyticR)->DenseRange(1, 5);

void BM_MonteCarloR(benchmark::State& state) {
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qmm::build_r_montecarlo(qmm::ProgramKind::Identical, 1, samples, 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloR)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& state) {
  const qmm::FidelityOperator r = qmm::build_r_analytic(qmm::ProgramKind::Identical, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qmm::solve(r));
}
BENCHMARK(BM_Solve)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_EigHermitian(benchmark::State& state) {
  const qmm::FidelityOperator r = qmm::build_r_analytic(qmm::ProgramKind::Identical, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qmm::eig_hermitian(r.r_total));
}
BENCHMARK(BM_EigHermitian)->DenseRange(1, 5);

}  // namespace
BENCHMARK_MAIN();
