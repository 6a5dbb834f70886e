// Copyright 2026 The optspeed Authors
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


#include <random>

#include <benchmark/benchmark.h>

#include "optspeed/lie_flag.hpp"
#include "optspeed/numerics.hpp"
#include "optspeed/sampling.hpp"
#include "optspeed/synthesis.hpp"

namespace {

using namespace optspeed;

void BM_HermEig(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const ComplexMatrix h = sampling::random_hermitian(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(herm_eig(h));
}
BENCHMARK(BM_HermEig)->DenseRange(2, 8, 2)->Arg(32);

void BM_UnitaryExp(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const ComplexMatrix h = sampling::random_hermitian(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(unitary_exp(h, 0.7));
}
BENCHMARK(BM_UnitaryExp)->DenseRange(2, 8, 2)->Arg(32);

void BM_FirstArrival(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int n = static_cast<int>(state.range(0));
  const PureState phi = sampling::random_state(n, rng);
  const PureState psi = sampling::random_state(n, rng);
  const SynthesizedHamiltonian h = optimal_hamiltonian(phi, psi, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(first_arrival_time(h.hamiltonian, phi, psi, 1.1 * h.distance));
  }
}
BENCHMARK(BM_FirstArrival)->DenseRange(2, 8, 2);

void BM_Structural(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const int n = static_cast<int>(state.range(0));
  const SuVector x = sampling::random_equigeodesic(n, rng);
  const BlockStructure blocks = BlockStructure::pure_state(n);
  for (auto _ : state) benchmark::DoNotOptimize(equigeodesic_structural(x, blocks));
}
BENCHMARK(BM_Structural)->DenseRange(2, 8, 2);

void BM_Variational(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const int n = static_cast<int>(state.range(0));
  const SuVector x = sampling::random_equigeodesic(n, rng);
  const BlockStructure blocks = BlockStructure::pure_state(n);
  for (auto _ : state) benchmark::DoNotOptimize(is_equigeodesic_variational(x, blocks, 16, 7));
}
BENCHMARK(BM_Variational)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
