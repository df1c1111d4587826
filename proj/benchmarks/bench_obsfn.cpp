//  Copyright 2026 The obsfn Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <random>

#include <benchmark/benchmark.h>

#include "obsfn/corpus.hpp"
#include "obsfn/lattice.hpp"
#include "obsfn/matrix.hpp"
#include "obsfn/reconstruction.hpp"
#include "obsfn/stone.hpp"

namespace {

using namespace obsfn;

void BM_BooleanLattice(benchmark::State& state) {
  std::vector<std::string> atoms;
  for (int i = 0; i < state.range(0); ++i) atoms.push_back("e" + std::to_string(i + 1));
  for (auto _ : state) benchmark::DoNotOptimize(boolean_lattice(atoms));
}
BENCHMARK(BM_BooleanLattice)->DenseRange(4, 10, 2);

void BM_DualIdeals(benchmark::State& state) {
  const auto l = builtin("2^4");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_dual_ideals(*l));
}
BENCHMARK(BM_DualIdeals);

void BM_Reconstruct(benchmark::State& state) {
  const auto l = builtin(state.range(0) == 0 ? "MO3" : "2^4");
  std::mt19937_64 rng(1);
  const auto f = observable_fn(random_family(l, rng, 4));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(f));
}
BENCHMARK(BM_Reconstruct)->Arg(0)->Arg(1);

void BM_Eig(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto a = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(eig(a));
}
BENCHMARK(BM_Eig)->RangeMultiplier(2)->Range(2, 64);

void BM_RayObs(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto d = eig(random_hermitian(n, rng));
  const Ray x(random_vector(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(ray_obs(d, x));
}
BENCHMARK(BM_RayObs)->RangeMultiplier(2)->Range(2, 64);

}  // namespace

BENCHMARK_MAIN();
