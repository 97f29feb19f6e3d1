// Copyright 2026 The dichoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "dichoq/dichoq.hpp"

using namespace dichoq;

static void BM_EigHermitian(benchmark::State& state) {
  Rng rng(Seed{1});
  auto h = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(h));
}
BENCHMARK(BM_EigHermitian)->RangeMultiplier(2)->Range(2, 64);

static void BM_Encode(benchmark::State& state) {
  auto rho = random_mixed(static_cast<std::size_t>(state.range(0)), Seed{2});
  for (auto _ : state) benchmark::DoNotOptimize(encode(rho));
}
BENCHMARK(BM_Encode)->RangeMultiplier(2)->Range(2, 64);

static void BM_Decode(benchmark::State& state) {
  auto table = encode(random_mixed(static_cast<std::size_t>(state.range(0)), Seed{3}));
  for (auto _ : state) benchmark::DoNotOptimize(decode(table));
}
BENCHMARK(BM_Decode)->RangeMultiplier(2)->Range(2, 64);

static void BM_RotateTable(benchmark::State& state) {
  Rng rng(Seed{4});
  auto rho = random_mixed(static_cast<std::size_t>(state.range(0)), rng);
  auto r = random_rotation(rng);
  for (auto _ : state) benchmark::DoNotOptimize(rotate_table(rho, r));
}
BENCHMARK(BM_RotateTable)->RangeMultiplier(2)->Range(2, 32);

static void BM_ReduceRho1(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  auto rho = random_mixed(2 * m, Seed{5});
  const Factorization f(2 * m, 2, m);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_rho1(rho, f));
}
BENCHMARK(BM_ReduceRho1)->RangeMultiplier(2)->Range(2, 32);

static void BM_ReduceSwapped(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  auto rho = random_mixed(2 * m, Seed{6});
  const Factorization f(2 * m, 2, m);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_swapped(rho, f));
}
BENCHMARK(BM_ReduceSwapped)->RangeMultiplier(2)->Range(2, 32);

static void BM_CharPoly(benchmark::State& state) {
  auto rho = random_mixed(static_cast<std::size_t>(state.range(0)), Seed{7});
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(rho));
}
BENCHMARK(BM_CharPoly)->RangeMultiplier(2)->Range(2, 32);
BENCHMARK_MAIN();
