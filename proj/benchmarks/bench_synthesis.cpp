// Copyright 2026 The zxsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "zxsynth/blockzxz.hpp"
#include "zxsynth/siable.hpp"
#include "zxsynth/spdmm.hpp"
#include "zxsynth/su4.hpp"

namespace zxsynth {
namespace {

void BM_PrepareState(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  Rng rng(1);
  const Vector psi = random_state(Eigen::Index{1} << n, rng);
  for (auto _ : st) benchmark::DoNotOptimize(prepare_state(psi));
  st.counters["cnots"] = static_cast<double>(nstate_count(n));
}
BENCHMARK(BM_PrepareState)->DenseRange(4, 14, 2)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_SimulateStatePrep(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  Rng rng(2);
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Circuit c = prepare_state(random_state(dim, rng));
  Vector zero = Vector::Zero(dim);
  zero[0] = 1.0;
  for (auto _ : st) benchmark::DoNotOptimize(zxsynth::apply(c, zero));
}
BENCHMARK(BM_SimulateStatePrep)->DenseRange(8, 14, 2)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_Su4UpToDiagonal(benchmark::State& st) {
  Rng rng(3);
  const Matrix U = random_unitary(4, rng);
  for (auto _ : st) benchmark::DoNotOptimize(decompose_su4_up_to_diagonal(U));
}
BENCHMARK(BM_Su4UpToDiagonal);

void BM_UnitaryExact(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  Rng rng(4);
  const Matrix U = random_unitary(Eigen::Index{1} << n, rng);
  for (auto _ : st) benchmark::DoNotOptimize(synth_unitary_exact(U));
  st.counters["cnots"] = static_cast<double>(count_unitary_exact(n));
}
BENCHMARK(BM_UnitaryExact)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_EncodeFull(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  Rng rng(5);
  const Eigen::Index h = Eigen::Index{1} << (n - 1);
  const Matrix A = random_gaussian(h, h, rng);
  for (auto _ : st) benchmark::DoNotOptimize(block_encode_full(A));
  st.counters["cnots"] = static_cast<double>(count_block_encode_full(n));
}
BENCHMARK(BM_EncodeFull)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_EncodeLowRank(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const int K = static_cast<int>(st.range(1));
  Rng rng(6);
  const Matrix A = random_rank_k(Eigen::Index{1} << (n - 1), K, rng);
  for (auto _ : st) benchmark::DoNotOptimize(block_encode_low_rank(A, K));
  st.counters["cnots"] = static_cast<double>(count_block_encode_low_rank(n, K));
}
BENCHMARK(BM_EncodeLowRank)->Args({6, 2})->Args({8, 4})->Args({9, 10})->Unit(benchmark::kMillisecond);

void BM_DenseUnitary(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  Rng rng(7);
  const Circuit c = synth_unitary_exact(random_unitary(Eigen::Index{1} << n, rng));
  for (auto _ : st) benchmark::DoNotOptimize(to_unitary(c));
}
BENCHMARK(BM_DenseUnitary)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace zxsynth

BENCHMARK_MAIN();
