// Copyright 2026 The simdense Authors
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

#include <random>

#include "simdense/analysis.hpp"
#include "simdense/protocols.hpp"

using namespace simdense;

namespace {

StateVector random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CVector v(Eigen::Index{1} << n);
  for (auto& z : v) z = Complex(g(rng), g(rng));
  Labels labels;
  for (int i = 0; i < n; ++i) labels.push_back("q" + std::to_string(i));
  return StateVector::normalized(labels, v);
}

void BM_ApplyQft(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const StateVector s = random_state(12, 1);
  const Unitary u = qft(n);
  Labels targets(s.labels().begin(), s.labels().begin() + n);
  for (auto _ : state) benchmark::DoNotOptimize(apply(s, u, targets));
}
BENCHMARK(BM_ApplyQft)->DenseRange(1, 6);

void BM_PartialTrace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const StateVector s = random_state(n, 2);
  const Labels keep{"q0", "q" + std::to_string(n / 2)};
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(s, keep));
}
BENCHMARK(BM_PartialTrace)->DenseRange(4, 16, 4);

void BM_TeleportQft(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double h = 1.0 / std::sqrt(2.0);
  CVector plus(2);
  plus << h, h;
  const TeleportInput in{TeleportScheme::kQftN, std::vector<StateVector>(std::size_t(n), StateVector({"q"}, plus)), n};
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_teleportation(in, RngSeed{seed++}));
}
BENCHMARK(BM_TeleportQft)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

void BM_VerifyTheorem(benchmark::State& state) {
  const auto channel = static_cast<Channel>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(channel));
}
BENCHMARK(BM_VerifyTheorem)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ClassifyTeleportLock(benchmark::State& state) {
  const Unitary u = qft(2);
  for (auto _ : state) benchmark::DoNotOptimize(classify_locking_unitary(u, LockTask::kTeleportation, Channel::kBell));
}
BENCHMARK(BM_ClassifyTeleportLock)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
