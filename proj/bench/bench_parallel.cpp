// Copyright 2026 The pielimits Authors
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

// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare
// thread counts, e.g.
//
//   OMP_NUM_THREADS=8 ./bench/bench_parallel --benchmark_filter=Sweep

#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pielimits/channel_oracle.hpp"
#include "pielimits/math_kernel.hpp"
#include "pielimits/sweep.hpp"

namespace {

using namespace pielimits;

std::vector<double> axis(benchmark::State& state) {
  return log_spaced_axis(kDefaultAxisMin, kDefaultAxisMax, static_cast<std::size_t>(state.range(0)));
}

void BM_SweepSerial(benchmark::State& state) {
  const auto a = axis(state);
  for (auto _ : state) benchmark::DoNotOptimize(serial::sweep(a, a));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_SweepSerial)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const auto a = axis(state);
  for (auto _ : state) benchmark::DoNotOptimize(sweep(a, a));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_SweepParallel)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

std::vector<double> lambert_inputs(std::size_t n) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-6.0, 15.0);
  std::vector<double> x(n);
  for (auto& v : x) v = std::pow(10.0, u(rng));
  return x;
}

void BM_LambertSerial(benchmark::State& state) {
  const auto x = lambert_inputs(static_cast<std::size_t>(state.range(0)));
  std::vector<double> w(x.size());
  for (auto _ : state) {
    serial::lambert_w0_batch(x, w);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LambertSerial)->Arg(1 << 20);

void BM_LambertParallel(benchmark::State& state) {
  const auto x = lambert_inputs(static_cast<std::size_t>(state.range(0)));
  std::vector<double> w(x.size());
  for (auto _ : state) {
    lambert_w0_batch(x, w);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LambertParallel)->Arg(1 << 20);

std::vector<CertifyQuery> certify_queries(std::size_t n) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<std::uint64_t> m(2, 4096);
  std::vector<CertifyQuery> q(n);
  for (auto& c : q) c = {1e-3 + 5.0 * u(rng), std::pow(10.0, -6.0 * u(rng)), m(rng)};
  return q;
}

void BM_CertifySerial(benchmark::State& state) {
  const auto q = certify_queries(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::certify_batch(q));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CertifySerial)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_CertifyParallel(benchmark::State& state) {
  const auto q = certify_queries(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify_batch(q));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CertifyParallel)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
