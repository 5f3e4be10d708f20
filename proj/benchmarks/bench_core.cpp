// Copyright 2025 The scamp Authors
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

#include "scamp/analytic.hpp"
#include "scamp/channel.hpp"
#include "scamp/numeric.hpp"
#include "scamp/optimize.hpp"

using namespace scamp;

static void BM_ScsFidelityClosed(benchmark::State& state) {
  const int d = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(scs_fidelity(1.5, 1.3, d, 0, SchemeTag::aadag));
}
BENCHMARK(BM_ScsFidelityClosed)->Arg(2)->Arg(5);

static void BM_ScsFidelityNumeric(benchmark::State& state) {
  const int d = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(numeric_scs_fidelity(1.5, 1.3, d, 0, SchemeTag::aadag));
}
BENCHMARK(BM_ScsFidelityNumeric)->Arg(2)->Arg(5);

static void BM_ScsQfiClosed(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(scs_qfi(2.2, 5, 0, SchemeTag::adag2));
}
BENCHMARK(BM_ScsQfiClosed);

static void BM_BeamSplitter(benchmark::State& state) {
  const auto N = Eigen::Index(state.range(0));
  TwoModeFock in;
  in.amps = Eigen::MatrixXcd::Zero(N, N);
  for (Eigen::Index s = 0; s < N / 2; ++s) in.amps(s, 0) = 1.0 / std::sqrt(double(N / 2));
  const BeamSplitter bs(0.99);
  for (auto _ : state) benchmark::DoNotOptimize(bs_apply(in, bs));
}
BENCHMARK(BM_BeamSplitter)->Arg(16)->Arg(32)->Arg(64);

static void BM_ScsGain(benchmark::State& state) {
  const int d = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(scs_gain(ScsSpec{1.0, d, d - 1}, SchemeTag::adag2));
}
BENCHMARK(BM_ScsGain)->Arg(2)->Arg(5);

BENCHMARK_MAIN();
