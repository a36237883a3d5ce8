// Copyright 2026 The liftdemo Authors
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

// Serial reference versus OpenMP batch kernels.

#include <benchmark/benchmark.h>

#include <map>

#include "liftdemo/batch.hpp"

namespace {

using namespace liftdemo;

std::vector<GenerateJob> make_jobs(int n) {
  const auto scenes = builtin_scenes();
  const auto ifaces = builtin_interfaces();
  std::vector<GenerateJob> jobs;
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    GenerateJob j{scenes[k % scenes.size()], ifaces[(k / scenes.size()) % ifaces.size()], {},
                  0.01, static_cast<std::uint64_t>(i)};
    j.policy.velocity_noise = 0.2;
    jobs.push_back(j);
  }
  return jobs;
}

const std::vector<Demonstration>& demos(int n) {
  static std::map<int, std::vector<Demonstration>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, serial::generate_all(make_jobs(n))).first;
  return it->second;
}

template <bool Parallel>
void BM_Generate(benchmark::State& state) {
  const auto jobs = make_jobs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = Parallel ? generate_all(jobs) : serial::generate_all(jobs);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_Reconstruct(benchmark::State& state) {
  const auto& in = demos(static_cast<int>(state.range(0)));
  const InterfaceRegistry reg;
  const ReconstructionConfig cfg;
  for (auto _ : state) {
    auto out = Parallel ? reconstruct_all(in, reg, cfg) : serial::reconstruct_all(in, reg, cfg);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_Butterworth(benchmark::State& state) {
  const auto& in = demos(static_cast<int>(state.range(0)));
  const ButterworthParams p;
  for (auto _ : state) {
    auto out = Parallel ? butterworth_all(in, p) : serial::butterworth_all(in, p);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_Histograms(benchmark::State& state) {
  const auto& in = demos(static_cast<int>(state.range(0)));
  const ReconstructionConfig cfg;
  for (auto _ : state) {
    auto out = Parallel ? histograms_all(in, cfg) : serial::histograms_all(in, cfg);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_Generate<false>)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Generate<true>)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reconstruct<false>)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reconstruct<true>)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Butterworth<false>)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Butterworth<true>)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Histograms<false>)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Histograms<true>)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
