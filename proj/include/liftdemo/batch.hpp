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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "liftdemo/generator.hpp"
#include "liftdemo/metrics.hpp"
#include "liftdemo/reconstruction.hpp"
#include "liftdemo/smoothing.hpp"

namespace liftdemo {

struct GenerateJob {
  Scene scene;
  InterfaceSpec spec;
  DemonstratorPolicy policy;
  double dt = 0.01;
  std::uint64_t seed = 0;
};

// Data-parallel kernels over independent demonstrations. Output order matches
// input order. When items throw, the exception of the lowest index is
// rethrown after every item has run.

std::vector<Demonstration> generate_all(std::span<const GenerateJob> jobs);
std::vector<ReconstructionResult> reconstruct_all(std::span<const Demonstration> demos,
                                                  const InterfaceRegistry& registry,
                                                  const ReconstructionConfig& cfg);
std::vector<Demonstration> butterworth_all(std::span<const Demonstration> demos,
                                           const ButterworthParams& params);
std::vector<ActivationHistogram> histograms_all(std::span<const Demonstration> demos,
                                                const ReconstructionConfig& cfg);

/// Single-threaded reference implementations of the kernels above.
namespace serial {

std::vector<Demonstration> generate_all(std::span<const GenerateJob> jobs);
std::vector<ReconstructionResult> reconstruct_all(std::span<const Demonstration> demos,
                                                  const InterfaceRegistry& registry,
                                                  const ReconstructionConfig& cfg);
std::vector<Demonstration> butterworth_all(std::span<const Demonstration> demos,
                                           const ButterworthParams& params);
std::vector<ActivationHistogram> histograms_all(std::span<const Demonstration> demos,
                                                const ReconstructionConfig& cfg);

}  // namespace serial

/// Threads the OpenMP runtime will use; 1 when built without OpenMP.
int max_threads();

}  // namespace liftdemo
