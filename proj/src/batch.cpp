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

#include "liftdemo/batch.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "liftdemo/errors.hpp"

namespace liftdemo {

namespace {

template <typename Out, typename Fn>
std::vector<Out> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<Out> out(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = fn(k);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

template <typename Out, typename Fn>
std::vector<Out> serial_map(std::size_t n, Fn&& fn) {
  std::vector<Out> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
  return out;
}

InterfaceSpec lookup(const InterfaceRegistry& registry, const Demonstration& demo) {
  auto spec = registry.find(demo.interface);
  if (!spec) throw InvalidArgument("unknown interface '" + demo.interface + "'");
  return *spec;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Demonstration> generate_all(std::span<const GenerateJob> jobs) {
  return parallel_map<Demonstration>(jobs.size(), [&](std::size_t i) {
    const auto& j = jobs[i];
    return generate_demo(j.scene, j.policy, j.spec, j.dt, j.seed);
  });
}

std::vector<ReconstructionResult> reconstruct_all(std::span<const Demonstration> demos,
                                                  const InterfaceRegistry& registry,
                                                  const ReconstructionConfig& cfg) {
  return parallel_map<ReconstructionResult>(demos.size(), [&](std::size_t i) {
    return reconstruct_demo(demos[i], lookup(registry, demos[i]), cfg);
  });
}

std::vector<Demonstration> butterworth_all(std::span<const Demonstration> demos,
                                           const ButterworthParams& params) {
  return parallel_map<Demonstration>(
      demos.size(), [&](std::size_t i) { return butterworth_lowpass(demos[i], params); });
}

std::vector<ActivationHistogram> histograms_all(std::span<const Demonstration> demos,
                                                const ReconstructionConfig& cfg) {
  return parallel_map<ActivationHistogram>(
      demos.size(), [&](std::size_t i) { return activation_histogram(demos[i], cfg); });
}

namespace serial {

std::vector<Demonstration> generate_all(std::span<const GenerateJob> jobs) {
  return serial_map<Demonstration>(jobs.size(), [&](std::size_t i) {
    const auto& j = jobs[i];
    return generate_demo(j.scene, j.policy, j.spec, j.dt, j.seed);
  });
}

std::vector<ReconstructionResult> reconstruct_all(std::span<const Demonstration> demos,
                                                  const InterfaceRegistry& registry,
                                                  const ReconstructionConfig& cfg) {
  return serial_map<ReconstructionResult>(demos.size(), [&](std::size_t i) {
    return reconstruct_demo(demos[i], lookup(registry, demos[i]), cfg);
  });
}

std::vector<Demonstration> butterworth_all(std::span<const Demonstration> demos,
                                           const ButterworthParams& params) {
  return serial_map<Demonstration>(
      demos.size(), [&](std::size_t i) { return butterworth_lowpass(demos[i], params); });
}

std::vector<ActivationHistogram> histograms_all(std::span<const Demonstration> demos,
                                                const ReconstructionConfig& cfg) {
  return serial_map<ActivationHistogram>(
      demos.size(), [&](std::size_t i) { return activation_histogram(demos[i], cfg); });
}

}  // namespace serial

}  // namespace liftdemo
