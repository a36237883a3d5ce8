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

#include <array>
#include <cstdint>

#include "liftdemo/scene.hpp"
#include "liftdemo/types.hpp"

namespace liftdemo {

/// Scripted teleoperator. Drives each dimension toward the current waypoint
/// with saturated proportional control, using only the dimensions the active
/// mode exposes, and switches modes once those have converged.
struct DemonstratorPolicy {
  double max_lin_speed = 0.1;   // m/s
  double max_ang_speed = 0.5;   // rad/s
  double gain = 4.0;            // 1/s
  double gripper_speed = 1.0;   // aperture per second
  /// Upper bound on the time spent in each intermediate mode while cycling.
  /// Each intermediate mode emits between 1 and round(duration / dt) samples.
  double mode_switch_duration = 0.03;
  double lin_tolerance = 1e-3;  // m
  double ang_tolerance = 1e-3;  // rad
  std::array<Dim, kNumDims> preference = {Dim::kVx, Dim::kVy, Dim::kVz, Dim::kWx,
                                          Dim::kWy, Dim::kWz, Dim::kGripper};
  /// The demonstrator holds every mode for at least this many samples, idling
  /// after convergence if needed.
  int min_mode_samples = 120;
  /// Additive command jitter on the driven axes, as a fraction of the axis
  /// speed limit (standard deviation).
  double velocity_noise = 0.0;
  /// Uniform perturbation (m) of each scripted translation, per moved axis.
  double waypoint_jitter = 0.0;
  /// Samples without a new best waypoint error before giving up. Must exceed
  /// min_mode_samples, since idling makes no progress.
  int stall_horizon = 2000;
  int max_samples = 500000;

  void check() const;
};

/// Emulates one teleoperated demonstration of `scene` through `spec`.
/// Deterministic for a fixed seed. Throws UnreachableWaypoint on stall.
Demonstration generate_demo(const Scene& scene, const DemonstratorPolicy& policy,
                            const InterfaceSpec& spec, double dt, std::uint64_t seed);

}  // namespace liftdemo
