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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liftdemo/geometry.hpp"

namespace liftdemo {

/// Obstacle distance recorded when nothing is within this range.
inline constexpr double kFarObstacleDistance = 10.0;

struct Waypoint {
  Pose pose;
  double gripper = 1.0;  // target aperture
};

struct Scene {
  std::string name;
  std::string description;
  std::vector<Obstacle> obstacles;
  Pose start;
  double start_gripper = 1.0;
  std::vector<Waypoint> waypoints;
  Vec3 bounds_min{-1.0, -1.0, 0.0};
  Vec3 bounds_max{1.0, 1.0, 1.0};

  /// Throws InvalidArgument for an empty waypoint list or waypoints outside
  /// the workspace bounds.
  void check() const;

  /// Recorded obstacle distance at `p`, capped at kFarObstacleDistance.
  double obstacle_distance(const Vec3& p) const;
};

/// Tolerances below which a scripted displacement does not count as moving a
/// dimension.
struct ScriptTolerance {
  double linear = 1e-6;
  double angular = 1e-6;
};

/// Motion dimensions the script moves between consecutive gripper actions.
/// Entry i covers the waypoints between the i-th and (i+1)-th gripper change.
std::vector<DimSet> scripted_regions(const Scene& scene, ScriptTolerance tol = {});
/// Union of all scripted motion dimensions.
DimSet scripted_dims(const Scene& scene, ScriptTolerance tol = {});

/// translate-L with configurable legs along +x and +y.
Scene translate_l_scene(double leg_x = 0.3, double leg_y = 0.3);

/// The named builtin scenes: translate-L, pick-place, corridor, peg.
std::vector<Scene> builtin_scenes();
std::optional<Scene> find_builtin_scene(std::string_view name);

}  // namespace liftdemo
