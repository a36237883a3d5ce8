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

#include <span>
#include <variant>

#include "liftdemo/types.hpp"

namespace liftdemo {

/// Rotation vector (axis * angle) of a unit quaternion, angle in [0, pi].
Vec3 rotation_vector(const Quat& q);
/// Unit quaternion for a rotation vector.
Quat quat_from_rotation_vector(const Vec3& rv);
/// Geodesic angle between two orientations, radians.
double angular_distance(const Quat& a, const Quat& b);
/// Shortest-arc spherical interpolation; returns the endpoints exactly at
/// f = 0 and f = 1.
Quat slerp_exact(const Quat& a, const Quat& b, double f);

struct Sphere {
  Vec3 center = Vec3::Zero();
  double radius = 0.0;
};

struct Box {
  Vec3 min = Vec3::Zero();
  Vec3 max = Vec3::Zero();
};

using Obstacle = std::variant<Sphere, Box>;

/// Distance from `p` to the obstacle surface, clamped to zero inside.
double distance_to(const Obstacle& obstacle, const Vec3& p);
/// Distance to the nearest obstacle; +inf when there are none.
double nearest_obstacle_distance(std::span<const Obstacle> obstacles, const Vec3& p);

}  // namespace liftdemo
