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

#include "liftdemo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace liftdemo {

Vec3 rotation_vector(const Quat& q_in) {
  Quat q = q_in.normalized();
  if (q.w() < 0.0) q.coeffs() = -q.coeffs();
  const double s = q.vec().norm();
  if (s < 1e-12) return 2.0 * q.vec();
  const double angle = 2.0 * std::atan2(s, q.w());
  return q.vec() * (angle / s);
}

Quat quat_from_rotation_vector(const Vec3& rv) {
  const double angle = rv.norm();
  if (angle < 1e-12) {
    Quat q(1.0, 0.5 * rv.x(), 0.5 * rv.y(), 0.5 * rv.z());
    return q.normalized();
  }
  return Quat(Eigen::AngleAxisd(angle, rv / angle));
}

double angular_distance(const Quat& a, const Quat& b) {
  return rotation_vector(b * a.conjugate()).norm();
}

Quat slerp_exact(const Quat& a, const Quat& b, double f) {
  if (f <= 0.0) return a;
  if (f >= 1.0) return b;
  return a.slerp(f, b).normalized();
}

double distance_to(const Obstacle& obstacle, const Vec3& p) {
  struct Visitor {
    const Vec3& p;
    double operator()(const Sphere& s) const {
      return std::max(0.0, (p - s.center).norm() - s.radius);
    }
    double operator()(const Box& b) const {
      const Vec3 outside = (b.min - p).cwiseMax(p - b.max).cwiseMax(0.0);
      return outside.norm();
    }
  };
  return std::visit(Visitor{p}, obstacle);
}

double nearest_obstacle_distance(std::span<const Obstacle> obstacles, const Vec3& p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& o : obstacles) best = std::min(best, distance_to(o, p));
  return best;
}

}  // namespace liftdemo
