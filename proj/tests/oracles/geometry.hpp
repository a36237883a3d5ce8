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

// Brute-force distance queries and closed-form path geometry.

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace liftdemo::oracle {

/// Minimum distance from `p` to an axis-aligned box surface by dense
/// sampling of its six faces. Zero when `p` is inside.
inline double box_distance_sampled(const Eigen::Vector3d& lo, const Eigen::Vector3d& hi,
                                   const Eigen::Vector3d& p, int n = 200) {
  if ((p.array() >= lo.array()).all() && (p.array() <= hi.array()).all()) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int axis = 0; axis < 3; ++axis) {
    const int u = (axis + 1) % 3;
    const int v = (axis + 2) % 3;
    for (double side : {lo[axis], hi[axis]}) {
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
          Eigen::Vector3d q;
          q[axis] = side;
          q[u] = lo[u] + (hi[u] - lo[u]) * i / n;
          q[v] = lo[v] + (hi[v] - lo[v]) * j / n;
          best = std::min(best, (q - p).norm());
        }
      }
    }
  }
  return best;
}

/// Smallest distance to a sphere surface along the segment a-b, found by
/// projecting the centre onto the segment.
inline double segment_sphere_clearance(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                                       const Eigen::Vector3d& c, double r) {
  const Eigen::Vector3d ab = b - a;
  const double s = std::clamp((c - a).dot(ab) / ab.squaredNorm(), 0.0, 1.0);
  return std::max(0.0, (a + s * ab - c).norm() - r);
}

/// Percent change from an L-shaped path with legs a and b to its hypotenuse.
inline double diagonal_distance_change_pct(double a, double b) {
  return (std::hypot(a, b) - (a + b)) / (a + b) * 100.0;
}

/// Percent change from sequential legs of durations ta and tb to max(ta, tb).
inline double parallel_time_change_pct(double ta, double tb) {
  return (std::max(ta, tb) - (ta + tb)) / (ta + tb) * 100.0;
}

}  // namespace liftdemo::oracle
