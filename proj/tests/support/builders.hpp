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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "liftdemo/generator.hpp"
#include "liftdemo/interfaces.hpp"
#include "liftdemo/scene.hpp"
#include "liftdemo/segmentation.hpp"

namespace liftdemo::testing {

inline ModeMask one_hot(int d) {
  ModeMask m;
  m.set(d);
  return m;
}

/// Stationary demo at the origin with the given mask sequence.
inline Demonstration demo_from_masks(const std::vector<ModeMask>& masks, double dt = 0.01,
                                     const std::string& interface = "sippuff1d") {
  Demonstration d;
  d.dt = dt;
  d.interface = interface;
  d.task_label = "synthetic";
  for (std::size_t i = 0; i < masks.size(); ++i) {
    TrajectoryPoint p;
    p.t = static_cast<double>(i) * dt;
    p.mask = masks[i];
    p.obstacle_dist = 1.0;
    d.points.push_back(p);
  }
  return d;
}

/// Appends `n` copies of `m`.
inline void repeat(std::vector<ModeMask>& out, ModeMask m, std::size_t n) {
  out.insert(out.end(), n, m);
}

/// Constant-speed move of `dist` along motion dim `d` over `n` samples,
/// starting from `start`. Velocities are the exact per-sample rate.
inline Segment line_segment(int d, const Pose& start, double dist, std::size_t n, double dt = 0.01,
                            double t0 = 0.0, double obstacle = 1.0) {
  Segment s;
  s.mask = one_hot(d);
  s.active_dims = one_hot(d);
  const double rate = dist / (static_cast<double>(n - 1) * dt);
  for (std::size_t i = 0; i < n; ++i) {
    TrajectoryPoint p;
    p.t = t0 + static_cast<double>(i) * dt;
    p.pose = start;
    const double f = static_cast<double>(i) / static_cast<double>(n - 1);
    if (d < 3) {
      p.pose.position[d] += f * dist;
    } else {
      Vec3 axis = Vec3::Zero();
      axis[d - 3] = 1.0;
      p.pose.orientation =
          (Eigen::AngleAxisd(f * dist, axis) * start.orientation).normalized();
    }
    p.vel[d] = rate;
    p.mask = s.mask;
    p.obstacle_dist = obstacle;
    s.points.push_back(p);
  }
  s.provenance = {{0, n}};
  return s;
}

/// Turns a segment list into a contiguous demonstration.
inline Demonstration concat(const std::vector<Segment>& segs, double dt = 0.01,
                            const std::string& interface = "sippuff1d") {
  Demonstration d;
  d.dt = dt;
  d.interface = interface;
  d.task_label = "synthetic";
  for (const auto& s : segs) {
    for (auto p : s.points) {
      p.t = static_cast<double>(d.points.size()) * dt;
      d.points.push_back(p);
    }
  }
  return d;
}

inline Demonstration generated(const std::string& scene, const InterfaceSpec& spec,
                               std::uint64_t seed = 0, double noise = 0.0) {
  DemonstratorPolicy policy;
  policy.velocity_noise = noise;
  return generate_demo(*find_builtin_scene(scene), policy, spec, 0.01, seed);
}

/// Per-test scratch directory under the build tree.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const char* root = std::getenv("LIFTDEMO_TEST_TMP");
  std::filesystem::path p = root ? std::filesystem::path(root)
                                 : std::filesystem::temp_directory_path() / "liftdemo-tests";
  p /= name;
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace liftdemo::testing
