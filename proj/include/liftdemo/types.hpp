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

#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "liftdemo/dims.hpp"

namespace liftdemo {

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Quat = Eigen::Quaterniond;

struct Pose {
  Vec3 position = Vec3::Zero();
  Quat orientation = Quat::Identity();

  bool operator==(const Pose& o) const {
    return position == o.position && orientation.coeffs() == o.orientation.coeffs();
  }
};

/// One timestep (robot state, mode mask, world state).
///
/// The gripper is a normalized aperture: 1 fully open, 0 fully closed. It is
/// opening or closing whenever the aperture differs between consecutive
/// samples. The world state is reduced to the distance from the end-effector
/// to the nearest obstacle surface.
struct TrajectoryPoint {
  double t = 0.0;
  Pose pose;
  Vec6 vel = Vec6::Zero();  // vx vy vz wx wy wz, world frame
  double gripper = 1.0;
  ModeMask mask;
  double obstacle_dist = 0.0;

  bool operator==(const TrajectoryPoint& o) const {
    return t == o.t && pose == o.pose && vel == o.vel && gripper == o.gripper &&
           mask == o.mask && obstacle_dist == o.obstacle_dist;
  }
};

struct Demonstration {
  std::vector<TrajectoryPoint> points;
  double dt = 0.01;
  std::string interface;
  std::string task_label;
  /// Set on reconstructed output. A lifted demonstration is allowed to command
  /// more dimensions than the recording interface exposes.
  bool lifted = false;

  std::size_t size() const { return points.size(); }
  double duration() const {
    return points.empty() ? 0.0 : points.back().t - points.front().t;
  }
  bool operator==(const Demonstration&) const = default;
};

enum class SwitchStyle { kCyclic, kDirect };

struct InterfaceSpec {
  std::string name;
  int l = 1;  // simultaneously actuatable channels
  std::vector<ModeMask> modes;
  SwitchStyle switch_style = SwitchStyle::kCyclic;

  /// Index of `mask` in `modes`, or -1.
  int mode_index(ModeMask mask) const;
};

struct WarpSettings {
  /// Quaternion channel interpolation: shortest-arc slerp when true, otherwise
  /// normalized component-wise lerp.
  bool slerp_orientation = true;
};

struct ReconstructionConfig {
  int epsilon = 100;                        // minimum segment length, samples
  double delta = 0.05;                      // obstacle clearance, meters
  double activation_vel_threshold = 1e-3;   // fraction of per-class max speed
  WarpSettings warp;

  /// Throws InvalidArgument when a field is out of range.
  void check() const;
};

}  // namespace liftdemo
