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

#include "liftdemo/scene.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "liftdemo/errors.hpp"

namespace liftdemo {

namespace {

Pose make_pose(double x, double y, double z, double yaw_rad = 0.0) {
  Pose p;
  p.position = Vec3(x, y, z);
  p.orientation = Quat(Eigen::AngleAxisd(yaw_rad, Vec3::UnitZ()));
  return p;
}

Box table() { return Box{Vec3(-1.0, -1.0, -0.05), Vec3(1.0, 1.0, 0.0)}; }

DimSet moved_dims(const Pose& from, const Pose& to, ScriptTolerance tol) {
  DimSet dims;
  const Vec3 dp = to.position - from.position;
  const Vec3 dr = rotation_vector(to.orientation * from.orientation.conjugate());
  for (int a = 0; a < 3; ++a) {
    if (std::abs(dp[a]) > tol.linear) dims.set(a);
    if (std::abs(dr[a]) > tol.angular) dims.set(3 + a);
  }
  return dims;
}

}  // namespace

void Scene::check() const {
  if (waypoints.empty()) throw InvalidArgument("scene '" + name + "' has no waypoints");
  auto inside = [&](const Vec3& p) {
    return (p.array() >= bounds_min.array()).all() && (p.array() <= bounds_max.array()).all();
  };
  if (!inside(start.position)) {
    throw InvalidArgument("scene '" + name + "': start lies outside the workspace");
  }
  for (std::size_t i = 0; i < waypoints.size(); ++i) {
    if (!inside(waypoints[i].pose.position)) {
      throw InvalidArgument("scene '" + name + "': waypoint " + std::to_string(i) +
                            " lies outside the workspace");
    }
    if (waypoints[i].gripper < 0.0 || waypoints[i].gripper > 1.0) {
      throw InvalidArgument("scene '" + name + "': gripper target out of [0, 1]");
    }
  }
}

double Scene::obstacle_distance(const Vec3& p) const {
  return std::min(kFarObstacleDistance, nearest_obstacle_distance(obstacles, p));
}

std::vector<DimSet> scripted_regions(const Scene& scene, ScriptTolerance tol) {
  std::vector<DimSet> regions(1);
  Pose pose = scene.start;
  double gripper = scene.start_gripper;
  for (const Waypoint& w : scene.waypoints) {
    regions.back() |= moved_dims(pose, w.pose, tol);
    pose = w.pose;
    if (w.gripper != gripper) {
      gripper = w.gripper;
      regions.emplace_back();
    }
  }
  if (regions.size() > 1 && regions.back().empty()) regions.pop_back();
  return regions;
}

DimSet scripted_dims(const Scene& scene, ScriptTolerance tol) {
  DimSet all;
  for (DimSet r : scripted_regions(scene, tol)) all |= r;
  return all;
}

Scene translate_l_scene(double leg_x, double leg_y) {
  Scene s;
  s.name = "translate-L";
  s.description = "Orthogonal two-leg translation. No obstacles, no gripper action: every "
                  "segment is interface-constrained only.";
  s.obstacles = {};
  s.start = make_pose(0.0, 0.0, 0.3);
  s.waypoints = {{make_pose(leg_x, leg_y, 0.3), 1.0}};
  return s;
}

std::vector<Scene> builtin_scenes() {
  constexpr double kQuarterTurn = std::numbers::pi / 2.0;
  constexpr double kPegYaw = std::numbers::pi / 6.0;

  Scene pick;
  pick.name = "pick-place";
  pick.description = "Approach, close gripper, transport with a quarter turn, open, retreat. "
                     "Exercises task constraints; the table stays beyond the clearance.";
  pick.obstacles = {table()};
  pick.start = make_pose(0.0, 0.0, 0.3);
  pick.waypoints = {
      {make_pose(0.25, -0.2, 0.12), 1.0},
      {make_pose(0.25, -0.2, 0.12), 0.0},
      {make_pose(-0.25, 0.2, 0.25, kQuarterTurn), 0.0},
      {make_pose(-0.25, 0.2, 0.25, kQuarterTurn), 1.0},
      {make_pose(-0.25, 0.2, 0.35, kQuarterTurn), 1.0},
  };

  Scene corridor;
  corridor.name = "corridor";
  corridor.description = "Raise, pass a sphere at 3 cm clearance along x, then descend "
                         "sideways. Exercises the environment constraint mid-path.";
  corridor.obstacles = {table(), Sphere{Vec3(0.0, 0.08, 0.35), 0.05}};
  corridor.start = make_pose(-0.3, 0.0, 0.2);
  corridor.waypoints = {
      {make_pose(-0.3, 0.0, 0.35), 1.0},
      {make_pose(0.3, 0.0, 0.35), 1.0},
      {make_pose(0.3, 0.25, 0.2), 1.0},
  };

  Scene peg;
  peg.name = "peg";
  peg.description = "Align above a hole with 4 mm wall clearance and insert. The final "
                    "approach runs inside the clearance threshold (environment constraint).";
  peg.obstacles = {table(), Box{Vec3(0.1, 0.05, 0.0), Vec3(0.196, 0.15, 0.15)},
                   Box{Vec3(0.204, 0.05, 0.0), Vec3(0.3, 0.15, 0.15)}};
  peg.start = make_pose(0.0, 0.0, 0.35);
  peg.waypoints = {
      {make_pose(0.2, 0.1, 0.22, kPegYaw), 1.0},
      {make_pose(0.2, 0.1, 0.12, kPegYaw), 1.0},
  };

  return {translate_l_scene(), pick, corridor, peg};
}

std::optional<Scene> find_builtin_scene(std::string_view name) {
  for (auto& s : builtin_scenes()) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

}  // namespace liftdemo
