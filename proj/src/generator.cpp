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

#include "liftdemo/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "liftdemo/errors.hpp"
#include "liftdemo/interfaces.hpp"

namespace liftdemo {

void DemonstratorPolicy::check() const {
  if (!(max_lin_speed > 0.0) || !(max_ang_speed > 0.0) || !(gripper_speed > 0.0)) {
    throw InvalidArgument("demonstrator speeds must be positive");
  }
  if (!(lin_tolerance > 0.0) || !(ang_tolerance > 0.0)) {
    throw InvalidArgument("demonstrator tolerances must be positive");
  }
  if (!(gain > 0.0)) throw InvalidArgument("demonstrator gain must be positive");
  if (mode_switch_duration < 0.0 || velocity_noise < 0.0 || waypoint_jitter < 0.0) {
    throw InvalidArgument("demonstrator durations and noise levels must be non-negative");
  }
  if (min_mode_samples < 1 || stall_horizon < 1 || max_samples < 1) {
    throw InvalidArgument("demonstrator sample counts must be positive");
  }
  if (stall_horizon <= min_mode_samples) {
    throw InvalidArgument("stall horizon must exceed the minimum mode dwell");
  }
}

namespace {

class Demonstrator {
 public:
  Demonstrator(const Scene& scene, const DemonstratorPolicy& policy, const InterfaceSpec& spec,
               double dt, std::uint64_t seed)
      : scene_(scene), policy_(policy), spec_(spec), dt_(dt), rng_(seed) {
    pose_ = scene.start;
    gripper_ = scene.start_gripper;
    targets_ = jitter_waypoints();
    demo_.dt = dt;
    demo_.interface = spec.name;
    demo_.task_label = scene.name;
  }

  Demonstration run() {
    std::size_t w = 0;
    double best_error = std::numeric_limits<double>::infinity();
    int since_progress = 0;

    while (true) {
      DimSet todo;
      while (w < targets_.size() && (todo = unconverged(targets_[w])).empty()) {
        ++w;
        best_error = std::numeric_limits<double>::infinity();
        since_progress = 0;
      }
      if (w == targets_.size()) break;

      const double err = error_norm(targets_[w]);
      if (err < best_error - 1e-12) {
        best_error = err;
        since_progress = 0;
      } else if (++since_progress > policy_.stall_horizon) {
        throw UnreachableWaypoint(w, "demonstrator stalled before waypoint " +
                                         std::to_string(w) + " of scene '" + scene_.name + "'");
      }

      if (mode_ < 0) {
        mode_ = pick_mode(todo);
        phase_len_ = 0;
      } else if ((spec_.modes[static_cast<std::size_t>(mode_)] & todo).empty()) {
        if (phase_len_ < policy_.min_mode_samples) {
          emit_idle(spec_.modes[static_cast<std::size_t>(mode_)]);
          continue;
        }
        switch_to(pick_mode(todo));
      }
      step_toward(targets_[w]);
    }

    if (mode_ < 0) mode_ = 0;
    do {
      emit_idle(spec_.modes[static_cast<std::size_t>(mode_)]);
    } while (phase_len_ < policy_.min_mode_samples);
    return std::move(demo_);
  }

 private:
  std::vector<Waypoint> jitter_waypoints() {
    std::vector<Waypoint> out = scene_.waypoints;
    if (policy_.waypoint_jitter <= 0.0) return out;
    std::uniform_real_distribution<double> u(-policy_.waypoint_jitter, policy_.waypoint_jitter);
    Vec3 prev_orig = scene_.start.position;
    Vec3 prev_new = prev_orig;
    for (auto& wp : out) {
      const Vec3 orig = wp.pose.position;
      for (int a = 0; a < 3; ++a) {
        if (orig[a] == prev_orig[a]) {
          wp.pose.position[a] = prev_new[a];
        } else {
          wp.pose.position[a] = std::clamp(orig[a] + u(rng_), scene_.bounds_min[a],
                                           scene_.bounds_max[a]);
        }
      }
      prev_orig = orig;
      prev_new = wp.pose.position;
    }
    return out;
  }

  Vec3 lin_error(const Waypoint& wp) const { return wp.pose.position - pose_.position; }
  Vec3 ang_error(const Waypoint& wp) const {
    return rotation_vector(wp.pose.orientation * pose_.orientation.conjugate());
  }

  double error_norm(const Waypoint& wp) const {
    return lin_error(wp).norm() + ang_error(wp).norm() + std::abs(wp.gripper - gripper_);
  }

  DimSet unconverged(const Waypoint& wp) const {
    DimSet out;
    const Vec3 el = lin_error(wp);
    const Vec3 ea = ang_error(wp);
    for (int a = 0; a < 3; ++a) {
      if (std::abs(el[a]) > policy_.lin_tolerance) out.set(a);
      if (std::abs(ea[a]) > policy_.ang_tolerance) out.set(3 + a);
    }
    if (wp.gripper != gripper_) out.set(index(Dim::kGripper));
    return out;
  }

  int pick_mode(DimSet todo) const {
    for (Dim d : policy_.preference) {
      if (!todo.test(d)) continue;
      for (std::size_t m = 0; m < spec_.modes.size(); ++m) {
        if (spec_.modes[m].test(d)) return static_cast<int>(m);
      }
    }
    throw InvalidArgument("interface '" + spec_.name + "' cannot reach the requested dims");
  }

  void switch_to(int target) {
    if (target == mode_) return;
    if (spec_.switch_style == SwitchStyle::kCyclic) {
      const int n = static_cast<int>(spec_.modes.size());
      const int forward = ((target - mode_) % n + n) % n;
      const int backward = n - forward;
      const int step = forward <= backward ? 1 : -1;
      const int max_samples =
          std::max(1, static_cast<int>(std::lround(policy_.mode_switch_duration / dt_)));
      std::uniform_int_distribution<int> count(1, max_samples);
      for (int m = (mode_ + step + n) % n; m != target; m = (m + step + n) % n) {
        const int k = count(rng_);
        for (int i = 0; i < k; ++i) record(Vec6::Zero(), spec_.modes[static_cast<std::size_t>(m)]);
      }
    }
    mode_ = target;
    phase_len_ = 0;
  }

  void emit_idle(ModeMask mask) {
    record(Vec6::Zero(), mask);
    ++phase_len_;
  }

  void step_toward(const Waypoint& wp) {
    const ModeMask mask = spec_.modes[static_cast<std::size_t>(mode_)];
    const Vec3 el = lin_error(wp);
    const Vec3 ea = ang_error(wp);
    Vec6 v = Vec6::Zero();
    std::normal_distribution<double> noise(0.0, 1.0);
    for (int a = 0; a < 3; ++a) {
      if (mask.test(a) && std::abs(el[a]) > policy_.lin_tolerance) {
        v[a] = std::clamp(policy_.gain * el[a], -policy_.max_lin_speed, policy_.max_lin_speed);
      }
      if (mask.test(3 + a) && std::abs(ea[a]) > policy_.ang_tolerance) {
        v[3 + a] =
            std::clamp(policy_.gain * ea[a], -policy_.max_ang_speed, policy_.max_ang_speed);
      }
    }
    if (policy_.velocity_noise > 0.0) {
      for (int d = 0; d < kNumMotionDims; ++d) {
        if (v[d] == 0.0) continue;
        const double cap = d < 3 ? policy_.max_lin_speed : policy_.max_ang_speed;
        v[d] += policy_.velocity_noise * cap * noise(rng_);
      }
    }
    double grip_step = 0.0;
    if (mask.test(Dim::kGripper)) {
      const double max_step = policy_.gripper_speed * dt_;
      grip_step = std::clamp(wp.gripper - gripper_, -max_step, max_step);
    }
    record(v, mask);
    ++phase_len_;

    pose_.position += v.head<3>() * dt_;
    const Vec3 w = v.tail<3>();
    if (!w.isZero(0.0)) {
      pose_.orientation = (quat_from_rotation_vector(w * dt_) * pose_.orientation).normalized();
    }
    gripper_ = std::abs(wp.gripper - gripper_) <= std::abs(grip_step) ? wp.gripper
                                                                       : gripper_ + grip_step;
  }

  void record(const Vec6& v, ModeMask mask) {
    if (static_cast<int>(demo_.points.size()) >= policy_.max_samples) {
      throw UnreachableWaypoint(0, "demonstration of scene '" + scene_.name +
                                       "' exceeded the sample budget");
    }
    TrajectoryPoint p;
    p.t = static_cast<double>(demo_.points.size()) * dt_;
    p.pose = pose_;
    p.vel = v;
    p.gripper = gripper_;
    p.mask = mask;
    p.obstacle_dist = scene_.obstacle_distance(pose_.position);
    demo_.points.push_back(p);
  }

  const Scene& scene_;
  const DemonstratorPolicy& policy_;
  const InterfaceSpec& spec_;
  double dt_;
  std::mt19937_64 rng_;
  std::vector<Waypoint> targets_;
  Pose pose_;
  double gripper_ = 1.0;
  int mode_ = -1;
  int phase_len_ = 0;
  Demonstration demo_;
};

}  // namespace

Demonstration generate_demo(const Scene& scene, const DemonstratorPolicy& policy,
                            const InterfaceSpec& spec, double dt, std::uint64_t seed) {
  scene.check();
  policy.check();
  check_interface(spec);
  if (!(dt > 0.0)) throw InvalidArgument("dt must be positive");
  return Demonstrator(scene, policy, spec, dt, seed).run();
}

}  // namespace liftdemo
