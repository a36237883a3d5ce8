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

#include "liftdemo/reconstruction.hpp"

#include <algorithm>
#include <cmath>

#include "liftdemo/constraints.hpp"
#include "liftdemo/errors.hpp"
#include "liftdemo/geometry.hpp"

namespace liftdemo {

namespace {

template <typename T>
T lerp(const T& a, const T& b, double f) {
  return (1.0 - f) * a + f * b;
}

using Vec4 = Eigen::Vector4d;

constexpr DimSet kAngular = DimSet{Dim::kWx, Dim::kWy, Dim::kWz};

}  // namespace

Segment time_warp(const Segment& seg, std::size_t target_len, const WarpSettings& warp,
                  std::optional<double> target_duration) {
  const std::size_t n = seg.size();
  if (n < 2) throw DegenerateSegment("time warp needs at least two samples");
  if (target_len < n) {
    throw InvalidArgument("time warp target length " + std::to_string(target_len) +
                          " is shorter than the segment (" + std::to_string(n) + ")");
  }
  const double src_period = seg.duration() / static_cast<double>(n - 1);
  const double span = target_duration.value_or(src_period * static_cast<double>(target_len - 1));
  const double t0 = seg.points.front().t;
  const double scale = static_cast<double>(n - 1) / static_cast<double>(target_len - 1);

  Segment out = seg;
  out.points.resize(target_len);
  std::size_t swept = 0;  // last source index folded into the distance channel
  for (std::size_t j = 0; j < target_len; ++j) {
    const double u = static_cast<double>(j) * scale;
    const auto hold = std::min(static_cast<std::size_t>(std::floor(u)), n - 1);
    const std::size_t i0 = std::min(hold, n - 2);
    const double f = u - static_cast<double>(i0);
    const TrajectoryPoint& a = seg.points[i0];
    const TrajectoryPoint& b = seg.points[i0 + 1];
    const TrajectoryPoint& h = seg.points[hold];

    TrajectoryPoint p;
    p.t = j + 1 == target_len && j > 0
              ? t0 + span
              : t0 + span * static_cast<double>(j) / static_cast<double>(target_len - 1);
    p.pose.position = lerp(a.pose.position, b.pose.position, f);
    if (warp.slerp_orientation) {
      p.pose.orientation = slerp_exact(a.pose.orientation, b.pose.orientation, f);
    } else if (f <= 0.0) {
      p.pose.orientation = a.pose.orientation;
    } else if (f >= 1.0) {
      p.pose.orientation = b.pose.orientation;
    } else {
      Vec4 qb = b.pose.orientation.coeffs();
      if (a.pose.orientation.coeffs().dot(qb) < 0.0) qb = -qb;
      p.pose.orientation = Quat(lerp<Vec4>(a.pose.orientation.coeffs(), qb, f)).normalized();
    }
    p.vel = lerp(a.vel, b.vel, f);
    p.gripper = h.gripper;
    p.mask = h.mask;

    double dist = lerp(a.obstacle_dist, b.obstacle_dist, f);
    if (j == 0) {
      dist = seg.points.front().obstacle_dist;
      swept = 0;
    } else {
      for (; swept + 1 <= hold; ++swept) dist = std::min(dist, seg.points[swept + 1].obstacle_dist);
    }
    p.obstacle_dist = dist;
    out.points[j] = p;
  }
  return out;
}

std::vector<Vec6> finite_difference_velocities(const std::vector<Pose>& poses, double dt) {
  std::vector<Vec6> v(poses.size(), Vec6::Zero());
  if (poses.size() < 2) return v;
  for (std::size_t k = 0; k + 1 < poses.size(); ++k) {
    v[k].head<3>() = (poses[k + 1].position - poses[k].position) / dt;
    v[k].tail<3>() =
        rotation_vector(poses[k + 1].orientation * poses[k].orientation.conjugate()) / dt;
  }
  v.back() = v[v.size() - 2];
  return v;
}

Segment reconstruct_segments(const Segment& s1, const Segment& s2, const WarpSettings& warp) {
  if (s1.size() < 2 || s2.size() < 2) {
    throw DegenerateSegment("cannot compose segments shorter than two samples");
  }
  if (s1.constrained() || s2.constrained()) {
    throw ConstraintViolation("refusing to compose a task- or environment-constrained segment");
  }
  if (!s1.active_dims.disjoint(s2.active_dims)) {
    throw OverlapError("segments command overlapping dimensions " +
                       (s1.active_dims & s2.active_dims).to_string());
  }

  // Ties stretch the first segment.
  const bool stretch_first = s1.size() <= s2.size();
  const Segment& longer = stretch_first ? s2 : s1;
  const std::size_t n = longer.size();
  const double period = longer.duration() / static_cast<double>(n - 1);
  const Segment w1 = stretch_first ? time_warp(s1, n, warp, longer.duration()) : s1;
  const Segment w2 = stretch_first ? s2 : time_warp(s2, n, warp, longer.duration());

  const bool rot1 = !(s1.active_dims & kAngular).empty();
  const bool rot2 = !(s2.active_dims & kAngular).empty();
  const Quat q2_start_inv = w2.points.front().pose.orientation.conjugate();
  // Motion between the last sample of s1 and the first of s2 belongs to
  // neither range. It is ramped into the channels taken from s1.
  const Pose& s1_end = s1.points.back().pose;
  const Pose& s2_start = s2.points.front().pose;
  const Vec3 gap_lin = s2_start.position - s1_end.position;
  const Quat gap_rot = (s2_start.orientation * s1_end.orientation.conjugate()).normalized();

  Segment out;
  out.points.resize(n);
  std::vector<Pose> poses(n);
  const double t0 = s1.points.front().t;
  for (std::size_t k = 0; k < n; ++k) {
    const TrajectoryPoint& a = w1.points[k];
    const TrajectoryPoint& b = w2.points[k];
    TrajectoryPoint& p = out.points[k];
    p.t = k + 1 == n ? t0 + longer.duration() : t0 + period * static_cast<double>(k);
    const double tau = static_cast<double>(k) / static_cast<double>(n - 1);
    for (int d = 0; d < 3; ++d) {
      const bool from_second = !s1.active_dims.test(d) && s2.active_dims.test(d);
      p.pose.position[d] =
          from_second ? b.pose.position[d] : a.pose.position[d] + tau * gap_lin[d];
    }
    const Quat a_rot = k + 1 == n ? gap_rot * a.pose.orientation
                                  : Quat::Identity().slerp(tau, gap_rot) * a.pose.orientation;
    if (rot1 && rot2) {
      p.pose.orientation = (b.pose.orientation * q2_start_inv * a_rot).normalized();
    } else if (rot2) {
      p.pose.orientation = b.pose.orientation;
    } else {
      p.pose.orientation = a_rot.normalized();
    }
    p.gripper = a.gripper;
    p.mask = a.mask | b.mask;
    p.obstacle_dist = std::min(a.obstacle_dist, b.obstacle_dist);
    poses[k] = p.pose;
  }
  const auto vel = finite_difference_velocities(poses, period);
  for (std::size_t k = 0; k < n; ++k) out.points[k].vel = vel[k];

  out.mask = s1.mask | s2.mask;
  out.active_dims = s1.active_dims | s2.active_dims;
  out.provenance = s1.provenance;
  out.provenance.insert(out.provenance.end(), s2.provenance.begin(), s2.provenance.end());
  return out;
}

Demonstration stitch(const std::vector<Segment>& segs, const Demonstration& like,
                     std::vector<IndexRange>* ranges) {
  Demonstration out;
  out.dt = like.dt;
  out.interface = like.interface;
  out.task_label = like.task_label;
  out.lifted = like.lifted;
  if (ranges) ranges->clear();
  for (const auto& s : segs) {
    const std::size_t begin = out.points.size();
    out.points.insert(out.points.end(), s.points.begin(), s.points.end());
    if (ranges) ranges->push_back({begin, out.points.size()});
  }
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    out.points[i].t = static_cast<double>(i) * like.dt;
  }
  return out;
}

ReconstructionResult reconstruct_demo(const Demonstration& demo, const InterfaceSpec& spec,
                                      const ReconstructionConfig& cfg) {
  cfg.check();
  const ValidationReport report = validate_demonstration(demo, spec);
  if (!report.ok()) throw InvalidArgument("invalid demonstration: " + report.summary());

  ReconstructionResult r;
  r.raw = demo;
  r.segments = segment_by_mode(demo, cfg);
  flag_constraints(r.segments, cfg.delta);
  r.lifted_segments = apply_constraints(r.segments, cfg);

  Demonstration like;
  like.dt = demo.dt;
  like.interface = demo.interface;
  like.task_label = demo.task_label;
  like.lifted = demo.lifted || r.merges() > 0;
  r.reconstructed = stitch(r.lifted_segments, like, &r.output_ranges);
  return r;
}

}  // namespace liftdemo
