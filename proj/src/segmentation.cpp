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

#include "liftdemo/segmentation.hpp"

#include <algorithm>
#include <cmath>

#include "liftdemo/errors.hpp"

namespace liftdemo {

ActivityScale ActivityScale::of(const Demonstration& demo) {
  ActivityScale s;
  for (const auto& p : demo.points) {
    for (int d = 0; d < 3; ++d) s.max_linear = std::max(s.max_linear, std::abs(p.vel[d]));
    for (int d = 3; d < 6; ++d) s.max_angular = std::max(s.max_angular, std::abs(p.vel[d]));
  }
  return s;
}

double ActivityScale::threshold(int dim, double fraction) const {
  return fraction * (is_linear(dim) ? max_linear : max_angular);
}

DimSet moving_dims(const TrajectoryPoint& p, const ActivityScale& scale, double fraction) {
  DimSet out;
  for (int d = 0; d < kNumMotionDims; ++d) {
    const double v = std::abs(p.vel[d]);
    if (v > 0.0 && v > scale.threshold(d, fraction)) out.set(d);
  }
  return out;
}

DimSet active_dims_of(const std::vector<TrajectoryPoint>& points, const ActivityScale& scale,
                      double fraction) {
  DimSet out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    out |= moving_dims(points[i], scale, fraction);
    if (i + 1 < points.size() && points[i].gripper != points[i + 1].gripper) {
      out.set(index(Dim::kGripper));
    }
  }
  return out;
}

std::vector<Segment> segment_by_mode(const Demonstration& demo, const ReconstructionConfig& cfg) {
  cfg.check();
  const auto& pts = demo.points;
  if (pts.empty()) throw EmptyResult("demonstration has no points");

  const ActivityScale scale = ActivityScale::of(demo);
  const auto eps = static_cast<std::size_t>(cfg.epsilon);
  std::vector<Segment> out;

  std::size_t begin = 0;
  std::size_t len = 1;
  auto close = [&]() {
    if (len < eps) return;
    Segment s;
    s.points.assign(pts.begin() + static_cast<std::ptrdiff_t>(begin),
                    pts.begin() + static_cast<std::ptrdiff_t>(begin + len));
    s.mask = pts[begin].mask;
    s.active_dims = active_dims_of(s.points, scale, cfg.activation_vel_threshold);
    s.provenance = {{begin, begin + len}};
    out.push_back(std::move(s));
  };

  const std::size_t last = pts.size() - 1;
  for (std::size_t t = 1; t <= last; ++t) {
    const ModeMask prev = pts[t - 1].mask;
    const ModeMask cur = pts[t].mask;
    if (t < last && prev != cur && cur != pts[t + 1].mask) continue;  // cycling transient
    if (prev == cur) {
      ++len;
    } else {
      close();
      begin = t;
      len = 1;
    }
  }
  close();

  if (out.empty()) throw EmptyResult("no segment reaches the minimum length");
  return out;
}

}  // namespace liftdemo
