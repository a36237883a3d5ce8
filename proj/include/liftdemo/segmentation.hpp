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

#include <cstddef>
#include <vector>

#include "liftdemo/types.hpp"

namespace liftdemo {

/// Half-open range [begin, end) of point indices in the source demonstration.
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool operator==(const IndexRange&) const = default;
};

/// A contiguous run of samples under one control mode.
struct Segment {
  std::vector<TrajectoryPoint> points;
  ModeMask mask;
  DimSet active_dims;
  bool env_constrained = false;
  bool task_constrained = false;
  /// Source index ranges, in temporal order. One range for a raw segment;
  /// merging concatenates.
  std::vector<IndexRange> provenance;

  std::size_t size() const { return points.size(); }
  bool constrained() const { return env_constrained || task_constrained; }
  double duration() const {
    return points.empty() ? 0.0 : points.back().t - points.front().t;
  }
  bool operator==(const Segment&) const = default;
};

/// Per-class speed scale used to decide whether a dimension is moving.
struct ActivityScale {
  double max_linear = 0.0;
  double max_angular = 0.0;

  static ActivityScale of(const Demonstration& demo);
  double threshold(int dim, double fraction) const;
};

/// Motion dims whose |velocity| exceeds `fraction` of the class maximum at
/// `p`. The gripper is not included.
DimSet moving_dims(const TrajectoryPoint& p, const ActivityScale& scale, double fraction);

/// Motion dims moving anywhere in `points`, plus the gripper when its
/// aperture changes between consecutive samples.
DimSet active_dims_of(const std::vector<TrajectoryPoint>& points, const ActivityScale& scale,
                      double fraction);

/// Splits `demo` into mode-contiguous segments. Single-sample modes sandwiched
/// between two different modes are mode-cycling transients and are dropped;
/// segments shorter than cfg.epsilon are mode-switch artifacts and are dropped.
/// The final point is never treated as a transient. Throws EmptyResult when
/// nothing survives.
std::vector<Segment> segment_by_mode(const Demonstration& demo, const ReconstructionConfig& cfg);

}  // namespace liftdemo
