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

#include <optional>
#include <vector>

#include "liftdemo/interfaces.hpp"
#include "liftdemo/segmentation.hpp"

namespace liftdemo {

/// Resamples `seg` to `target_len` samples at uniformly spaced parameter
/// values. Translation and velocity are interpolated linearly, orientation
/// along the shortest arc, gripper and mask are held from the nearest
/// preceding sample. Each obstacle-distance sample is the smaller of the
/// interpolated value and every source sample swept since the previous target
/// sample, so the channel minimum survives stretching. Timestamps keep the
/// segment's start and span `target_duration` (default: source sample period
/// times target_len - 1).
///
/// Throws DegenerateSegment for fewer than two samples and InvalidArgument
/// when target_len is shorter than the segment.
Segment time_warp(const Segment& seg, std::size_t target_len, const WarpSettings& warp = {},
                  std::optional<double> target_duration = std::nullopt);

/// Composes two adjacent, unconstrained segments with disjoint active
/// dimensions into one. The shorter is stretched to the longer. Each
/// translation axis follows the segment that moves it (the first segment when
/// neither does). Rotations compose in the world frame. Mask is the union,
/// gripper comes from the first segment, obstacle distance is the pointwise
/// minimum. The step from the last sample of s1 to the first of s2 is spread
/// linearly over the channels taken from s1, so the result ends where s2 does.
/// Velocities are finite differences of the composed pose.
Segment reconstruct_segments(const Segment& s1, const Segment& s2, const WarpSettings& warp = {});

struct ReconstructionResult {
  Demonstration raw;
  /// Output of segmentation, with constraint flags populated.
  std::vector<Segment> segments;
  /// Fixpoint of the merge passes.
  std::vector<Segment> lifted_segments;
  /// Where each lifted segment lands in `reconstructed`.
  std::vector<IndexRange> output_ranges;
  Demonstration reconstructed;

  std::size_t merges() const { return segments.size() - lifted_segments.size(); }
};

/// Full pipeline: segment by mode, merge under constraints, stitch the result
/// into one demonstration re-based to t = 0 with uniform dt.
ReconstructionResult reconstruct_demo(const Demonstration& demo, const InterfaceSpec& spec,
                                      const ReconstructionConfig& cfg);

/// Concatenates segments into a demonstration with t_i = i * dt.
Demonstration stitch(const std::vector<Segment>& segs, const Demonstration& like,
                     std::vector<IndexRange>* ranges = nullptr);

/// Finite-difference velocities of a pose trace sampled every `dt`. Forward
/// differences, the final sample repeats the last difference.
std::vector<Vec6> finite_difference_velocities(const std::vector<Pose>& poses, double dt);

}  // namespace liftdemo
