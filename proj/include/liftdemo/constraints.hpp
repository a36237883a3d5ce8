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

#include <vector>

#include "liftdemo/segmentation.hpp"

namespace liftdemo {

/// True iff any sample comes strictly closer than `delta` to an obstacle.
bool environ_constrained(const Segment& seg, double delta);

/// True iff the gripper aperture changes between any consecutive samples.
bool task_constrained(const Segment& seg);

/// Populates both constraint flags on every segment.
void flag_constraints(std::vector<Segment>& segs, double delta);

/// Two segments may be composed when neither is constrained, both have at
/// least two samples, and they command disjoint dimensions.
bool mergeable(const Segment& a, const Segment& b);

/// Repeated left-to-right passes over adjacent pairs. Each unconstrained,
/// mergeable pair is replaced by its composition and the pass continues after
/// the merged segment; passes repeat until one makes no change.
std::vector<Segment> apply_constraints(std::vector<Segment> segs, const ReconstructionConfig& cfg);

}  // namespace liftdemo
