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

#include "liftdemo/constraints.hpp"

#include <algorithm>

#include "liftdemo/reconstruction.hpp"

namespace liftdemo {

bool environ_constrained(const Segment& seg, double delta) {
  return std::any_of(seg.points.begin(), seg.points.end(),
                     [&](const TrajectoryPoint& p) { return p.obstacle_dist < delta; });
}

bool task_constrained(const Segment& seg) {
  return std::adjacent_find(seg.points.begin(), seg.points.end(),
                            [](const TrajectoryPoint& a, const TrajectoryPoint& b) {
                              return a.gripper != b.gripper;
                            }) != seg.points.end();
}

void flag_constraints(std::vector<Segment>& segs, double delta) {
  for (auto& s : segs) {
    s.env_constrained = environ_constrained(s, delta);
    s.task_constrained = task_constrained(s);
  }
}

bool mergeable(const Segment& a, const Segment& b) {
  return !a.constrained() && !b.constrained() && a.size() >= 2 && b.size() >= 2 &&
         a.active_dims.disjoint(b.active_dims);
}

std::vector<Segment> apply_constraints(std::vector<Segment> segs,
                                       const ReconstructionConfig& cfg) {
  cfg.check();
  flag_constraints(segs, cfg.delta);

  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t i = 0;
    while (i + 1 < segs.size()) {
      if (segs[i].constrained() || segs[i + 1].constrained() || !mergeable(segs[i], segs[i + 1])) {
        ++i;
        continue;
      }
      Segment merged = reconstruct_segments(segs[i], segs[i + 1], cfg.warp);
      merged.env_constrained = environ_constrained(merged, cfg.delta);
      merged.task_constrained = task_constrained(merged);
      segs[i] = std::move(merged);
      segs.erase(segs.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      changed = true;
      ++i;
    }
  }
  return segs;
}

}  // namespace liftdemo
