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

#include <gtest/gtest.h>

#include "liftdemo/constraints.hpp"
#include "liftdemo/errors.hpp"
#include "liftdemo/segmentation.hpp"
#include "support/builders.hpp"

namespace liftdemo {
namespace {

using testing::line_segment;

Segment with_distances(Segment s, double d) {
  for (auto& p : s.points) p.obstacle_dist = d;
  return s;
}

std::vector<Segment> chain(const std::vector<int>& dims, std::size_t n = 120) {
  std::vector<Segment> out;
  Pose at;
  std::size_t offset = 0;
  for (int d : dims) {
    Segment s = line_segment(d, at, 0.2, n, 0.01, static_cast<double>(offset) * 0.01);
    s.provenance = {{offset, offset + n}};
    at = s.points.back().pose;
    offset += n + 2;
    out.push_back(std::move(s));
  }
  return out;
}

TEST(EnvironConstrained, StrictThreshold) {
  Segment s = with_distances(line_segment(0, {}, 0.1, 10), 0.20);
  EXPECT_FALSE(environ_constrained(s, 0.05));
  s.points[4].obstacle_dist = 0.049;
  EXPECT_TRUE(environ_constrained(s, 0.05));
  s.points[4].obstacle_dist = 0.05;
  EXPECT_FALSE(environ_constrained(s, 0.05));
}

TEST(TaskConstrained, DetectsApertureChange) {
  Segment s = line_segment(0, {}, 0.1, 30);
  EXPECT_FALSE(task_constrained(s));
  for (std::size_t i = 0; i < s.size(); ++i) s.points[i].gripper = 1.0 - static_cast<double>(i) / 29.0;
  EXPECT_TRUE(task_constrained(s));
  Segment closed = line_segment(0, {}, 0.1, 30);
  for (auto& p : closed.points) p.gripper = 0.0;
  EXPECT_FALSE(task_constrained(closed));
}

TEST(Mergeable, Preconditions) {
  const auto segs = chain({0, 1});
  EXPECT_TRUE(mergeable(segs[0], segs[1]));
  EXPECT_FALSE(mergeable(segs[0], segs[0]));
  Segment c = segs[1];
  c.task_constrained = true;
  EXPECT_FALSE(mergeable(segs[0], c));
  Segment tiny = segs[1];
  tiny.points.resize(1);
  EXPECT_FALSE(mergeable(segs[0], tiny));
}

TEST(ApplyConstraints, TwoLegsMergeIntoOne) {
  const auto out = apply_constraints(chain({0, 1}), {});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].active_dims, DimSet({Dim::kVx, Dim::kVy}));
  EXPECT_EQ(out[0].provenance.size(), 2u);
}

TEST(ApplyConstraints, ConstrainedMiddleBlocksBothPairs) {
  auto segs = chain({0, 1, 2});
  for (std::size_t i = 0; i < segs[1].size(); ++i) {
    segs[1].points[i].gripper = i < 60 ? 1.0 : 0.5;
  }
  const auto out = apply_constraints(segs, {});
  ASSERT_EQ(out.size(), 3u);
  EXPECT_TRUE(out[1].task_constrained);
  EXPECT_EQ(out[1].points, segs[1].points);
  EXPECT_EQ(out[0].points, segs[0].points);
  EXPECT_EQ(out[2].points, segs[2].points);
}

TEST(ApplyConstraints, FourOneHotSegmentsCollapse) {
  const auto out = apply_constraints(chain({0, 1, 2, 3}), {});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].active_dims, DimSet({Dim::kVx, Dim::kVy, Dim::kVz, Dim::kWx}));
  ASSERT_EQ(out[0].provenance.size(), 4u);
  for (std::size_t i = 1; i < 4; ++i) {
    EXPECT_LT(out[0].provenance[i - 1].begin, out[0].provenance[i].begin);
  }
}

TEST(ApplyConstraints, OverlappingDimsAreNotMerged) {
  const auto out = apply_constraints(chain({0, 1, 0}), {});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].active_dims, DimSet({Dim::kVx, Dim::kVy}));
  EXPECT_EQ(out[1].active_dims, DimSet({Dim::kVx}));
}

TEST(ApplyConstraints, EnvironmentConstraintBlocksMerge) {
  auto segs = chain({0, 1, 2});
  segs[2] = with_distances(segs[2], 0.01);
  const auto out = apply_constraints(segs, {});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_TRUE(out[1].env_constrained);
  EXPECT_EQ(out[1].points, segs[2].points);
}

TEST(ApplyConstraints, OutputIsAFixpoint) {
  for (const auto& dims : std::vector<std::vector<int>>{{0, 1}, {0, 1, 2, 3, 4}, {0, 1, 0, 2}, {5, 0, 5}}) {
    const auto once = apply_constraints(chain(dims), {});
    EXPECT_EQ(apply_constraints(once, {}), once);
  }
}

TEST(ApplyConstraints, MergesNeverSpanConstrainedSegments) {
  auto segs = chain({0, 1, 2, 3, 4, 5});
  segs[3] = with_distances(segs[3], 0.0);
  const auto out = apply_constraints(segs, {});
  for (const auto& s : out) {
    for (const auto& r : s.provenance) {
      if (s.provenance.size() > 1) EXPECT_NE(r, segs[3].provenance[0]);
    }
  }
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[1].points, segs[3].points);
}

TEST(ApplyConstraints, PickPlaceGripperSegmentsAreTaskConstrained) {
  const Demonstration demo = testing::generated("pick-place", sippuff1d(), 2);
  auto segs = segment_by_mode(demo, {});
  flag_constraints(segs, 0.05);
  int task = 0;
  for (const auto& s : segs) {
    if (s.task_constrained) {
      ++task;
      EXPECT_TRUE(s.mask.test(Dim::kGripper));
    }
  }
  EXPECT_EQ(task, 2);
}

TEST(ApplyConstraints, CorridorMidPathSegmentIsEnvironmentConstrained) {
  const Demonstration demo = testing::generated("corridor", sippuff1d(), 2);
  auto segs = segment_by_mode(demo, {});
  flag_constraints(segs, 0.05);
  bool env = false;
  for (const auto& s : segs) env |= s.env_constrained && s.active_dims.test(Dim::kVx);
  EXPECT_TRUE(env);
}

TEST(ApplyConstraints, RejectsInvalidConfig) {
  ReconstructionConfig bad;
  bad.delta = -1.0;
  EXPECT_THROW(apply_constraints(chain({0, 1}), bad), InvalidArgument);
}

}  // namespace
}  // namespace liftdemo
