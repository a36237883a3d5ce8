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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "liftdemo/interfaces.hpp"
#include "liftdemo/metrics.hpp"
#include "liftdemo/reconstruction.hpp"
#include "liftdemo/scene.hpp"

namespace liftdemo {

inline constexpr int kDemoFormatVersion = 1;
inline constexpr const char* kDemoFormatName = "liftdemo.demo";

// Demonstration files are JSON Lines. The first line is a header
//   {"format":"liftdemo.demo","version":1,"dt":..,"interface":..,"task_label":..,"lifted":..}
// followed by one record per timestep with the fields
//   t px py pz qw qx qy qz vx vy vz wx wy wz gripper mask obstacle_dist
// where mask is a 7-character bitstring (vx first). Numbers are written in
// shortest round-trip form, so a write/read cycle is exact.

void write_demo(const Demonstration& demo, std::ostream& os);
void write_demo(const Demonstration& demo, const std::filesystem::path& path);

/// Parses and validates against the interface named in the header. Throws
/// ParseError (with line number) or VersionMismatch.
Demonstration read_demo(std::istream& is, const InterfaceRegistry& registry = {});
Demonstration read_demo(const std::filesystem::path& path, const InterfaceRegistry& registry = {});

nlohmann::json scene_to_json(const Scene& scene);
/// Throws ParseError on schema violations.
Scene scene_from_json(const nlohmann::json& j);
Scene load_scene(const std::filesystem::path& path);

nlohmann::json interface_to_json(const InterfaceSpec& spec);
InterfaceSpec interface_from_json(const nlohmann::json& j);

/// Segment boundaries, masks, active dims, constraint flags and provenance
/// before and after merging, plus where each lifted segment lands in the
/// reconstructed timeline.
nlohmann::json bundle_to_json(const ReconstructionResult& result, const ReconstructionConfig& cfg);

nlohmann::json segments_to_json(const std::vector<Segment>& segs);
nlohmann::json metrics_to_json(const MetricsReport& report);
nlohmann::json comparison_to_json(const ComparisonTable& table);

void write_json(const nlohmann::json& j, const std::filesystem::path& path);

/// Dimension-vs-time raster of moving dimensions with an activation
/// histogram beneath it. Optional segment ranges draw boundaries.
std::string activation_svg(const Demonstration& demo, const ReconstructionConfig& cfg,
                           const std::vector<IndexRange>& segment_ranges = {});

}  // namespace liftdemo
