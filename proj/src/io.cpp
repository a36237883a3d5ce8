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

#include "liftdemo/io.hpp"

#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "liftdemo/errors.hpp"

namespace liftdemo {

using nlohmann::json;

namespace {

constexpr std::array<const char*, 17> kColumns = {
    "t",  "px", "py", "pz", "qw", "qx", "qy",      "qz",  "vx",
    "vy", "vz", "wx", "wy", "wz", "gripper", "mask", "obstacle_dist"};

double number(const json& rec, const char* key, std::size_t line) {
  const auto it = rec.find(key);
  if (it == rec.end()) throw ParseError(line, std::string("missing column '") + key + "'");
  if (!it->is_number()) throw ParseError(line, std::string("column '") + key + "' is not a number");
  return it->get<double>();
}

std::string text(const json& rec, const char* key, std::size_t line) {
  const auto it = rec.find(key);
  if (it == rec.end()) throw ParseError(line, std::string("missing field '") + key + "'");
  if (!it->is_string()) throw ParseError(line, std::string("field '") + key + "' is not a string");
  return it->get<std::string>();
}

json parse_line(const std::string& s, std::size_t line) {
  try {
    json j = json::parse(s);
    if (!j.is_object()) throw ParseError(line, "record is not a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw ParseError(line, std::string("malformed JSON: ") + e.what());
  }
}

json vec3_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

Vec3 vec3_from(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) {
    throw ParseError(0, std::string(what) + " must be an array of 3 numbers");
  }
  try {
    return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
  } catch (const json::exception&) {
    throw ParseError(0, std::string(what) + " must be an array of 3 numbers");
  }
}

json pose_json(const Pose& p) {
  const Quat& q = p.orientation;
  return {{"position", vec3_json(p.position)},
          {"orientation", json::array({q.w(), q.x(), q.y(), q.z()})}};
}

Pose pose_from(const json& j) {
  Pose p;
  if (!j.is_object() || !j.contains("position")) throw ParseError(0, "pose needs a position");
  p.position = vec3_from(j["position"], "position");
  if (j.contains("orientation")) {
    const auto& o = j["orientation"];
    if (!o.is_array() || o.size() != 4) {
      throw ParseError(0, "orientation must be [w, x, y, z]");
    }
    p.orientation =
        Quat(o[0].get<double>(), o[1].get<double>(), o[2].get<double>(), o[3].get<double>())
            .normalized();
  }
  return p;
}

json range_json(const IndexRange& r) { return json::array({r.begin, r.end}); }

}  // namespace

void write_demo(const Demonstration& demo, std::ostream& os) {
  json header = {{"format", kDemoFormatName}, {"version", kDemoFormatVersion},
                 {"dt", demo.dt},             {"interface", demo.interface},
                 {"task_label", demo.task_label}, {"lifted", demo.lifted}};
  os << header.dump() << '\n';
  for (const auto& p : demo.points) {
    const Quat& q = p.pose.orientation;
    // Ordered output keeps files diffable.
    nlohmann::ordered_json rec;
    rec["t"] = p.t;
    rec["px"] = p.pose.position.x();
    rec["py"] = p.pose.position.y();
    rec["pz"] = p.pose.position.z();
    rec["qw"] = q.w();
    rec["qx"] = q.x();
    rec["qy"] = q.y();
    rec["qz"] = q.z();
    rec["vx"] = p.vel[0];
    rec["vy"] = p.vel[1];
    rec["vz"] = p.vel[2];
    rec["wx"] = p.vel[3];
    rec["wy"] = p.vel[4];
    rec["wz"] = p.vel[5];
    rec["gripper"] = p.gripper;
    rec["mask"] = p.mask.to_string();
    rec["obstacle_dist"] = p.obstacle_dist;
    os << rec.dump() << '\n';
  }
}

void write_demo(const Demonstration& demo, const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path.string() + "' for writing");
  write_demo(demo, os);
  if (!os) throw Error("failed writing '" + path.string() + "'");
}

Demonstration read_demo(std::istream& is, const InterfaceRegistry& registry) {
  std::string line;
  std::size_t lineno = 0;
  Demonstration demo;

  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty()) break;
  }
  if (line.empty()) throw ParseError(lineno, "missing header record");
  const json header = parse_line(line, lineno);
  if (text(header, "format", lineno) != kDemoFormatName) {
    throw ParseError(lineno, "not a liftdemo demonstration file");
  }
  const auto version_it = header.find("version");
  if (version_it == header.end() || !version_it->is_number_integer()) {
    throw ParseError(lineno, "header lacks an integer 'version'");
  }
  if (version_it->get<int>() != kDemoFormatVersion) {
    throw VersionMismatch("demonstration format version " + std::to_string(version_it->get<int>()) +
                          ", expected " + std::to_string(kDemoFormatVersion));
  }
  demo.dt = number(header, "dt", lineno);
  demo.interface = text(header, "interface", lineno);
  demo.task_label = header.value("task_label", std::string{});
  demo.lifted = header.value("lifted", false);
  const std::size_t header_line = lineno;

  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const json rec = parse_line(line, lineno);
    TrajectoryPoint p;
    for (const char* col : kColumns) {
      if (!rec.contains(col)) throw ParseError(lineno, std::string("missing column '") + col + "'");
    }
    p.t = number(rec, "t", lineno);
    p.pose.position = Vec3(number(rec, "px", lineno), number(rec, "py", lineno),
                           number(rec, "pz", lineno));
    p.pose.orientation = Quat(number(rec, "qw", lineno), number(rec, "qx", lineno),
                              number(rec, "qy", lineno), number(rec, "qz", lineno));
    p.vel << number(rec, "vx", lineno), number(rec, "vy", lineno), number(rec, "vz", lineno),
        number(rec, "wx", lineno), number(rec, "wy", lineno), number(rec, "wz", lineno);
    p.gripper = number(rec, "gripper", lineno);
    const auto mask = DimSet::parse(text(rec, "mask", lineno));
    if (!mask) throw ParseError(lineno, "column 'mask' must be a 7-character bitstring");
    p.mask = *mask;
    p.obstacle_dist = number(rec, "obstacle_dist", lineno);
    demo.points.push_back(p);
  }

  const auto spec = registry.find(demo.interface);
  if (!spec) throw ParseError(header_line, "unknown interface '" + demo.interface + "'");
  const ValidationReport report = validate_demonstration(demo, *spec);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    const std::size_t at = v.kind == ViolationKind::kEmpty || v.kind == ViolationKind::kNonPositiveDt ||
                                   v.kind == ViolationKind::kInterfaceMismatch
                               ? header_line
                               : header_line + 1 + v.index;
    throw ParseError(at, "invalid demonstration: " + report.summary());
  }
  return demo;
}

Demonstration read_demo(const std::filesystem::path& path, const InterfaceRegistry& registry) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open '" + path.string() + "'");
  return read_demo(is, registry);
}

json scene_to_json(const Scene& scene) {
  json obstacles = json::array();
  for (const auto& o : scene.obstacles) {
    if (const auto* s = std::get_if<Sphere>(&o)) {
      obstacles.push_back({{"type", "sphere"}, {"center", vec3_json(s->center)}, {"radius", s->radius}});
    } else {
      const auto& b = std::get<Box>(o);
      obstacles.push_back({{"type", "box"}, {"min", vec3_json(b.min)}, {"max", vec3_json(b.max)}});
    }
  }
  json waypoints = json::array();
  for (const auto& w : scene.waypoints) {
    json wj = pose_json(w.pose);
    wj["gripper"] = w.gripper;
    waypoints.push_back(wj);
  }
  json start = pose_json(scene.start);
  start["gripper"] = scene.start_gripper;
  return {{"name", scene.name},
          {"description", scene.description},
          {"bounds", {{"min", vec3_json(scene.bounds_min)}, {"max", vec3_json(scene.bounds_max)}}},
          {"start", start},
          {"obstacles", obstacles},
          {"waypoints", waypoints}};
}

Scene scene_from_json(const json& j) {
  if (!j.is_object()) throw ParseError(0, "scene must be a JSON object");
  Scene s;
  try {
    s.name = j.value("name", std::string("custom"));
    s.description = j.value("description", std::string{});
    if (j.contains("bounds")) {
      s.bounds_min = vec3_from(j["bounds"].at("min"), "bounds.min");
      s.bounds_max = vec3_from(j["bounds"].at("max"), "bounds.max");
    }
    if (!j.contains("start")) throw ParseError(0, "scene needs a 'start' pose");
    s.start = pose_from(j["start"]);
    s.start_gripper = j["start"].value("gripper", 1.0);
    for (const auto& o : j.value("obstacles", json::array())) {
      const std::string type = o.at("type").get<std::string>();
      if (type == "sphere") {
        s.obstacles.emplace_back(Sphere{vec3_from(o.at("center"), "center"), o.at("radius").get<double>()});
      } else if (type == "box") {
        s.obstacles.emplace_back(Box{vec3_from(o.at("min"), "min"), vec3_from(o.at("max"), "max")});
      } else {
        throw ParseError(0, "unknown obstacle type '" + type + "'");
      }
    }
    if (!j.contains("waypoints") || !j["waypoints"].is_array()) {
      throw ParseError(0, "scene needs a 'waypoints' array");
    }
    for (const auto& w : j["waypoints"]) {
      s.waypoints.push_back({pose_from(w), w.value("gripper", 1.0)});
    }
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("scene schema: ") + e.what());
  }
  try {
    s.check();
  } catch (const InvalidArgument& e) {
    throw ParseError(0, e.what());
  }
  return s;
}

Scene load_scene(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open scene '" + path.string() + "'");
  json j;
  try {
    j = json::parse(is);
  } catch (const json::parse_error& e) {
    throw ParseError(0, "scene '" + path.string() + "': " + e.what());
  }
  return scene_from_json(j);
}

json interface_to_json(const InterfaceSpec& spec) {
  json modes = json::array();
  for (auto m : spec.modes) modes.push_back(m.to_string());
  return {{"name", spec.name},
          {"l", spec.l},
          {"modes", modes},
          {"switch_style", spec.switch_style == SwitchStyle::kCyclic ? "cyclic" : "direct"}};
}

InterfaceSpec interface_from_json(const json& j) {
  InterfaceSpec spec;
  try {
    spec.name = j.at("name").get<std::string>();
    spec.l = j.at("l").get<int>();
    for (const auto& m : j.at("modes")) {
      const auto mask = DimSet::parse(m.get<std::string>());
      if (!mask) throw ParseError(0, "mode must be a 7-character bitstring");
      spec.modes.push_back(*mask);
    }
    const std::string style = j.value("switch_style", std::string("cyclic"));
    if (style == "cyclic") {
      spec.switch_style = SwitchStyle::kCyclic;
    } else if (style == "direct") {
      spec.switch_style = SwitchStyle::kDirect;
    } else {
      throw ParseError(0, "switch_style must be 'cyclic' or 'direct'");
    }
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("interface schema: ") + e.what());
  }
  try {
    check_interface(spec);
  } catch (const InvalidArgument& e) {
    throw ParseError(0, e.what());
  }
  return spec;
}

json segments_to_json(const std::vector<Segment>& segs) {
  json out = json::array();
  for (const auto& s : segs) {
    json prov = json::array();
    for (const auto& r : s.provenance) prov.push_back(range_json(r));
    out.push_back({{"length", s.size()},
                   {"t_start", s.points.empty() ? 0.0 : s.points.front().t},
                   {"t_end", s.points.empty() ? 0.0 : s.points.back().t},
                   {"mask", s.mask.to_string()},
                   {"active_dims", s.active_dims.to_string()},
                   {"env_constrained", s.env_constrained},
                   {"task_constrained", s.task_constrained},
                   {"provenance", prov}});
  }
  return out;
}

json bundle_to_json(const ReconstructionResult& r, const ReconstructionConfig& cfg) {
  json ranges = json::array();
  for (const auto& x : r.output_ranges) ranges.push_back(range_json(x));
  return {{"format", "liftdemo.bundle"},
          {"version", 1},
          {"config",
           {{"epsilon", cfg.epsilon},
            {"delta", cfg.delta},
            {"activation_vel_threshold", cfg.activation_vel_threshold}}},
          {"raw", {{"samples", r.raw.size()}, {"duration_s", r.raw.duration()}}},
          {"reconstructed", {{"samples", r.reconstructed.size()}, {"duration_s", r.reconstructed.duration()}}},
          {"merges", r.merges()},
          {"segments", segments_to_json(r.segments)},
          {"lifted_segments", segments_to_json(r.lifted_segments)},
          {"output_ranges", ranges}};
}

namespace {

json mean_std_json(const MeanStd& m) { return {{"mean", m.mean}, {"std", m.std}, {"n", m.n}}; }

}  // namespace

json metrics_to_json(const MetricsReport& r) {
  json hist = json::object();
  for (int k = 1; k <= kNumMotionDims; ++k) {
    hist[std::to_string(k)] = r.histogram.fraction[static_cast<std::size_t>(k)];
  }
  json j = {{"label", r.label},
            {"duration_s", r.duration_s},
            {"path_length_m", r.path_length_m},
            {"activation_histogram", hist},
            {"idle_fraction", r.histogram.idle_fraction},
            {"motion_samples", r.histogram.motion_samples}};
  if (r.time_pct_change) j["time_pct_change"] = *r.time_pct_change;
  if (r.dist_pct_change) j["dist_pct_change"] = *r.dist_pct_change;
  return j;
}

json comparison_to_json(const ComparisonTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"label", r.label},
                    {"raw", {{"time_s", r.raw_time}, {"dist_m", r.raw_dist}}},
                    {"smoothed",
                     {{"time_s", r.smoothed_time},
                      {"dist_m", r.smoothed_dist},
                      {"time_pct", r.smoothed_time_pct},
                      {"dist_pct", r.smoothed_dist_pct}}},
                    {"reconstructed",
                     {{"time_s", r.recon_time},
                      {"dist_m", r.recon_dist},
                      {"time_pct", r.recon_time_pct},
                      {"dist_pct", r.recon_dist_pct}}}});
  }
  return {{"rows", rows},
          {"aggregate",
           {{"raw_time_s", mean_std_json(t.raw_time)},
            {"raw_dist_m", mean_std_json(t.raw_dist)},
            {"smoothed_time_s", mean_std_json(t.smoothed_time)},
            {"smoothed_dist_m", mean_std_json(t.smoothed_dist)},
            {"reconstructed_time_s", mean_std_json(t.recon_time)},
            {"reconstructed_dist_m", mean_std_json(t.recon_dist)},
            {"smoothed_time_pct", mean_std_json(t.smoothed_time_pct)},
            {"smoothed_dist_pct", mean_std_json(t.smoothed_dist_pct)},
            {"reconstructed_time_pct", mean_std_json(t.recon_time_pct)},
            {"reconstructed_dist_pct", mean_std_json(t.recon_dist_pct)}}}};
}

void write_json(const json& j, const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path.string() + "' for writing");
  os << std::setw(2) << j << '\n';
}

std::string activation_svg(const Demonstration& demo, const ReconstructionConfig& cfg,
                           const std::vector<IndexRange>& segment_ranges) {
  constexpr double kWidth = 800.0;
  constexpr double kRow = 18.0;
  constexpr double kLeft = 40.0;
  constexpr double kHistTop = 150.0;
  constexpr double kHistHeight = 100.0;
  const auto trace = activation_trace(demo, cfg);
  const auto hist = activation_histogram(demo, cfg);
  const double n = std::max<double>(1.0, static_cast<double>(trace.size()));
  const double px = (kWidth - kLeft) / n;

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << kWidth + 10
     << R"(" height="290" font-family="sans-serif" font-size="11">)" << '\n';
  for (int d = 0; d < kNumMotionDims; ++d) {
    const double y = 10.0 + d * kRow;
    os << "<text x=\"4\" y=\"" << y + 12 << "\">" << dim_name(d) << "</text>\n";
    // Runs of activity become one rectangle each.
    std::size_t i = 0;
    while (i < trace.size()) {
      if (!trace[i].test(d)) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < trace.size() && trace[j].test(d)) ++j;
      os << "<rect x=\"" << kLeft + px * static_cast<double>(i) << "\" y=\"" << y
         << "\" width=\"" << px * static_cast<double>(j - i) << "\" height=\"" << kRow - 3
         << "\" fill=\"#3b6ea8\"/>\n";
      i = j;
    }
  }
  for (const auto& r : segment_ranges) {
    const double x = kLeft + px * static_cast<double>(r.begin);
    os << "<line x1=\"" << x << "\" y1=\"6\" x2=\"" << x << "\" y2=\"" << 10 + 6 * kRow
       << "\" stroke=\"#c0392b\" stroke-dasharray=\"3,2\"/>\n";
  }
  const double bar = (kWidth - kLeft) / kNumMotionDims;
  for (int k = 1; k <= kNumMotionDims; ++k) {
    const double f = hist.fraction[static_cast<std::size_t>(k)];
    const double h = kHistHeight * f;
    const double x = kLeft + bar * (k - 1);
    os << "<rect x=\"" << x + 4 << "\" y=\"" << kHistTop + kHistHeight - h << "\" width=\""
       << bar - 8 << "\" height=\"" << h << "\" fill=\"#7f8c8d\"/>\n";
    os << "<text x=\"" << x + bar / 2 - 12 << "\" y=\"" << kHistTop + kHistHeight + 14 << "\">"
       << k << "D " << std::setprecision(1) << 100.0 * f << std::setprecision(2)
       << "%</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace liftdemo
