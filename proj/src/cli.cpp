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

#include "liftdemo/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "liftdemo/batch.hpp"
#include "liftdemo/constraints.hpp"
#include "liftdemo/errors.hpp"
#include "liftdemo/io.hpp"

namespace liftdemo {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string interfaces_file;

  // generate
  std::string scene;
  std::string interface = "sippuff1d";
  std::uint64_t seed = 0;
  double dt = 0.01;
  double noise = 0.0;
  double jitter = 0.0;
  std::string out;

  // shared pipeline
  std::vector<std::string> in;
  ReconstructionConfig cfg;
  std::string out_dir;
  std::string bundle;
  std::string requery_scene;

  // smooth
  std::string filter = "butterworth";
  ButterworthParams butter;
  bool single_pass = false;
  SavgolParams savgol;
  BsplineParams spline;

  // metrics / compare
  std::string baseline;
  std::string json_out;
  std::string svg_out;
  std::vector<std::string> raw, smoothed, recon;
  std::string report;
};

InterfaceRegistry load_registry(const Options& o) {
  InterfaceRegistry reg;
  if (o.interfaces_file.empty()) return reg;
  std::ifstream is(o.interfaces_file);
  if (!is) throw Error("cannot open '" + o.interfaces_file + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(is);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, o.interfaces_file + ": " + e.what());
  }
  if (!j.is_array()) throw ParseError(0, "interfaces file must hold a JSON array");
  for (const auto& spec : j) reg.add(interface_from_json(spec));
  return reg;
}

Scene resolve_scene(const std::string& name_or_path) {
  if (auto s = find_builtin_scene(name_or_path)) return *s;
  if (fs::exists(name_or_path)) return load_scene(name_or_path);
  std::string names;
  for (const auto& s : builtin_scenes()) names += (names.empty() ? "" : ", ") + s.name;
  throw InvalidArgument("unknown scene '" + name_or_path + "' (builtins: " + names + ")");
}

InterfaceSpec resolve_interface(const InterfaceRegistry& reg, const std::string& name) {
  if (auto s = reg.find(name)) return *s;
  throw InvalidArgument("unknown interface '" + name + "'");
}

void run_generate(const Options& o, std::ostream& out) {
  const auto reg = load_registry(o);
  const Scene scene = resolve_scene(o.scene);
  DemonstratorPolicy policy;
  policy.velocity_noise = o.noise;
  policy.waypoint_jitter = o.jitter;
  const Demonstration demo =
      generate_demo(scene, policy, resolve_interface(reg, o.interface), o.dt, o.seed);
  write_demo(demo, fs::path(o.out));
  out << "wrote " << demo.size() << " samples (" << std::fixed << std::setprecision(2)
      << demo.duration() << " s) to " << o.out << "\n";
}

void run_segment(const Options& o, std::ostream& out) {
  const auto reg = load_registry(o);
  const Demonstration demo = read_demo(fs::path(o.in.front()), reg);
  auto segs = segment_by_mode(demo, o.cfg);
  flag_constraints(segs, o.cfg.delta);
  out << std::left << std::setw(5) << "#" << std::setw(14) << "samples" << std::setw(8) << "len"
      << std::setw(10) << "mask" << std::setw(10) << "active" << std::setw(6) << "env"
      << "task\n";
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    const auto& r = s.provenance.front();
    out << std::setw(5) << i << std::setw(14)
        << (std::to_string(r.begin) + "-" + std::to_string(r.end - 1)) << std::setw(8) << s.size()
        << std::setw(10) << s.mask.to_string() << std::setw(10) << s.active_dims.to_string()
        << std::setw(6) << (s.env_constrained ? "yes" : "no")
        << (s.task_constrained ? "yes" : "no") << "\n";
  }
  if (!o.json_out.empty()) write_json(segments_to_json(segs), o.json_out);
}

nlohmann::json requery(const Demonstration& recon, const Scene& scene, double delta) {
  double reconciled = std::numeric_limits<double>::infinity();
  double actual = std::numeric_limits<double>::infinity();
  std::size_t below = 0;
  for (const auto& p : recon.points) {
    reconciled = std::min(reconciled, p.obstacle_dist);
    const double d = scene.obstacle_distance(p.pose.position);
    actual = std::min(actual, d);
    if (d < delta) ++below;
  }
  return {{"scene", scene.name},
          {"min_reconciled_m", reconciled},
          {"min_requeried_m", actual},
          {"samples_below_delta", below}};
}

void run_reconstruct(const Options& o, std::ostream& out) {
  const auto reg = load_registry(o);
  if (o.in.size() > 1 && o.out_dir.empty()) {
    throw InvalidArgument("several --in files need --out-dir");
  }
  std::vector<Demonstration> demos;
  for (const auto& f : o.in) demos.push_back(read_demo(fs::path(f), reg));
  const auto results = reconstruct_all(demos, reg, o.cfg);
  const std::optional<Scene> scene =
      o.requery_scene.empty() ? std::nullopt : std::optional<Scene>(resolve_scene(o.requery_scene));

  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    fs::path target = o.out_dir.empty()
                          ? fs::path(o.out)
                          : fs::path(o.out_dir) / fs::path(o.in[i]).filename();
    if (!o.out_dir.empty()) fs::create_directories(o.out_dir);
    write_demo(r.reconstructed, target);
    nlohmann::json bundle = bundle_to_json(r, o.cfg);
    if (scene) bundle["requery"] = requery(r.reconstructed, *scene, o.cfg.delta);
    const fs::path bundle_path = (o.bundle.empty() || o.in.size() > 1)
                                     ? fs::path(target.string() + ".bundle.json")
                                     : fs::path(o.bundle);
    write_json(bundle, bundle_path);
    out << o.in[i] << ": " << r.segments.size() << " segments -> " << r.lifted_segments.size()
        << " (" << r.merges() << " merges), " << std::fixed << std::setprecision(2)
        << r.raw.duration() << " s -> " << r.reconstructed.duration() << " s; wrote " << target.string()
        << "\n";
  }
}

void run_smooth(const Options& o, std::ostream& out) {
  const auto reg = load_registry(o);
  const Demonstration demo = read_demo(fs::path(o.in.front()), reg);
  Demonstration result;
  if (o.filter == "butterworth") {
    ButterworthParams p = o.butter;
    p.zero_phase = !o.single_pass;
    result = butterworth_lowpass(demo, p);
  } else if (o.filter == "savgol") {
    result = savitzky_golay(demo, o.savgol);
  } else {
    result = bspline_smooth(demo, o.spline);
  }
  if (o.out.empty()) {
    write_demo(result, out);
  } else {
    write_demo(result, fs::path(o.out));
    out << "wrote " << o.filter << "-smoothed demonstration to " << o.out << "\n";
  }
}

void print_metrics(const MetricsReport& m, std::ostream& out) {
  out << std::fixed << std::setprecision(3);
  out << "label          " << m.label << "\n";
  out << "duration_s     " << m.duration_s;
  if (m.time_pct_change) out << " (" << std::showpos << std::setprecision(1) << *m.time_pct_change << "%" << std::noshowpos << ")";
  out << "\n" << std::setprecision(3);
  out << "path_length_m  " << m.path_length_m;
  if (m.dist_pct_change) out << " (" << std::showpos << std::setprecision(1) << *m.dist_pct_change << "%" << std::noshowpos << ")";
  out << "\n" << std::setprecision(1);
  out << "activation    ";
  for (int k = 1; k <= kNumMotionDims; ++k) {
    out << " " << k << "D:" << 100.0 * m.histogram.fraction[static_cast<std::size_t>(k)] << "%";
  }
  out << "  idle:" << 100.0 * m.histogram.idle_fraction << "%\n";
}

void run_metrics(const Options& o, std::ostream& out) {
  const auto reg = load_registry(o);
  const Demonstration demo = read_demo(fs::path(o.in.front()), reg);
  std::optional<Demonstration> baseline;
  if (!o.baseline.empty()) baseline = read_demo(fs::path(o.baseline), reg);
  const MetricsReport m = compute_metrics(demo, o.cfg, baseline ? &*baseline : nullptr);
  print_metrics(m, out);
  if (!o.json_out.empty()) write_json(metrics_to_json(m), o.json_out);
  if (!o.svg_out.empty()) {
    std::ofstream svg(o.svg_out);
    if (!svg) throw Error("cannot open '" + o.svg_out + "' for writing");
    svg << activation_svg(demo, o.cfg);
  }
}

void run_compare(const Options& o, std::ostream& out) {
  const auto reg = load_registry(o);
  auto load_all = [&](const std::vector<std::string>& files) {
    std::vector<Demonstration> v;
    for (const auto& f : files) v.push_back(read_demo(fs::path(f), reg));
    return v;
  };
  const ComparisonTable table = compare(load_all(o.raw), load_all(o.smoothed), load_all(o.recon));
  out << table.to_text();
  write_json(comparison_to_json(table), o.report);
}

void add_config_flags(CLI::App* cmd, Options& o, bool with_delta) {
  cmd->add_option("--epsilon", o.cfg.epsilon, "Minimum segment length, samples")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  if (with_delta) {
    cmd->add_option("--delta", o.cfg.delta, "Obstacle clearance threshold, meters")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  }
  cmd->add_option("--threshold", o.cfg.activation_vel_threshold,
                  "Activity threshold as a fraction of the per-class max speed")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
}

}  // namespace

int cli_main(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Interface-aware lifting of modal teleoperation demonstrations", "liftdemo"};
  app.require_subcommand(1, 1);
  app.add_option("--interfaces", o.interfaces_file, "JSON array of extra interface specs");

  auto* gen = app.add_subcommand("generate", "Emulate a teleoperated demonstration");
  gen->add_option("--scene", o.scene, "Builtin scene name or scene JSON file")->required();
  gen->add_option("--interface", o.interface, "Interface name")->capture_default_str();
  gen->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  gen->add_option("--dt", o.dt, "Sample period, seconds")->capture_default_str()->check(CLI::PositiveNumber);
  gen->add_option("--noise", o.noise, "Relative command jitter")->capture_default_str();
  gen->add_option("--jitter", o.jitter, "Waypoint perturbation, meters")->capture_default_str();
  gen->add_option("--out", o.out, "Output demonstration")->required();

  auto* seg = app.add_subcommand("segment", "Split a demonstration by control mode");
  seg->add_option("--in", o.in, "Input demonstration")->required()->expected(1);
  seg->add_option("--json", o.json_out, "Write the segment table as JSON");
  add_config_flags(seg, o, true);

  auto* rec = app.add_subcommand("reconstruct", "Lift a demonstration into the full control space");
  rec->add_option("--in", o.in, "Input demonstration(s)")->required()->expected(1, -1);
  auto* rec_out = rec->add_option("--out", o.out, "Output demonstration");
  auto* rec_dir = rec->add_option("--out-dir", o.out_dir, "Output directory for batch runs");
  rec_out->excludes(rec_dir);
  rec->add_option("--bundle", o.bundle, "Bundle path (default: <out>.bundle.json)");
  rec->add_option("--scene", o.requery_scene, "Re-query obstacle distances against this scene");
  add_config_flags(rec, o, true);

  auto* smooth = app.add_subcommand("smooth", "Apply a DSP smoothing baseline");
  smooth->add_option("--in", o.in, "Input demonstration")->required()->expected(1);
  smooth->add_option("--filter", o.filter, "butterworth | savgol | bspline")
      ->capture_default_str()
      ->check(CLI::IsMember({"butterworth", "savgol", "bspline"}));
  smooth->add_option("--order", o.butter.order, "Butterworth order")->capture_default_str()->check(CLI::PositiveNumber);
  smooth->add_option("--cutoff", o.butter.cutoff_hz, "Butterworth cutoff, Hz")->capture_default_str();
  smooth->add_flag("--single-pass", o.single_pass, "Causal single pass instead of forward-backward");
  smooth->add_option("--window", o.savgol.window, "Savitzky-Golay window")->capture_default_str();
  smooth->add_option("--polyorder", o.savgol.polyorder, "Savitzky-Golay polynomial order")->capture_default_str();
  smooth->add_option("--degree", o.spline.degree, "Spline degree")->capture_default_str();
  smooth->add_option("--spline-cutoff", o.spline.cutoff_hz, "Spline half-gain frequency, Hz")->capture_default_str();
  smooth->add_option("--out", o.out, "Output demonstration (default: stdout)");

  auto* met = app.add_subcommand("metrics", "Duration, path length and activation histogram");
  met->add_option("--in", o.in, "Input demonstration")->required()->expected(1);
  met->add_option("--baseline", o.baseline, "Baseline demonstration for percent changes");
  met->add_option("--json", o.json_out, "Write the report as JSON");
  met->add_option("--svg", o.svg_out, "Write a dimension-vs-time plot");
  add_config_flags(met, o, false);

  auto* cmp = app.add_subcommand("compare", "Tabulate raw, smoothed and reconstructed demos");
  cmp->add_option("--raw", o.raw, "Raw demonstrations")->required()->expected(1, -1);
  cmp->add_option("--smoothed", o.smoothed, "Smoothed demonstrations")->required()->expected(1, -1);
  cmp->add_option("--recon", o.recon, "Reconstructed demonstrations")->required()->expected(1, -1);
  cmp->add_option("--report", o.report, "JSON report path")->required();

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
    if (rec->parsed() && o.out.empty() && o.out_dir.empty()) {
      throw CLI::RequiredError("--out or --out-dir");
    }
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    o.cfg.check();
    if (gen->parsed()) run_generate(o, out);
    if (seg->parsed()) run_segment(o, out);
    if (rec->parsed()) run_reconstruct(o, out);
    if (smooth->parsed()) run_smooth(o, out);
    if (met->parsed()) run_metrics(o, out);
    if (cmp->parsed()) run_compare(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitOk;
}

int cli_main(int argc, char** argv) {
  return cli_main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

}  // namespace liftdemo
