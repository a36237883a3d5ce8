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

#include "liftdemo/interfaces.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "liftdemo/errors.hpp"

namespace liftdemo {

namespace {

constexpr double kUnitQuatTol = 1e-9;

}  // namespace

int InterfaceSpec::mode_index(ModeMask mask) const {
  const auto it = std::find(modes.begin(), modes.end(), mask);
  return it == modes.end() ? -1 : static_cast<int>(it - modes.begin());
}

void ReconstructionConfig::check() const {
  if (epsilon < 1) throw InvalidArgument("epsilon must be >= 1");
  if (!(delta > 0.0)) throw InvalidArgument("delta must be > 0");
  if (!(activation_vel_threshold > 0.0 && activation_vel_threshold < 1.0)) {
    throw InvalidArgument("activation_vel_threshold must lie in (0, 1)");
  }
}

InterfaceSpec sippuff1d() {
  using enum Dim;
  return InterfaceSpec{
      .name = "sippuff1d",
      .l = 1,
      .modes = {{kVx}, {kVy}, {kVz}, {kWx}, {kWy}, {kWz}, {kGripper}},
      .switch_style = SwitchStyle::kCyclic,
  };
}

InterfaceSpec joystick2d() {
  using enum Dim;
  return InterfaceSpec{
      .name = "joystick2d",
      .l = 2,
      .modes = {{kVx, kVy}, {kVz, kWz}, {kWx, kWy}, {kGripper}},
      .switch_style = SwitchStyle::kDirect,
  };
}

std::vector<InterfaceSpec> builtin_interfaces() { return {sippuff1d(), joystick2d()}; }

void check_interface(const InterfaceSpec& spec) {
  if (spec.name.empty()) throw InvalidArgument("interface name is empty");
  if (spec.l < 1) throw InvalidArgument("interface '" + spec.name + "': l must be positive");
  if (spec.modes.empty()) throw InvalidArgument("interface '" + spec.name + "' has no modes");
  DimSet covered;
  for (const ModeMask& m : spec.modes) {
    if (m.empty() || m.count() > spec.l) {
      throw InvalidArgument("interface '" + spec.name + "': mode " + m.to_string() +
                            " activates more than l dims or none");
    }
    covered |= m;
  }
  if (covered != DimSet::all()) {
    throw InvalidArgument("interface '" + spec.name + "': modes do not cover every dimension");
  }
}

InterfaceRegistry::InterfaceRegistry() : specs_(builtin_interfaces()) {}

void InterfaceRegistry::add(InterfaceSpec spec) {
  check_interface(spec);
  auto it = std::find_if(specs_.begin(), specs_.end(),
                         [&](const InterfaceSpec& s) { return s.name == spec.name; });
  if (it != specs_.end()) {
    *it = std::move(spec);
  } else {
    specs_.push_back(std::move(spec));
  }
}

std::optional<InterfaceSpec> InterfaceRegistry::find(std::string_view name) const {
  for (const auto& s : specs_) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

std::string_view violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmpty: return "empty demonstration";
    case ViolationKind::kNonPositiveDt: return "non-positive dt";
    case ViolationKind::kTimeNotIncreasing: return "time not strictly increasing";
    case ViolationKind::kTimingGap: return "sample spacing deviates from dt";
    case ViolationKind::kMaskExceedsL: return "mask exceeds l";
    case ViolationKind::kVelocityOutsideMask: return "velocity outside mask";
    case ViolationKind::kQuaternionNotUnit: return "quaternion not unit";
    case ViolationKind::kNegativeObstacleDistance: return "negative obstacle distance";
    case ViolationKind::kGripperOutOfRange: return "gripper out of range";
    case ViolationKind::kInterfaceMismatch: return "interface mismatch";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].message;
  }
  return os.str();
}

ValidationReport validate_demonstration(const Demonstration& demo, const InterfaceSpec& spec) {
  ValidationReport report;
  auto flag = [&](ViolationKind kind, std::size_t i, const std::string& detail) {
    if (report.has(kind)) return;
    std::ostringstream os;
    os << violation_name(kind) << " at point " << i;
    if (!detail.empty()) os << " (" << detail << ")";
    report.violations.push_back({kind, i, os.str()});
  };

  if (demo.points.empty()) {
    flag(ViolationKind::kEmpty, 0, "");
    return report;
  }
  if (!(demo.dt > 0.0)) flag(ViolationKind::kNonPositiveDt, 0, "");
  if (!demo.interface.empty() && demo.interface != spec.name) {
    flag(ViolationKind::kInterfaceMismatch, 0, demo.interface + " vs " + spec.name);
  }

  const auto& pts = demo.points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const TrajectoryPoint& p = pts[i];
    if (i + 1 < pts.size()) {
      const double step = pts[i + 1].t - p.t;
      if (!(step > 0.0)) {
        flag(ViolationKind::kTimeNotIncreasing, i + 1, "");
      } else if (demo.dt > 0.0 && std::abs(step - demo.dt) > 0.5 * demo.dt) {
        std::ostringstream os;
        os << "step " << step << " s, dt " << demo.dt << " s";
        flag(ViolationKind::kTimingGap, i + 1, os.str());
      }
    }
    if (std::abs(p.pose.orientation.norm() - 1.0) > kUnitQuatTol) {
      flag(ViolationKind::kQuaternionNotUnit, i, "");
    }
    if (!(p.obstacle_dist >= 0.0)) flag(ViolationKind::kNegativeObstacleDistance, i, "");
    if (!(p.gripper >= 0.0 && p.gripper <= 1.0)) flag(ViolationKind::kGripperOutOfRange, i, "");
    if (demo.lifted) continue;
    if (p.mask.count() > spec.l) {
      flag(ViolationKind::kMaskExceedsL, i,
           std::to_string(p.mask.count()) + " dims, l = " + std::to_string(spec.l));
    }
    for (int d = 0; d < kNumMotionDims; ++d) {
      if (p.vel[d] != 0.0 && !p.mask.test(d)) {
        flag(ViolationKind::kVelocityOutsideMask, i, std::string(dim_name(d)));
        break;
      }
    }
  }
  return report;
}

}  // namespace liftdemo
