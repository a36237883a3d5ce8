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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liftdemo/types.hpp"

namespace liftdemo {

/// 1-D sip/puff: seven modes, one dimension each, cycled by hard sip/puff.
InterfaceSpec sippuff1d();
/// 2-D joystick: {vx,vy}, {vz,wz}, {wx,wy}, {g}, selected by button.
InterfaceSpec joystick2d();

/// The builtin interfaces, sip/puff first.
std::vector<InterfaceSpec> builtin_interfaces();

/// Throws InvalidArgument if `spec` is malformed (empty modes, a mode wider
/// than l, or modes not covering every dimension).
void check_interface(const InterfaceSpec& spec);

/// Builtin interfaces plus anything registered at runtime.
class InterfaceRegistry {
 public:
  InterfaceRegistry();

  /// Replaces an existing spec of the same name.
  void add(InterfaceSpec spec);
  std::optional<InterfaceSpec> find(std::string_view name) const;
  const std::vector<InterfaceSpec>& all() const { return specs_; }

 private:
  std::vector<InterfaceSpec> specs_;
};

enum class ViolationKind {
  kEmpty,
  kNonPositiveDt,
  kTimeNotIncreasing,
  kTimingGap,
  kMaskExceedsL,
  kVelocityOutsideMask,
  kQuaternionNotUnit,
  kNegativeObstacleDistance,
  kGripperOutOfRange,
  kInterfaceMismatch,
};

std::string_view violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::size_t index;  // first offending point
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string summary() const;
};

/// One entry per violated invariant, citing the first offending point. Lifted
/// demonstrations skip the per-interface mask and command checks.
ValidationReport validate_demonstration(const Demonstration& demo, const InterfaceSpec& spec);

}  // namespace liftdemo
