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

#include <bit>
#include <initializer_list>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace liftdemo {

/// Control dimensions of the end-effector space: three linear velocities,
/// three angular velocities and the gripper.
enum class Dim : std::uint8_t { kVx = 0, kVy, kVz, kWx, kWy, kWz, kGripper };

inline constexpr int kNumDims = 7;
inline constexpr int kNumMotionDims = 6;

constexpr int index(Dim d) { return static_cast<int>(d); }
constexpr bool is_linear(int d) { return d >= 0 && d < 3; }
constexpr bool is_angular(int d) { return d >= 3 && d < 6; }

std::string_view dim_name(int d);

/// A set over the seven control dimensions. Doubles as the mode mask.
class DimSet {
 public:
  constexpr DimSet() = default;
  constexpr DimSet(std::initializer_list<Dim> dims) {
    for (Dim d : dims) bits_ |= bit(index(d));
  }

  static constexpr DimSet from_bits(std::uint8_t bits) {
    DimSet s;
    s.bits_ = bits & kAll;
    return s;
  }
  static constexpr DimSet all() { return from_bits(kAll); }
  static constexpr DimSet motion() { return from_bits(kAll & ~bit(6)); }

  /// Parses a 7-character bitstring, first character is vx.
  static std::optional<DimSet> parse(std::string_view s);
  std::string to_string() const;

  constexpr bool test(int d) const { return (bits_ & bit(d)) != 0; }
  constexpr bool test(Dim d) const { return test(index(d)); }
  constexpr void set(int d, bool on = true) {
    if (on) {
      bits_ |= bit(d);
    } else {
      bits_ &= static_cast<std::uint8_t>(~bit(d));
    }
  }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  constexpr DimSet operator|(DimSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr DimSet operator&(DimSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr DimSet& operator|=(DimSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr bool disjoint(DimSet o) const { return (bits_ & o.bits_) == 0; }
  constexpr bool subset_of(DimSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool operator==(const DimSet&) const = default;

 private:
  static constexpr std::uint8_t kAll = 0x7f;
  static constexpr std::uint8_t bit(int d) { return static_cast<std::uint8_t>(1u << d); }
  std::uint8_t bits_ = 0;
};

using ModeMask = DimSet;

}  // namespace liftdemo
