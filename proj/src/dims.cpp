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

#include "liftdemo/dims.hpp"

#include <array>

namespace liftdemo {

std::string_view dim_name(int d) {
  static constexpr std::array<std::string_view, kNumDims> kNames = {"vx", "vy", "vz", "wx",
                                                                    "wy", "wz", "g"};
  return (d >= 0 && d < kNumDims) ? kNames[static_cast<std::size_t>(d)] : "?";
}

std::optional<DimSet> DimSet::parse(std::string_view s) {
  if (s.size() != kNumDims) return std::nullopt;
  DimSet out;
  for (int d = 0; d < kNumDims; ++d) {
    const char c = s[static_cast<std::size_t>(d)];
    if (c == '1') {
      out.set(d);
    } else if (c != '0') {
      return std::nullopt;
    }
  }
  return out;
}

std::string DimSet::to_string() const {
  std::string s(kNumDims, '0');
  for (int d = 0; d < kNumDims; ++d) {
    if (test(d)) s[static_cast<std::size_t>(d)] = '1';
  }
  return s;
}

}  // namespace liftdemo
