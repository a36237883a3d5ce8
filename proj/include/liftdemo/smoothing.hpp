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

#include <array>
#include <span>
#include <vector>

#include "liftdemo/types.hpp"

namespace liftdemo {

/// One second-order section, b0 b1 b2 / 1 a1 a2.
struct Biquad {
  std::array<double, 3> b{};
  std::array<double, 3> a{1.0, 0.0, 0.0};
};

/// Digital low-pass Butterworth filter from the analog prototype via the
/// bilinear transform with frequency prewarping. Unit DC gain, -3 dB at the
/// cutoff. Throws InvalidCutoff unless 0 < cutoff_hz < sample_rate_hz / 2.
std::vector<Biquad> design_butterworth(int order, double cutoff_hz, double sample_rate_hz);

/// Complex frequency response magnitude of a cascade at `freq_hz`.
double magnitude_response(std::span<const Biquad> sos, double freq_hz, double sample_rate_hz);

/// Causal filtering. Sections start in the steady state for the first sample
/// when `steady_start` is set, otherwise at rest.
std::vector<double> sos_filter(std::span<const Biquad> sos, std::span<const double> x,
                               bool steady_start = true);

/// Forward-backward filtering with odd-extension padding. Zero phase,
/// magnitude squared.
std::vector<double> sos_filtfilt(std::span<const Biquad> sos, std::span<const double> x);

/// Savitzky-Golay smoothing weights for the window centre. Throws
/// InvalidWindow unless the window is odd and longer than polyorder.
std::vector<double> savgol_coefficients(int window, int polyorder);

/// Savitzky-Golay smoothing; the first and last half-windows are evaluated
/// on the polynomial fitted to the edge window.
std::vector<double> savgol_channel(std::span<const double> x, int window, int polyorder);

/// Penalized-least-squares spline on a clamped B-spline basis with a knot at
/// every sample: minimizes sum (y - f)^2 + lambda * integral f''^2 with the
/// end values pinned to the data. Throws TooShort for fewer than degree + 1
/// samples.
std::vector<double> smoothing_spline_channel(std::span<const double> t, std::span<const double> y,
                                             int degree, double lambda);

/// Smoothing weight whose steady-state gain is one half at `cutoff_hz` for data
/// sampled every `dt`.
double spline_lambda_for_cutoff(double cutoff_hz, double dt);

struct ButterworthParams {
  int order = 4;
  double cutoff_hz = 2.0;
  bool zero_phase = true;
};

struct SavgolParams {
  int window = 11;
  int polyorder = 3;
};

struct BsplineParams {
  int degree = 3;
  double cutoff_hz = 2.0;  // sets the smoothing weight
};

// The demonstration-level filters below smooth the translation and
// quaternion channels, renormalize the orientation and recompute velocities by
// finite differences, restricted to the dimensions the recorded mode exposes.
// Time, mask, gripper and obstacle distance pass through unchanged.

Demonstration butterworth_lowpass(const Demonstration& demo, const ButterworthParams& p = {});
Demonstration savitzky_golay(const Demonstration& demo, const SavgolParams& p = {});
Demonstration bspline_smooth(const Demonstration& demo, const BsplineParams& p = {});

}  // namespace liftdemo
