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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "liftdemo/errors.hpp"
#include "liftdemo/metrics.hpp"
#include "liftdemo/smoothing.hpp"
#include "oracles/filters.hpp"
#include "support/builders.hpp"

namespace liftdemo {
namespace {

constexpr double kFs = 100.0;
constexpr double kPi = std::numbers::pi;

std::vector<double> sine(double f_hz, std::size_t n, double fs = kFs) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = std::sin(2.0 * kPi * f_hz * static_cast<double>(i) / fs);
  return x;
}

double peak(const std::vector<double>& x, std::size_t from, std::size_t to) {
  double m = 0.0;
  for (std::size_t i = from; i < to; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

double variance(const std::vector<double>& x) {
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  double v = 0.0;
  for (double a : x) v += (a - mean) * (a - mean);
  return v / static_cast<double>(x.size());
}

double total_variation(const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += std::abs(x[i] - x[i - 1]);
  return s;
}

TEST(Butterworth, MagnitudeMatchesClosedForm) {
  for (int order = 1; order <= 8; ++order) {
    for (double fc : {0.5, 2.0, 10.0, 30.0}) {
      const auto sos = design_butterworth(order, fc, kFs);
      EXPECT_EQ(sos.size(), static_cast<std::size_t>((order + 1) / 2));
      for (double f : {0.0, 0.1, 1.0, 2.0, 5.0, 20.0, 45.0}) {
        EXPECT_NEAR(magnitude_response(sos, f, kFs), oracle::butterworth_magnitude(order, fc, kFs, f),
                    1e-9)
            << "order " << order << " fc " << fc << " f " << f;
      }
      EXPECT_NEAR(magnitude_response(sos, fc, kFs), 1.0 / std::sqrt(2.0), 1e-12);
    }
  }
}

TEST(Butterworth, RejectsBadDesigns) {
  EXPECT_THROW(design_butterworth(4, 0.0, kFs), InvalidCutoff);
  EXPECT_THROW(design_butterworth(4, 50.0, kFs), InvalidCutoff);
  EXPECT_THROW(design_butterworth(4, -1.0, kFs), InvalidCutoff);
  EXPECT_THROW(design_butterworth(0, 2.0, kFs), InvalidArgument);
}

TEST(Butterworth, ConstantChannelIsUnchanged) {
  const auto sos = design_butterworth(4, 2.0, kFs);
  const std::vector<double> x(500, 0.37);
  for (double y : sos_filtfilt(sos, x)) EXPECT_NEAR(y, 0.37, 1e-9);
  for (double y : sos_filter(sos, x, true)) EXPECT_NEAR(y, 0.37, 1e-9);
  const auto at_rest = sos_filter(sos, x, false);
  EXPECT_LT(at_rest.front(), 0.37);
  EXPECT_NEAR(at_rest.back(), 0.37, 1e-9);
}

TEST(Butterworth, SinglePassSineAtCutoffDropsThreeDecibels) {
  const auto sos = design_butterworth(4, 2.0, kFs);
  const auto y = sos_filter(sos, sine(2.0, 3000), false);
  EXPECT_NEAR(peak(y, 1000, 3000), 1.0 / std::sqrt(2.0), 0.02 / std::sqrt(2.0));
}

TEST(Butterworth, ZeroPhaseSquaresTheMagnitude) {
  const auto sos = design_butterworth(4, 2.0, kFs);
  const auto x = sine(2.0, 3000);
  const auto y = sos_filtfilt(sos, x);
  EXPECT_NEAR(peak(y, 500, 2500), 0.5, 0.01);

  const auto slow = sine(0.7, 3000);
  const auto ys = sos_filtfilt(sos, slow);
  const double g = std::pow(oracle::butterworth_magnitude(4, 2.0, kFs, 0.7), 2);
  for (std::size_t i = 500; i < 2500; ++i) EXPECT_NEAR(ys[i], g * slow[i], 1e-3);
}

TEST(Butterworth, WhiteNoiseLosesVariance) {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> x(4000);
  for (auto& v : x) v = n(rng);
  const auto sos = design_butterworth(4, 2.0, kFs);
  EXPECT_LT(variance(sos_filtfilt(sos, x)), variance(x));
  EXPECT_LT(variance(sos_filter(sos, x, true)), variance(x));
}

TEST(Butterworth, ShortInputsPassThrough) {
  const auto sos = design_butterworth(4, 2.0, kFs);
  EXPECT_EQ(sos_filtfilt(sos, std::vector<double>{1.5}), std::vector<double>{1.5});
  EXPECT_EQ(sos_filtfilt(sos, std::vector<double>{1.0, 2.0, 3.0}).size(), 3u);
}

TEST(SavitzkyGolay, CoefficientsMatchNormalEquations) {
  for (int window : {5, 7, 11, 21}) {
    for (int order = 0; order < std::min(window, 6); ++order) {
      const auto got = savgol_coefficients(window, order);
      const auto want = oracle::savgol_weights(window, order);
      ASSERT_EQ(got.size(), want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_NEAR(got[i], want[i], 1e-10) << window << "/" << order;
      }
    }
  }
}

TEST(SavitzkyGolay, ReproducesCubics) {
  std::vector<double> x(200);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = static_cast<double>(i) * 0.01;
    x[i] = 0.3 - 1.2 * t + 0.8 * t * t - 0.25 * t * t * t;
  }
  const auto y = savgol_channel(x, 11, 3);
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(y[i], x[i], 1e-9) << i;
}

TEST(SavitzkyGolay, ImpulseReturnsKernel) {
  std::vector<double> x(51, 0.0);
  x[25] = 1.0;
  const auto y = savgol_channel(x, 11, 3);
  const auto k = oracle::savgol_weights(11, 3);
  for (int j = -5; j <= 5; ++j) {
    EXPECT_NEAR(y[static_cast<std::size_t>(25 + j)], k[static_cast<std::size_t>(5 - j)], 1e-12);
  }
}

TEST(SavitzkyGolay, ConstantIsUnchanged) {
  const std::vector<double> x(40, -2.5);
  for (double y : savgol_channel(x, 11, 3)) EXPECT_NEAR(y, -2.5, 1e-12);
}

TEST(SavitzkyGolay, RejectsBadWindows) {
  const std::vector<double> x(40, 0.0);
  EXPECT_THROW(savgol_channel(x, 10, 3), InvalidWindow);
  EXPECT_THROW(savgol_channel(x, 5, 5), InvalidWindow);
  EXPECT_THROW(savgol_channel(x, -3, 1), InvalidWindow);
  EXPECT_THROW(savgol_channel(x, 41, 3), InvalidWindow);
  EXPECT_THROW(savgol_coefficients(4, 2), InvalidWindow);
}

class Spline : public ::testing::Test {
 protected:
  std::vector<double> times(std::size_t n) {
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = 0.01 * static_cast<double>(i);
    return t;
  }
};

TEST_F(Spline, StraightLineIsUnchanged) {
  const auto t = times(300);
  std::vector<double> y(t.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = 0.2 + 0.5 * t[i];
  const double lambda = spline_lambda_for_cutoff(2.0, 0.01);
  for (int degree = 1; degree <= 5; ++degree) {
    const auto s = smoothing_spline_channel(t, y, degree, lambda);
    for (std::size_t i = 0; i < y.size(); ++i) EXPECT_NEAR(s[i], y[i], 1e-6) << degree;
  }
}

TEST_F(Spline, EndpointsAreInterpolated) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n(0.0, 1.0);
  const auto t = times(400);
  std::vector<double> y(t.size());
  double acc = 0.0;
  for (auto& v : y) v = (acc += 0.01 * n(rng));
  for (double lambda : {0.0, 1e-4, spline_lambda_for_cutoff(2.0, 0.01), 1e3}) {
    const auto s = smoothing_spline_channel(t, y, 3, lambda);
    EXPECT_NEAR(s.front(), y.front(), 1e-6);
    EXPECT_NEAR(s.back(), y.back(), 1e-6);
  }
}

TEST_F(Spline, ZeroWeightInterpolates) {
  const auto t = times(60);
  std::vector<double> y(t.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::cos(7.0 * t[i]) + (i % 3 == 0 ? 0.1 : 0.0);
  const auto s = smoothing_spline_channel(t, y, 3, 0.0);
  for (std::size_t i = 0; i < y.size(); ++i) EXPECT_NEAR(s[i], y[i], 1e-8);
}

TEST_F(Spline, HeavyWeightGivesChordBetweenEndpoints) {
  const auto t = times(200);
  std::vector<double> y(t.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::sin(3.0 * t[i]);
  const auto s = smoothing_spline_channel(t, y, 3, 1e12);
  const double slope = (y.back() - y.front()) / (t.back() - t.front());
  for (std::size_t i = 0; i < y.size(); ++i) EXPECT_NEAR(s[i], y.front() + slope * t[i], 1e-4);
}

TEST_F(Spline, HalfGainAtCutoff) {
  const auto t = times(2000);
  const auto y = sine(2.0, t.size());
  const auto s = smoothing_spline_channel(t, y, 3, spline_lambda_for_cutoff(2.0, 0.01));
  EXPECT_NEAR(peak(s, 500, 1500), 0.5, 0.02);
}

TEST_F(Spline, JitterShortensTheChannel) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> n(0.0, 1.0);
  const auto t = times(500);
  std::vector<double> y(t.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = 0.1 * t[i] + 1e-3 * n(rng);
  const auto s = smoothing_spline_channel(t, y, 3, spline_lambda_for_cutoff(2.0, 0.01));
  EXPECT_LE(total_variation(s), total_variation(y));
}

TEST_F(Spline, Errors) {
  const auto t = times(3);
  const std::vector<double> y = {0.0, 1.0, 0.0};
  EXPECT_THROW(smoothing_spline_channel(t, y, 3, 1.0), TooShort);
  EXPECT_THROW(smoothing_spline_channel(t, y, 0, 1.0), InvalidArgument);
  EXPECT_THROW(smoothing_spline_channel(t, y, 2, -1.0), InvalidArgument);
  EXPECT_THROW(smoothing_spline_channel(times(4), y, 2, 1.0), InvalidArgument);
  EXPECT_THROW(smoothing_spline_channel(std::vector<double>{0.0, 0.0, 1.0}, y, 2, 1.0),
               InvalidArgument);
  EXPECT_THROW(spline_lambda_for_cutoff(0.0, 0.01), InvalidCutoff);
}

class SmoothedDemo : public ::testing::TestWithParam<std::string> {
 protected:
  Demonstration smooth(const Demonstration& d) const {
    if (GetParam() == "butterworth") return butterworth_lowpass(d);
    if (GetParam() == "savgol") return savitzky_golay(d);
    return bspline_smooth(d);
  }
};

TEST_P(SmoothedDemo, OnlyPoseAndVelocityChange) {
  const Demonstration raw = testing::generated("pick-place", sippuff1d(), 3, 0.2);
  const Demonstration s = smooth(raw);
  ASSERT_EQ(s.size(), raw.size());
  EXPECT_EQ(s.interface, raw.interface);
  EXPECT_EQ(s.dt, raw.dt);
  EXPECT_EQ(s.lifted, raw.lifted);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& a = raw.points[i];
    const auto& b = s.points[i];
    EXPECT_EQ(a.t, b.t);
    EXPECT_EQ(a.mask, b.mask);
    EXPECT_EQ(a.gripper, b.gripper);
    EXPECT_EQ(a.obstacle_dist, b.obstacle_dist);
    EXPECT_NEAR(b.pose.orientation.norm(), 1.0, 1e-12);
  }
  EXPECT_EQ(pct_change(execution_time(raw), execution_time(s)), 0.0);
  EXPECT_TRUE(validate_demonstration(s, sippuff1d()).ok());
}

TEST_P(SmoothedDemo, VelocityActivationStaysUnderInterfaceCap) {
  for (const auto& iface : builtin_interfaces()) {
    const Demonstration raw = testing::generated("peg", iface, 1, 0.2);
    const auto h = activation_histogram(smooth(raw), {});
    EXPECT_LE(h.max_k(), iface.l) << iface.name;
  }
}

TEST_P(SmoothedDemo, EndpointsStayNearRaw) {
  // The spline pins its ends and Savitzky-Golay fits the edge windows exactly
  // for this piecewise-linear motion. The zero-phase Butterworth pads with a
  // short odd reflection, so a ramp entering the edge leaves a sub-millimeter
  // transient.
  const double tol = std::string(GetParam()) == "butterworth" ? 1e-3 : 1e-6;
  const Demonstration raw = testing::generated("translate-L", sippuff1d());
  const Demonstration s = smooth(raw);
  EXPECT_LT((s.points.back().pose.position - raw.points.back().pose.position).norm(), tol);
  EXPECT_LT((s.points.front().pose.position - raw.points.front().pose.position).norm(), tol);
}

INSTANTIATE_TEST_SUITE_P(Filters, SmoothedDemo,
                         ::testing::Values("butterworth", "savgol", "bspline"));

TEST(SmoothedDemoErrors, PreconditionsAreChecked) {
  const Demonstration raw = testing::generated("translate-L", sippuff1d());
  ButterworthParams bw;
  bw.cutoff_hz = 60.0;
  EXPECT_THROW(butterworth_lowpass(raw, bw), InvalidCutoff);
  SavgolParams sg;
  sg.window = 12;
  EXPECT_THROW(savitzky_golay(raw, sg), InvalidWindow);
  Demonstration tiny = raw;
  tiny.points.resize(3);
  EXPECT_THROW(bspline_smooth(tiny), TooShort);
}

TEST(SmoothedDemoErrors, SinglePassIsAvailable) {
  const Demonstration raw = testing::generated("translate-L", sippuff1d());
  ButterworthParams causal;
  causal.zero_phase = false;
  const Demonstration a = butterworth_lowpass(raw, causal);
  const Demonstration b = butterworth_lowpass(raw);
  EXPECT_NE(a.points[300].pose.position.x(), b.points[300].pose.position.x());
  EXPECT_LT(a.points[300].pose.position.x(), raw.points[300].pose.position.x());
}

}  // namespace
}  // namespace liftdemo
