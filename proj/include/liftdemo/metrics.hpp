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
#include <optional>
#include <string>
#include <vector>

#include "liftdemo/segmentation.hpp"

namespace liftdemo {

/// Fraction of motion timesteps with exactly k simultaneously moving
/// dimensions, k = 1..6 (index 0 unused). A timestep with no moving
/// dimension is idle and is excluded from the fractions.
struct ActivationHistogram {
  std::array<double, kNumMotionDims + 1> fraction{};
  double idle_fraction = 0.0;
  std::size_t motion_samples = 0;
  std::size_t total_samples = 0;

  /// Largest k with nonzero mass, 0 when there is no motion.
  int max_k() const;
  /// Mass at k >= `k`.
  double mass_at_least(int k) const;
};

ActivationHistogram activation_histogram(const Demonstration& demo,
                                         const ReconstructionConfig& cfg);

/// Per-timestep moving dimensions, by the same rule as the histogram.
std::vector<DimSet> activation_trace(const Demonstration& demo, const ReconstructionConfig& cfg);

double path_length(const Demonstration& demo);
double execution_time(const Demonstration& demo);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for fewer than two values
  std::size_t n = 0;
};

MeanStd mean_std(const std::vector<double>& values);

/// Distinct active dimensions per maximal run of unconstrained segments.
struct ControllableDims {
  std::vector<int> per_run;
  int max = 0;
  MeanStd stats;
};

ControllableDims max_controllable_dims(const std::vector<Segment>& flagged_segments);
/// Pools runs from several demonstrations for the aggregate statistics.
MeanStd pooled_controllable_dims(const std::vector<ControllableDims>& reports);

/// (new - raw) / raw * 100; 0 when both are 0. Throws InvalidArgument when
/// only the baseline is 0.
double pct_change(double raw, double changed);

struct MetricsReport {
  std::string label;
  double duration_s = 0.0;
  double path_length_m = 0.0;
  ActivationHistogram histogram;
  std::optional<double> time_pct_change;
  std::optional<double> dist_pct_change;
};

MetricsReport compute_metrics(const Demonstration& demo, const ReconstructionConfig& cfg,
                              const Demonstration* baseline = nullptr);

struct ComparisonRow {
  std::string label;
  double raw_time = 0.0;
  double raw_dist = 0.0;
  double smoothed_time = 0.0;
  double smoothed_dist = 0.0;
  double recon_time = 0.0;
  double recon_dist = 0.0;
  double smoothed_time_pct = 0.0;
  double smoothed_dist_pct = 0.0;
  double recon_time_pct = 0.0;
  double recon_dist_pct = 0.0;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  // Aggregates across rows.
  MeanStd raw_time, raw_dist, smoothed_time, smoothed_dist, recon_time, recon_dist;
  MeanStd smoothed_time_pct, smoothed_dist_pct, recon_time_pct, recon_dist_pct;

  std::string to_text() const;
};

/// Rows pair the i-th entries of the three lists. Negative percentages are
/// reductions relative to raw.
ComparisonTable compare(const std::vector<Demonstration>& raw,
                        const std::vector<Demonstration>& smoothed,
                        const std::vector<Demonstration>& reconstructed);

}  // namespace liftdemo
