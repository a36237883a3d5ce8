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

#include "liftdemo/metrics.hpp"

#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "liftdemo/errors.hpp"

namespace liftdemo {

int ActivationHistogram::max_k() const {
  for (int k = kNumMotionDims; k >= 1; --k) {
    if (fraction[static_cast<std::size_t>(k)] > 0.0) return k;
  }
  return 0;
}

double ActivationHistogram::mass_at_least(int k) const {
  double m = 0.0;
  for (int i = std::max(1, k); i <= kNumMotionDims; ++i) m += fraction[static_cast<std::size_t>(i)];
  return m;
}

std::vector<DimSet> activation_trace(const Demonstration& demo, const ReconstructionConfig& cfg) {
  const ActivityScale scale = ActivityScale::of(demo);
  std::vector<DimSet> out;
  out.reserve(demo.points.size());
  for (const auto& p : demo.points) {
    out.push_back(moving_dims(p, scale, cfg.activation_vel_threshold));
  }
  return out;
}

ActivationHistogram activation_histogram(const Demonstration& demo,
                                         const ReconstructionConfig& cfg) {
  ActivationHistogram h;
  h.total_samples = demo.points.size();
  std::array<std::size_t, kNumMotionDims + 1> counts{};
  for (DimSet s : activation_trace(demo, cfg)) ++counts[static_cast<std::size_t>(s.count())];
  h.motion_samples = h.total_samples - counts[0];
  if (h.total_samples > 0) {
    h.idle_fraction = static_cast<double>(counts[0]) / static_cast<double>(h.total_samples);
  }
  if (h.motion_samples > 0) {
    for (int k = 1; k <= kNumMotionDims; ++k) {
      h.fraction[static_cast<std::size_t>(k)] =
          static_cast<double>(counts[static_cast<std::size_t>(k)]) /
          static_cast<double>(h.motion_samples);
    }
  }
  return h;
}

double path_length(const Demonstration& demo) {
  double len = 0.0;
  for (std::size_t i = 1; i < demo.points.size(); ++i) {
    len += (demo.points[i].pose.position - demo.points[i - 1].pose.position).norm();
  }
  return len;
}

double execution_time(const Demonstration& demo) { return demo.duration(); }

MeanStd mean_std(const std::vector<double>& values) {
  MeanStd r;
  r.n = values.size();
  if (values.empty()) return r;
  r.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(r.n);
  if (r.n > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - r.mean) * (v - r.mean);
    r.std = std::sqrt(ss / static_cast<double>(r.n - 1));
  }
  return r;
}

ControllableDims max_controllable_dims(const std::vector<Segment>& segs) {
  ControllableDims out;
  std::optional<DimSet> run;
  auto close = [&]() {
    if (!run) return;
    const int count = (*run & DimSet::motion()).count();
    out.per_run.push_back(count);
    out.max = std::max(out.max, count);
    run.reset();
  };
  for (const auto& s : segs) {
    if (s.constrained()) {
      close();
      continue;
    }
    if (!run) run = DimSet{};
    *run |= s.active_dims;
  }
  close();
  std::vector<double> v(out.per_run.begin(), out.per_run.end());
  out.stats = mean_std(v);
  return out;
}

MeanStd pooled_controllable_dims(const std::vector<ControllableDims>& reports) {
  std::vector<double> v;
  for (const auto& r : reports) v.insert(v.end(), r.per_run.begin(), r.per_run.end());
  return mean_std(v);
}

double pct_change(double raw, double changed) {
  if (raw == 0.0) {
    if (changed == 0.0) return 0.0;
    throw InvalidArgument("percent change against a zero baseline");
  }
  return (changed - raw) / raw * 100.0;
}

MetricsReport compute_metrics(const Demonstration& demo, const ReconstructionConfig& cfg,
                              const Demonstration* baseline) {
  MetricsReport r;
  r.label = demo.task_label;
  r.duration_s = execution_time(demo);
  r.path_length_m = path_length(demo);
  r.histogram = activation_histogram(demo, cfg);
  if (baseline) {
    r.time_pct_change = pct_change(execution_time(*baseline), r.duration_s);
    r.dist_pct_change = pct_change(path_length(*baseline), r.path_length_m);
  }
  return r;
}

ComparisonTable compare(const std::vector<Demonstration>& raw,
                        const std::vector<Demonstration>& smoothed,
                        const std::vector<Demonstration>& reconstructed) {
  if (raw.size() != smoothed.size() || raw.size() != reconstructed.size()) {
    throw InvalidArgument("compare needs the same number of raw, smoothed and reconstructed demos");
  }
  ComparisonTable table;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    ComparisonRow row;
    row.label = raw[i].task_label.empty() ? "demo" + std::to_string(i) : raw[i].task_label;
    row.raw_time = execution_time(raw[i]);
    row.raw_dist = path_length(raw[i]);
    row.smoothed_time = execution_time(smoothed[i]);
    row.smoothed_dist = path_length(smoothed[i]);
    row.recon_time = execution_time(reconstructed[i]);
    row.recon_dist = path_length(reconstructed[i]);
    row.smoothed_time_pct = pct_change(row.raw_time, row.smoothed_time);
    row.smoothed_dist_pct = pct_change(row.raw_dist, row.smoothed_dist);
    row.recon_time_pct = pct_change(row.raw_time, row.recon_time);
    row.recon_dist_pct = pct_change(row.raw_dist, row.recon_dist);
    table.rows.push_back(row);
  }
  auto agg = [&](double ComparisonRow::*field) {
    std::vector<double> v;
    for (const auto& r : table.rows) v.push_back(r.*field);
    return mean_std(v);
  };
  table.raw_time = agg(&ComparisonRow::raw_time);
  table.raw_dist = agg(&ComparisonRow::raw_dist);
  table.smoothed_time = agg(&ComparisonRow::smoothed_time);
  table.smoothed_dist = agg(&ComparisonRow::smoothed_dist);
  table.recon_time = agg(&ComparisonRow::recon_time);
  table.recon_dist = agg(&ComparisonRow::recon_dist);
  table.smoothed_time_pct = agg(&ComparisonRow::smoothed_time_pct);
  table.smoothed_dist_pct = agg(&ComparisonRow::smoothed_dist_pct);
  table.recon_time_pct = agg(&ComparisonRow::recon_time_pct);
  table.recon_dist_pct = agg(&ComparisonRow::recon_dist_pct);
  return table;
}

std::string ComparisonTable::to_text() const {
  std::ostringstream os;
  os << std::fixed;
  auto cell = [&](double v, double pct) {
    std::ostringstream c;
    c << std::fixed << std::setprecision(2) << v << " (" << std::showpos << std::setprecision(1)
      << pct << "%)";
    return c.str();
  };
  os << std::left << std::setw(16) << "demo" << std::setw(10) << "raw t" << std::setw(10)
     << "raw d" << std::setw(20) << "smoothed t" << std::setw(20) << "smoothed d"
     << std::setw(20) << "recon t" << std::setw(20) << "recon d" << "\n";
  for (const auto& r : rows) {
    os << std::setw(16) << r.label << std::setprecision(2) << std::setw(10) << r.raw_time
       << std::setw(10) << r.raw_dist << std::setw(20) << cell(r.smoothed_time, r.smoothed_time_pct)
       << std::setw(20) << cell(r.smoothed_dist, r.smoothed_dist_pct) << std::setw(20)
       << cell(r.recon_time, r.recon_time_pct) << std::setw(20)
       << cell(r.recon_dist, r.recon_dist_pct) << "\n";
  }
  auto ms = [](const MeanStd& m) {
    std::ostringstream c;
    c << std::fixed << std::setprecision(2) << m.mean << "+-" << m.std;
    return c.str();
  };
  os << std::setw(16) << "mean+-std" << std::setw(10) << ms(raw_time) << std::setw(10)
     << ms(raw_dist) << std::setw(20) << ms(smoothed_time_pct) + "%" << std::setw(20)
     << ms(smoothed_dist_pct) + "%" << std::setw(20) << ms(recon_time_pct) + "%" << std::setw(20)
     << ms(recon_dist_pct) + "%" << "\n";
  return os.str();
}

}  // namespace liftdemo
