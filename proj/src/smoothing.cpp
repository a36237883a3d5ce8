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

#include "liftdemo/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>

#include "liftdemo/errors.hpp"
#include "liftdemo/reconstruction.hpp"

namespace liftdemo {

namespace {

using cd = std::complex<double>;

struct SectionState {
  double z1 = 0.0;
  double z2 = 0.0;
};

// Transposed direct form II state that makes a constant input `x` pass
// through unchanged from the first sample.
SectionState steady_state(const Biquad& s, double x) {
  const double gain = (s.b[0] + s.b[1] + s.b[2]) / (1.0 + s.a[1] + s.a[2]);
  const double y = gain * x;
  SectionState st;
  st.z2 = s.b[2] * x - s.a[2] * y;
  st.z1 = s.b[1] * x - s.a[1] * y + st.z2;
  return st;
}

}  // namespace

std::vector<Biquad> design_butterworth(int order, double cutoff_hz, double sample_rate_hz) {
  if (order < 1) throw InvalidArgument("Butterworth order must be >= 1");
  if (!(sample_rate_hz > 0.0) || !(cutoff_hz > 0.0) || !(cutoff_hz < 0.5 * sample_rate_hz)) {
    throw InvalidCutoff("cutoff " + std::to_string(cutoff_hz) + " Hz must lie in (0, " +
                        std::to_string(0.5 * sample_rate_hz) + ") Hz");
  }
  const double fs2 = 2.0 * sample_rate_hz;
  const double warped = fs2 * std::tan(std::numbers::pi * cutoff_hz / sample_rate_hz);

  std::vector<Biquad> sos;
  // Prototype poles exp(i*pi*(2k + n - 1) / (2n)), k = 1..n; take the upper
  // half-plane member of each conjugate pair.
  for (int k = 1; k <= order / 2; ++k) {
    const double theta = std::numbers::pi * (2.0 * k + order - 1) / (2.0 * order);
    const cd s = warped * std::polar(1.0, theta);
    const cd z = (fs2 + s) / (fs2 - s);
    Biquad q;
    q.a = {1.0, -2.0 * z.real(), std::norm(z)};
    const double g = (q.a[0] + q.a[1] + q.a[2]) / 4.0;
    q.b = {g, 2.0 * g, g};
    sos.push_back(q);
  }
  if (order % 2 == 1) {
    const double s = -warped;
    const double z = (fs2 + s) / (fs2 - s);
    Biquad q;
    q.a = {1.0, -z, 0.0};
    const double g = (1.0 - z) / 2.0;
    q.b = {g, g, 0.0};
    sos.push_back(q);
  }
  return sos;
}

double magnitude_response(std::span<const Biquad> sos, double freq_hz, double sample_rate_hz) {
  const cd z1 = std::polar(1.0, -2.0 * std::numbers::pi * freq_hz / sample_rate_hz);
  const cd z2 = z1 * z1;
  cd h = 1.0;
  for (const auto& s : sos) {
    h *= (s.b[0] + s.b[1] * z1 + s.b[2] * z2) / (s.a[0] + s.a[1] * z1 + s.a[2] * z2);
  }
  return std::abs(h);
}

std::vector<double> sos_filter(std::span<const Biquad> sos, std::span<const double> x,
                               bool steady_start) {
  std::vector<double> y(x.begin(), x.end());
  if (y.empty()) return y;
  for (const auto& s : sos) {
    SectionState st = steady_start ? steady_state(s, y.front()) : SectionState{};
    for (double& v : y) {
      const double in = v;
      const double out = s.b[0] * in + st.z1;
      st.z1 = s.b[1] * in - s.a[1] * out + st.z2;
      st.z2 = s.b[2] * in - s.a[2] * out;
      v = out;
    }
  }
  return y;
}

std::vector<double> sos_filtfilt(std::span<const Biquad> sos, std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 2) return {x.begin(), x.end()};
  const std::size_t wanted = 3 * (2 * sos.size() + 1);
  const std::size_t pad = std::min(wanted, n - 1);

  std::vector<double> ext;
  ext.reserve(n + 2 * pad);
  for (std::size_t i = pad; i >= 1; --i) ext.push_back(2.0 * x[0] - x[i]);
  ext.insert(ext.end(), x.begin(), x.end());
  for (std::size_t i = 1; i <= pad; ++i) ext.push_back(2.0 * x[n - 1] - x[n - 1 - i]);

  std::vector<double> fwd = sos_filter(sos, ext, true);
  std::reverse(fwd.begin(), fwd.end());
  std::vector<double> back = sos_filter(sos, fwd, true);
  std::reverse(back.begin(), back.end());
  return {back.begin() + static_cast<std::ptrdiff_t>(pad),
          back.begin() + static_cast<std::ptrdiff_t>(pad + n)};
}

namespace {

void check_savgol(int window, int polyorder) {
  if (window < 1 || window % 2 == 0) {
    throw InvalidWindow("Savitzky-Golay window must be a positive odd number");
  }
  if (polyorder < 0 || polyorder >= window) {
    throw InvalidWindow("Savitzky-Golay polyorder must be in [0, window)");
  }
}

// Least-squares projector onto polynomials of degree `polyorder` sampled at
// offsets 0..window-1 relative to `origin`: row r gives the fitted value at
// sample r.
Eigen::MatrixXd savgol_hat(int window, int polyorder, double origin) {
  Eigen::MatrixXd A(window, polyorder + 1);
  for (int i = 0; i < window; ++i) {
    const double u = static_cast<double>(i) - origin;
    double pw = 1.0;
    for (int j = 0; j <= polyorder; ++j) {
      A(i, j) = pw;
      pw *= u;
    }
  }
  const Eigen::MatrixXd pinv = A.colPivHouseholderQr().solve(Eigen::MatrixXd::Identity(window, window));
  return A * pinv;
}

}  // namespace

std::vector<double> savgol_coefficients(int window, int polyorder) {
  check_savgol(window, polyorder);
  const int half = window / 2;
  const Eigen::MatrixXd hat = savgol_hat(window, polyorder, half);
  std::vector<double> c(static_cast<std::size_t>(window));
  for (int i = 0; i < window; ++i) c[static_cast<std::size_t>(i)] = hat(half, i);
  return c;
}

std::vector<double> savgol_channel(std::span<const double> x, int window, int polyorder) {
  check_savgol(window, polyorder);
  const auto n = static_cast<int>(x.size());
  if (n < window) {
    throw InvalidWindow("Savitzky-Golay window " + std::to_string(window) +
                        " exceeds the signal length " + std::to_string(n));
  }
  const int half = window / 2;
  const Eigen::MatrixXd hat = savgol_hat(window, polyorder, half);
  std::vector<double> y(x.size());
  auto apply = [&](int row, int start) {
    double acc = 0.0;
    for (int i = 0; i < window; ++i) acc += hat(row, i) * x[static_cast<std::size_t>(start + i)];
    return acc;
  };
  for (int k = 0; k < n; ++k) {
    if (k < half) {
      y[static_cast<std::size_t>(k)] = apply(k, 0);
    } else if (k >= n - half) {
      y[static_cast<std::size_t>(k)] = apply(k - (n - window), n - window);
    } else {
      y[static_cast<std::size_t>(k)] = apply(half, k - half);
    }
  }
  return y;
}

namespace {

class ClampedBasis {
 public:
  ClampedBasis(std::span<const double> breaks, int degree) : degree_(degree) {
    const double lo = breaks.front();
    const double hi = breaks.back();
    knots_.assign(static_cast<std::size_t>(degree + 1), lo);
    knots_.insert(knots_.end(), breaks.begin() + 1, breaks.end() - 1);
    knots_.insert(knots_.end(), static_cast<std::size_t>(degree + 1), hi);
  }

  int size() const { return static_cast<int>(knots_.size()) - degree_ - 1; }

  int span(double x) const {
    const int n = size();
    if (x >= knots_[static_cast<std::size_t>(n)]) return n - 1;
    const auto it = std::upper_bound(knots_.begin() + degree_, knots_.begin() + n + 1, x);
    return static_cast<int>(it - knots_.begin()) - 1;
  }

  // ders[k][j]: k-th derivative of basis function span - degree + j at x.
  std::vector<std::vector<double>> derivatives(int span, double x, int nderiv) const {
    const int p = degree_;
    const auto& U = knots_;
    std::vector<std::vector<double>> ndu(p + 1, std::vector<double>(p + 1));
    std::vector<double> left(p + 1), right(p + 1);
    ndu[0][0] = 1.0;
    for (int j = 1; j <= p; ++j) {
      left[j] = x - U[static_cast<std::size_t>(span + 1 - j)];
      right[j] = U[static_cast<std::size_t>(span + j)] - x;
      double saved = 0.0;
      for (int r = 0; r < j; ++r) {
        ndu[j][r] = right[r + 1] + left[j - r];
        const double temp = ndu[r][j - 1] / ndu[j][r];
        ndu[r][j] = saved + right[r + 1] * temp;
        saved = left[j - r] * temp;
      }
      ndu[j][j] = saved;
    }
    std::vector<std::vector<double>> ders(nderiv + 1, std::vector<double>(p + 1, 0.0));
    for (int j = 0; j <= p; ++j) ders[0][j] = ndu[j][p];
    std::vector<std::vector<double>> a(2, std::vector<double>(p + 1));
    for (int r = 0; r <= p; ++r) {
      int s1 = 0;
      int s2 = 1;
      a[0][0] = 1.0;
      for (int k = 1; k <= nderiv && k <= p; ++k) {
        double d = 0.0;
        const int rk = r - k;
        const int pk = p - k;
        if (r >= k) {
          a[s2][0] = a[s1][0] / ndu[pk + 1][rk];
          d = a[s2][0] * ndu[rk][pk];
        }
        const int j1 = rk >= -1 ? 1 : -rk;
        const int j2 = r - 1 <= pk ? k - 1 : p - r;
        for (int j = j1; j <= j2; ++j) {
          a[s2][j] = (a[s1][j] - a[s1][j - 1]) / ndu[pk + 1][rk + j];
          d += a[s2][j] * ndu[rk + j][pk];
        }
        if (r <= pk) {
          a[s2][k] = -a[s1][k - 1] / ndu[pk + 1][r];
          d += a[s2][k] * ndu[r][pk];
        }
        ders[k][r] = d;
        std::swap(s1, s2);
      }
    }
    double factor = p;
    for (int k = 1; k <= nderiv && k <= p; ++k) {
      for (int j = 0; j <= p; ++j) ders[k][j] *= factor;
      factor *= p - k;
    }
    return ders;
  }

 private:
  int degree_;
  std::vector<double> knots_;
};

}  // namespace

std::vector<double> smoothing_spline_channel(std::span<const double> t, std::span<const double> y,
                                             int degree, double lambda) {
  if (degree < 1 || degree > 5) throw InvalidArgument("spline degree must lie in [1, 5]");
  if (t.size() != y.size()) throw InvalidArgument("spline time and value lengths differ");
  const auto n = static_cast<int>(y.size());
  if (n < degree + 1) {
    throw TooShort("spline of degree " + std::to_string(degree) + " needs at least " +
                   std::to_string(degree + 1) + " samples");
  }
  if (lambda < 0.0) throw InvalidArgument("spline smoothing weight must be non-negative");
  for (int i = 0; i + 1 < n; ++i) {
    if (!(t[static_cast<std::size_t>(i + 1)] > t[static_cast<std::size_t>(i)])) {
      throw InvalidArgument("spline abscissae must be strictly increasing");
    }
  }

  const ClampedBasis basis(t, degree);
  const int nb = basis.size();
  using Triplet = Eigen::Triplet<double>;
  std::vector<Triplet> normal;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nb);

  for (int i = 0; i < n; ++i) {
    const double x = t[static_cast<std::size_t>(i)];
    const int sp = basis.span(x);
    const auto d = basis.derivatives(sp, x, 0);
    for (int a = 0; a <= degree; ++a) {
      const int ia = sp - degree + a;
      rhs[ia] += d[0][a] * y[static_cast<std::size_t>(i)];
      for (int b = 0; b <= degree; ++b) normal.emplace_back(ia, sp - degree + b, d[0][a] * d[0][b]);
    }
  }

  if (degree >= 2 && lambda > 0.0) {
    // Five-point Gauss-Legendre is exact for the products of second
    // derivatives up to degree 5.
    static constexpr std::array<double, 5> kNodes = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                                     0.5384693101056831, 0.9061798459386640};
    static constexpr std::array<double, 5> kWeights = {0.2369268850561891, 0.4786286704993665,
                                                       0.5688888888888889, 0.4786286704993665,
                                                       0.2369268850561891};
    for (int i = 0; i + 1 < n; ++i) {
      const double lo = t[static_cast<std::size_t>(i)];
      const double hi = t[static_cast<std::size_t>(i + 1)];
      const double half = 0.5 * (hi - lo);
      const int sp = basis.span(0.5 * (lo + hi));
      for (std::size_t g = 0; g < kNodes.size(); ++g) {
        const double x = 0.5 * (lo + hi) + half * kNodes[g];
        const auto d = basis.derivatives(sp, x, 2);
        const double w = lambda * half * kWeights[g];
        for (int a = 0; a <= degree; ++a) {
          for (int b = 0; b <= degree; ++b) {
            normal.emplace_back(sp - degree + a, sp - degree + b, w * d[2][a] * d[2][b]);
          }
        }
      }
    }
  }

  Eigen::SparseMatrix<double> M(nb, nb);
  M.setFromTriplets(normal.begin(), normal.end());

  // Pin the first and last coefficients (the clamped end values) to the data
  // and solve for the interior ones.
  const double first = y.front();
  const double last = y.back();
  Eigen::VectorXd c(nb);
  c[0] = first;
  c[nb - 1] = last;
  if (nb > 2) {
    const int m = nb - 2;
    Eigen::SparseMatrix<double> inner = M.block(1, 1, m, m);
    Eigen::VectorXd b = rhs.segment(1, m) - M.block(1, 0, m, 1) * Eigen::VectorXd::Constant(1, first) -
                        M.block(1, nb - 1, m, 1) * Eigen::VectorXd::Constant(1, last);
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(inner);
    if (solver.info() != Eigen::Success) throw Error("smoothing spline system is singular");
    c.segment(1, m) = solver.solve(b);
  }

  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = t[static_cast<std::size_t>(i)];
    const int sp = basis.span(x);
    const auto d = basis.derivatives(sp, x, 0);
    double v = 0.0;
    for (int a = 0; a <= degree; ++a) v += d[0][a] * c[sp - degree + a];
    out[static_cast<std::size_t>(i)] = v;
  }
  out.front() = first;
  out.back() = last;
  return out;
}

double spline_lambda_for_cutoff(double cutoff_hz, double dt) {
  if (!(cutoff_hz > 0.0) || !(dt > 0.0)) throw InvalidCutoff("spline cutoff and dt must be > 0");
  const double omega = 2.0 * std::numbers::pi * cutoff_hz;
  return (1.0 / dt) / std::pow(omega, 4);
}

namespace {

using ChannelFilter = std::function<std::vector<double>(std::span<const double>)>;

Demonstration smooth_pose_channels(const Demonstration& demo, const ChannelFilter& filter) {
  Demonstration out = demo;
  const std::size_t n = demo.points.size();
  if (n == 0) return out;

  std::array<std::vector<double>, 7> ch;
  for (auto& c : ch) c.resize(n);
  Eigen::Vector4d prev = demo.points.front().pose.orientation.coeffs();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = demo.points[i];
    for (int a = 0; a < 3; ++a) ch[static_cast<std::size_t>(a)][i] = p.pose.position[a];
    Eigen::Vector4d q = p.pose.orientation.coeffs();
    if (q.dot(prev) < 0.0) q = -q;
    prev = q;
    for (int a = 0; a < 4; ++a) ch[static_cast<std::size_t>(3 + a)][i] = q[a];
  }
  for (auto& c : ch) c = filter(c);

  std::vector<Pose> poses(n);
  for (std::size_t i = 0; i < n; ++i) {
    Pose& pose = poses[i];
    pose.position = Vec3(ch[0][i], ch[1][i], ch[2][i]);
    Eigen::Vector4d q(ch[3][i], ch[4][i], ch[5][i], ch[6][i]);
    pose.orientation = Quat(q).normalized();
  }
  const auto vel = finite_difference_velocities(poses, demo.dt);
  for (std::size_t i = 0; i < n; ++i) {
    auto& p = out.points[i];
    p.pose = poses[i];
    for (int d = 0; d < kNumMotionDims; ++d) {
      p.vel[d] = (demo.lifted || p.mask.test(d)) ? vel[i][d] : 0.0;
    }
  }
  return out;
}

}  // namespace

Demonstration butterworth_lowpass(const Demonstration& demo, const ButterworthParams& p) {
  const auto sos = design_butterworth(p.order, p.cutoff_hz, 1.0 / demo.dt);
  return smooth_pose_channels(demo, [&](std::span<const double> x) {
    return p.zero_phase ? sos_filtfilt(sos, x) : sos_filter(sos, x, true);
  });
}

Demonstration savitzky_golay(const Demonstration& demo, const SavgolParams& p) {
  check_savgol(p.window, p.polyorder);
  return smooth_pose_channels(
      demo, [&](std::span<const double> x) { return savgol_channel(x, p.window, p.polyorder); });
}

Demonstration bspline_smooth(const Demonstration& demo, const BsplineParams& p) {
  if (static_cast<int>(demo.points.size()) < p.degree + 1) {
    throw TooShort("demonstration too short for a degree-" + std::to_string(p.degree) +
                   " spline");
  }
  const double lambda = spline_lambda_for_cutoff(p.cutoff_hz, demo.dt);
  std::vector<double> t(demo.points.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = demo.points[i].t;
  return smooth_pose_channels(demo, [&](std::span<const double> x) {
    return smoothing_spline_channel(t, x, p.degree, lambda);
  });
}

}  // namespace liftdemo
