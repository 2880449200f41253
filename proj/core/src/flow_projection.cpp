// Copyright 2026 The ridgeflow Authors
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


#include "ridgeflow/flow_projection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>

namespace ridgeflow {

void FlowConfig::validate() const {
  if (tangent_half_length < 1) throw ConfigError("tangent_half_length must be >= 1");
  if (perp_half_length < 1) throw ConfigError("perp_half_length must be >= 1");
  if (coarse_divisions < 1) throw ConfigError("coarse step must divide pi into at least one angle");
  if (fine_divisions < coarse_divisions) throw ConfigError("fine_step must not exceed coarse_step");
  if (fine_half_steps < 0) throw ConfigError("fine_half_steps must be >= 0");
  if (fine_half_range() > coarse_step() / 2.0 + fine_step() + 1e-12) {
    throw ConfigError("fine_half_range must not exceed coarse_step/2 + fine_step");
  }
  if (stride < 1) throw ConfigError("stride must be >= 1");
  if (!(background_variance_threshold >= 0.0)) throw ConfigError("background_variance_threshold must be >= 0");
  if (!(presmooth_sigma >= 0.0)) throw ConfigError("presmooth_sigma must be >= 0");
}

AngleKey AngleKey::make(long num, long den) {
  if (den <= 0) throw ConfigError("angle denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const long g = std::gcd(num, den);
  return g > 0 ? AngleKey{num / g, den / g} : AngleKey{0, 1};
}

std::vector<AngleKey> coarse_candidates(const FlowConfig& cfg) {
  std::vector<AngleKey> out;
  for (long k = 0; k < cfg.coarse_divisions; ++k) out.push_back(AngleKey::make(k, cfg.coarse_divisions));
  return out;
}

std::vector<AngleKey> fine_candidates(const FlowConfig& cfg, AngleKey coarse) {
  // coarse.num/coarse.den + j/F, over the common denominator den*F.
  const long f = cfg.fine_divisions;
  std::vector<AngleKey> out;
  for (long j = -cfg.fine_half_steps; j <= cfg.fine_half_steps; ++j) {
    if (j == 0) continue;
    out.push_back(AngleKey::make(coarse.num * f + j * coarse.den, coarse.den * f));
  }
  return out;
}

namespace {

// Two-pass population standard deviation; nullopt below two samples.
std::optional<double> stddev(std::span<const double> v) {
  if (v.size() < 2) return std::nullopt;
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size()));
}

std::optional<double> min_of(std::optional<double> a, std::optional<double> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// One-pass variance from running sums, clamped against round-off.
std::optional<double> sigma_from_sums(double s1, double s2, int n) {
  if (n < 2) return std::nullopt;
  const double mean = s1 / n;
  return std::sqrt(std::max(0.0, s2 / n - mean * mean));
}

}  // namespace

std::optional<double> sigma_q(const GrayImage& image, Point q, double alpha, const FlowConfig& cfg) {
  const int h = cfg.perp_half_length;
  const auto pts = line_points({q, alpha + std::numbers::pi / 2.0, h, 1.0});
  std::vector<double> full;
  std::vector<double> first;
  std::vector<double> second;
  for (int i = 0; i <= 2 * h; ++i) {
    const auto v = sample_bilinear(image, pts[static_cast<std::size_t>(i)]);
    if (!v) continue;
    full.push_back(*v);
    if (i <= h) first.push_back(*v);
    if (i >= h) second.push_back(*v);
  }
  std::optional<double> result = stddev(full);
  if (cfg.half_line_rule) {
    result = min_of(result, stddev(first));
    result = min_of(result, stddev(second));
  }
  return result;
}

std::optional<double> mu_alpha(const GrayImage& image, Point p, double alpha, const FlowConfig& cfg) {
  double sum = 0.0;
  int n = 0;
  for (const Point& q : line_points({p, alpha, cfg.tangent_half_length, 1.0})) {
    if (const auto s = sigma_q(image, q, alpha, cfg)) {
      sum += *s;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

std::optional<double> dominant_orientation(const GrayImage& image, Point p, const FlowConfig& cfg) {
  const auto best = search_min_alpha(cfg, [&](AngleKey a) { return mu_alpha(image, p, a.radians(), cfg); });
  if (!best) return std::nullopt;
  return wrap_orientation(best->radians() + std::numbers::pi / 2.0);
}

double patch_variance(const GrayImage& image, Point p, int half) {
  const int cx = static_cast<int>(std::lround(p.x));
  const int cy = static_cast<int>(std::lround(p.y));
  double s1 = 0.0;
  double s2 = 0.0;
  int n = 0;
  for (int y = std::max(0, cy - half); y <= std::min(image.height() - 1, cy + half); ++y) {
    for (int x = std::max(0, cx - half); x <= std::min(image.width() - 1, cx + half); ++x) {
      const double v = image.at(x, y);
      s1 += v;
      s2 += v * v;
      ++n;
    }
  }
  if (n == 0) return 0.0;
  const double mean = s1 / n;
  return std::max(0.0, s2 / n - mean * mean);
}

ProjectionEstimator::ProjectionEstimator(const GrayImage& image, const FlowConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  image_ = image;
  std::vector<AngleKey> needed;
  for (const AngleKey& c : coarse_candidates(cfg_)) {
    needed.push_back(c);
    for (const AngleKey& f : fine_candidates(cfg_, c)) needed.push_back(f);
  }
  for (const AngleKey& a : needed) {
    if (tables_.contains(a)) continue;
    ColumnStats t;
    t.rotated = rotate_image(image, a.radians());
    const int w = t.rotated.width();
    const int h = t.rotated.height();
    const std::size_t n = static_cast<std::size_t>(h + 1) * w;
    t.sum.assign(n, 0.0);
    t.sum_sq.assign(n, 0.0);
    t.count.assign(n, 0);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const std::size_t above = static_cast<std::size_t>(y) * w + x;
        const std::size_t here = above + w;
        double v = 0.0;
        int c = 0;
        if (t.rotated.is_valid(x, y)) {
          v = t.rotated.values.at(x, y);
          c = 1;
        }
        t.sum[here] = t.sum[above] + v;
        t.sum_sq[here] = t.sum_sq[above] + v * v;
        t.count[here] = t.count[above] + c;
      }
    }
    tables_.emplace(a, std::move(t));
  }
}

const ProjectionEstimator::ColumnStats& ProjectionEstimator::table(AngleKey alpha) const {
  const auto it = tables_.find(alpha);
  if (it == tables_.end()) {
    throw ConfigError("angle " + std::to_string(alpha.num) + "pi/" + std::to_string(alpha.den) +
                      " is not a candidate of this estimator");
  }
  return it->second;
}

std::optional<double> ProjectionEstimator::column_sigma(const ColumnStats& t, int x, int y0, int y1) const {
  const int w = t.rotated.width();
  if (x < 0 || x >= w) return std::nullopt;
  y0 = std::max(y0, 0);
  y1 = std::min(y1, t.rotated.height() - 1);
  if (y1 < y0) return std::nullopt;
  const std::size_t lo = static_cast<std::size_t>(y0) * w + x;
  const std::size_t hi = static_cast<std::size_t>(y1 + 1) * w + x;
  return sigma_from_sums(t.sum[hi] - t.sum[lo], t.sum_sq[hi] - t.sum_sq[lo], t.count[hi] - t.count[lo]);
}

std::optional<double> ProjectionEstimator::mu_at(const ColumnStats& t, int ux, int uy) const {
  const int h = cfg_.perp_half_length;
  double sum = 0.0;
  int n = 0;
  for (int k = -cfg_.tangent_half_length; k <= cfg_.tangent_half_length; ++k) {
    const int x = ux + k;
    std::optional<double> s = column_sigma(t, x, uy - h, uy + h);
    if (cfg_.half_line_rule) {
      s = min_of(s, column_sigma(t, x, uy - h, uy));
      s = min_of(s, column_sigma(t, x, uy, uy + h));
    }
    if (s) {
      sum += *s;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

bool ProjectionEstimator::footprint_inside(Point p, double alpha) const {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  const double t = cfg_.tangent_half_length;
  const double h = cfg_.perp_half_length;
  for (const double a : {-t, t}) {
    for (const double b : {-h, h}) {
      const double x = p.x + a * c - b * s;
      const double y = p.y + a * s + b * c;
      if (x < 1.0 || y < 1.0 || x > image_.width() - 2.0 || y > image_.height() - 2.0) return false;
    }
  }
  return true;
}

std::optional<double> ProjectionEstimator::mu(Point p, AngleKey alpha) const {
  const ColumnStats& t = table(alpha);
  if (!footprint_inside(p, alpha.radians())) return mu_alpha(image_, p, alpha.radians(), cfg_);
  const Point r = t.rotated.to_rotated(p);
  const auto split = [](double v, int& cell, double& frac) {
    const double nearest = std::round(v);
    if (std::abs(v - nearest) < 1e-9) {
      cell = static_cast<int>(nearest);
      frac = 0.0;
    } else {
      cell = static_cast<int>(std::floor(v));
      frac = v - cell;
    }
  };
  int x0 = 0;
  int y0 = 0;
  double fx = 0.0;
  double fy = 0.0;
  split(r.x, x0, fx);
  split(r.y, y0, fy);

  double acc = 0.0;
  double wsum = 0.0;
  for (int dy = 0; dy <= (fy > 0.0 ? 1 : 0); ++dy) {
    for (int dx = 0; dx <= (fx > 0.0 ? 1 : 0); ++dx) {
      const double w = (dx ? fx : 1.0 - fx) * (dy ? fy : 1.0 - fy);
      if (w <= 0.0) continue;
      if (const auto m = mu_at(t, x0 + dx, y0 + dy)) {
        acc += w * *m;
        wsum += w;
      }
    }
  }
  if (wsum <= 0.0) return std::nullopt;
  return acc / wsum;
}

std::optional<AngleKey> ProjectionEstimator::min_alpha(Point p) const {
  return search_min_alpha(cfg_, [&](AngleKey a) { return mu(p, a); });
}

std::optional<double> ProjectionEstimator::orientation(Point p) const {
  const auto best = min_alpha(p);
  if (!best) return std::nullopt;
  return wrap_orientation(best->radians() + std::numbers::pi / 2.0);
}

namespace {

void check_flow_input(const GrayImage& image, const FlowConfig& cfg) {
  cfg.validate();
  const int min_size = cfg.min_image_size();
  if (image.width() < min_size || image.height() < min_size) {
    throw DimensionError("image is " + std::to_string(image.width()) + "x" + std::to_string(image.height()) +
                         "; projection flow needs at least " + std::to_string(min_size) + "x" +
                         std::to_string(min_size));
  }
}

template <typename OrientationFn>
FlowField fill_flow_field(const GrayImage& image, const FlowConfig& cfg, OrientationFn&& orientation) {
  FlowField flow = FlowField::for_image(image.width(), image.height(), cfg.stride);
  for (int j = 0; j < flow.grid_height; ++j) {
    for (int i = 0; i < flow.grid_width; ++i) {
      const Point site = flow.site(i, j);
      if (patch_variance(image, site, cfg.tangent_half_length) < cfg.background_variance_threshold) continue;
      if (const auto theta = orientation(site)) flow.set(i, j, *theta);
    }
  }
  return flow;
}

}  // namespace

FlowField compute_flow_field(const GrayImage& image, const FlowConfig& cfg) {
  check_flow_input(image, cfg);
  const ProjectionEstimator estimator(gaussian_smooth(image, cfg.presmooth_sigma), cfg);
  return fill_flow_field(image, cfg, [&](Point p) { return estimator.orientation(p); });
}

FlowField compute_flow_field_direct(const GrayImage& image, const FlowConfig& cfg) {
  check_flow_input(image, cfg);
  const GrayImage smoothed = gaussian_smooth(image, cfg.presmooth_sigma);
  return fill_flow_field(image, cfg, [&](Point p) { return dominant_orientation(smoothed, p, cfg); });
}

}  // namespace ridgeflow
