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


#pragma once

#include <map>
#include <numbers>
#include <optional>
#include <vector>

#include "ridgeflow/flow_field.hpp"
#include "ridgeflow/image.hpp"
#include "ridgeflow/rotate.hpp"

namespace ridgeflow {

/// Parameters of the projection-variance orientation estimator.
///
/// Angular steps are stored as divisions of pi so that every candidate angle
/// is an exact rational multiple of pi: coarse_step = pi / coarse_divisions,
/// fine_step = pi / fine_divisions, and the refinement window spans
/// +/- fine_half_steps * fine_step around the coarse optimum.
struct FlowConfig {
  int tangent_half_length = 8;
  int perp_half_length = 8;
  int coarse_divisions = 8;
  int fine_divisions = 32;
  int fine_half_steps = 2;
  int stride = 2;
  double background_variance_threshold = 25.0;
  /// Use min(sigma(L'), sigma(first half), sigma(second half)) per
  /// perpendicular. When false only the full perpendicular counts.
  bool half_line_rule = true;
  /// Gaussian blur applied by compute_flow_field* before estimation; 0
  /// disables it.
  double presmooth_sigma = 1.0;

  double coarse_step() const { return std::numbers::pi / coarse_divisions; }
  double fine_step() const { return std::numbers::pi / fine_divisions; }
  double fine_half_range() const { return fine_half_steps * fine_step(); }

  /// Throws ConfigError when an invariant is violated.
  void validate() const;
  /// Smallest width/height accepted by compute_flow_field.
  int min_image_size() const { return 2 * (tangent_half_length + perp_half_length); }
  /// Margin separating interior sites from border-affected ones.
  int interior_margin() const { return tangent_half_length + perp_half_length; }
};

/// An angle k * pi / den, kept in lowest terms with 0 <= k < den.
struct AngleKey {
  long num = 0;
  long den = 1;

  static AngleKey make(long num, long den);
  double radians() const { return std::numbers::pi * static_cast<double>(num) / static_cast<double>(den); }
  friend auto operator<=>(const AngleKey&, const AngleKey&) = default;
};

/// Coarse candidates 0, pi/C, ..., (C-1)pi/C.
std::vector<AngleKey> coarse_candidates(const FlowConfig& cfg);
/// Refinement candidates around `coarse`, ordered by offset from
/// -fine_half_steps to +fine_half_steps with the zero offset omitted.
std::vector<AngleKey> fine_candidates(const FlowConfig& cfg, AngleKey coarse);

/// Standard deviation of the perpendicular through q at angle alpha, with
/// the half-line rule applied. Only in-bounds samples count; a segment with
/// fewer than two samples offers no candidate. nullopt if none qualifies.
std::optional<double> sigma_q(const GrayImage& image, Point q, double alpha, const FlowConfig& cfg);

/// Mean of sigma_q over the 2 * tangent_half_length + 1 points of L(p, alpha),
/// skipping undefined values.
std::optional<double> mu_alpha(const GrayImage& image, Point p, double alpha, const FlowConfig& cfg);

/// Coarse-to-fine argmin of mu over alpha, evaluated with a caller-provided
/// mu function. Returns the minimizing alpha (not yet shifted by pi/2).
/// Ties keep the coarse winner, then the earliest candidate.
template <typename MuFn>
std::optional<AngleKey> search_min_alpha(const FlowConfig& cfg, MuFn&& mu) {
  std::optional<AngleKey> best;
  double best_mu = 0.0;
  for (const AngleKey& a : coarse_candidates(cfg)) {
    const std::optional<double> m = mu(a);
    if (m && (!best || *m < best_mu)) {
      best = a;
      best_mu = *m;
    }
  }
  if (!best) return std::nullopt;
  const AngleKey coarse = *best;
  for (const AngleKey& a : fine_candidates(cfg, coarse)) {
    const std::optional<double> m = mu(a);
    if (m && *m < best_mu) {
      best = a;
      best_mu = *m;
    }
  }
  return best;
}

/// Ridge orientation at p: pi/2 plus the coarse-to-fine argmin of mu_alpha.
/// Direct sampling reference path; no rotation, no background test.
std::optional<double> dominant_orientation(const GrayImage& image, Point p, const FlowConfig& cfg);

/// Population variance over the (2 * tangent_half_length + 1)^2 axis-aligned
/// patch around the pixel nearest to p, in-bounds pixels only.
double patch_variance(const GrayImage& image, Point p, int half);

/// Rotation-precompute fast path. Rotates the image once per candidate
/// angle, then reads perpendicular statistics from column prefix sums of
/// the rotated raster and its squares. mu at a point is the bilinear blend
/// of mu at the surrounding rotated-raster pixels. Where the sampling
/// footprint of L(p, alpha) and its perpendiculars comes within one pixel
/// of the border, mu falls back to mu_alpha so that border sites see the
/// same in-bounds samples as the direct path.
class ProjectionEstimator {
 public:
  ProjectionEstimator(const GrayImage& image, const FlowConfig& cfg);

  std::optional<double> mu(Point p, AngleKey alpha) const;
  std::optional<AngleKey> min_alpha(Point p) const;
  std::optional<double> orientation(Point p) const;

  const RotatedImage& rotated(AngleKey alpha) const { return table(alpha).rotated; }
  std::size_t rotation_count() const { return tables_.size(); }

 private:
  struct ColumnStats {
    RotatedImage rotated;
    // (height + 1) x width prefix sums down each column.
    std::vector<double> sum;
    std::vector<double> sum_sq;
    std::vector<int> count;
  };

  const ColumnStats& table(AngleKey alpha) const;
  std::optional<double> column_sigma(const ColumnStats& t, int x, int y0, int y1) const;
  std::optional<double> mu_at(const ColumnStats& t, int ux, int uy) const;
  bool footprint_inside(Point p, double alpha) const;

  FlowConfig cfg_;
  GrayImage image_;
  std::map<AngleKey, ColumnStats> tables_;
};

/// Flow field on the stride grid via the fast path, run on the image after
/// presmooth_sigma blurring. Sites whose patch variance (of the unblurred
/// image) falls below the background threshold are invalid.
/// Throws DimensionError when the image is smaller than min_image_size().
FlowField compute_flow_field(const GrayImage& image, const FlowConfig& cfg);

/// Same grid and background rule, but every site uses the direct sampling
/// reference path.
FlowField compute_flow_field_direct(const GrayImage& image, const FlowConfig& cfg);

}  // namespace ridgeflow
