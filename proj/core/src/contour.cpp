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


#include "ridgeflow/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ridgeflow {

namespace {

bool inside(Point p, int width, int height) {
  return p.x >= 0.0 && p.y >= 0.0 && p.x <= width - 1.0 && p.y <= height - 1.0;
}

// Steps from p starting in direction (dx, dy); returns the visited points,
// nearest first.
std::vector<Point> trace_side(const FlowField& flow, Point p, double dx, double dy, int steps, int width,
                              int height) {
  std::vector<Point> out;
  Point cur = p;
  for (int s = 0; s < steps; ++s) {
    if (s > 0) {
      const auto theta = angle_at(flow, cur);
      if (!theta) break;
      double vx = std::cos(*theta);
      double vy = std::sin(*theta);
      if (vx * dx + vy * dy < 0.0) {
        vx = -vx;
        vy = -vy;
      }
      dx = vx;
      dy = vy;
    }
    const Point next{cur.x + dx, cur.y + dy};
    if (!inside(next, width, height)) break;
    out.push_back(next);
    cur = next;
  }
  return out;
}

}  // namespace

ContourPath trace_contour(const FlowField& flow, Point p, int half_steps, int width, int height) {
  ContourPath path;
  const auto theta = angle_at(flow, p);
  if (!theta || half_steps < 1) {
    path.points.push_back(p);
    return path;
  }
  const double cx = std::cos(*theta);
  const double sy = std::sin(*theta);
  const auto forward = trace_side(flow, p, cx, sy, half_steps, width, height);
  const auto backward = trace_side(flow, p, -cx, -sy, half_steps, width, height);
  path.points.assign(backward.rbegin(), backward.rend());
  path.seed_index = path.points.size();
  path.points.push_back(p);
  path.points.insert(path.points.end(), forward.begin(), forward.end());
  return path;
}

std::uint8_t binarize_pixel_contour(const GrayImage& image, Point p, const FlowField& flow,
                                    const BinarizeConfig& cfg) {
  const auto theta = angle_at(flow, p);
  if (!theta) return 1;
  const ContourPath path = trace_contour(flow, p, cfg.line_half_length, image.width(), image.height());
  const auto across = line_points({p, *theta + std::numbers::pi / 2.0, cfg.line_half_length, 1.0});
  const auto g = mean_intensity(image, path.points);
  const auto h = mean_intensity(image, across);
  if (!g || !h) return 1;
  return classify_ridge(*g, *h);
}

double enhance_pixel_contour(const GrayImage& image, const BinaryImage& binary, Point p, const FlowField& flow,
                             const EnhanceConfig& cfg) {
  const ContourPath path = trace_contour(flow, p, cfg.kernel_half_length, image.width(), image.height());
  if (path.points.size() == 1 && !angle_at(flow, p)) return sample_bilinear(image, p).value_or(0.0);
  const auto kernel = gaussian_kernel(cfg.gaussian_sigma, cfg.kernel_half_length);
  return masked_path_mean(image, binary, path.points, path.seed_index, kernel);
}

BinaryImage binarize_image_contour(const GrayImage& image, const FlowField& flow, const BinarizeConfig& cfg) {
  cfg.validate();
  check_flow_covers(flow, image.width(), image.height());
  BinaryImage out(image.width(), image.height(), 1);
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      const Point p{static_cast<double>(x), static_cast<double>(y)};
      if (!angle_at(flow, p)) continue;
      const std::uint8_t bit = binarize_pixel_contour(image, p, flow, cfg);
      out.set(x, y, cfg.invert_polarity ? 1 - bit : bit);
    }
  }
  return out;
}

RealRaster enhance_image_contour_real(const GrayImage& image, const BinaryImage& binary, const FlowField& flow,
                                      const EnhanceConfig& cfg) {
  cfg.validate();
  check_same_size(image, binary);
  check_flow_covers(flow, image.width(), image.height());
  RealRaster out(image.width(), image.height());
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      out.at(x, y) = enhance_pixel_contour(image, binary, {static_cast<double>(x), static_cast<double>(y)}, flow, cfg);
    }
  }
  return out;
}

GrayImage enhance_image_contour(const GrayImage& image, const BinaryImage& binary, const FlowField& flow,
                                const EnhanceConfig& cfg) {
  return round_to_gray(enhance_image_contour_real(image, binary, flow, cfg));
}

}  // namespace ridgeflow
