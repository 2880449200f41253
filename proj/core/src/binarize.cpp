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


#include "ridgeflow/binarize.hpp"

#include <numbers>
#include <string>

namespace ridgeflow {

void BinarizeConfig::validate() const {
  if (line_half_length < 1) throw ConfigError("line_half_length must be >= 1");
}

std::optional<double> mean_intensity(const GrayImage& image, std::span<const Point> points) {
  double sum = 0.0;
  int n = 0;
  for (const Point& q : points) {
    if (const auto v = sample_bilinear(image, q)) {
      sum += *v;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

std::uint8_t binarize_pixel(const GrayImage& image, Point p, double theta, const BinarizeConfig& cfg) {
  const auto along = line_points({p, theta, cfg.line_half_length, 1.0});
  const auto across = line_points({p, theta + std::numbers::pi / 2.0, cfg.line_half_length, 1.0});
  const auto g = mean_intensity(image, along);
  const auto h = mean_intensity(image, across);
  if (!g || !h) return 1;
  return classify_ridge(*g, *h);
}

void check_flow_covers(const FlowField& flow, int width, int height) {
  const double last_x = flow.origin.x + static_cast<double>(flow.grid_width - 1) * flow.stride;
  const double last_y = flow.origin.y + static_cast<double>(flow.grid_height - 1) * flow.stride;
  if (flow.grid_width < 1 || flow.grid_height < 1 || flow.origin.x > 0.0 || flow.origin.y > 0.0 ||
      last_x + flow.stride <= width - 1 || last_y + flow.stride <= height - 1) {
    throw DimensionError("flow grid " + std::to_string(flow.grid_width) + "x" + std::to_string(flow.grid_height) +
                         " (stride " + std::to_string(flow.stride) + ") does not cover a " + std::to_string(width) +
                         "x" + std::to_string(height) + " image");
  }
}

BinaryImage binarize_image(const GrayImage& image, const FlowField& flow, const BinarizeConfig& cfg) {
  cfg.validate();
  check_flow_covers(flow, image.width(), image.height());
  BinaryImage out(image.width(), image.height(), 1);
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      const Point p{static_cast<double>(x), static_cast<double>(y)};
      const auto theta = angle_at(flow, p);
      if (!theta) continue;
      const std::uint8_t bit = binarize_pixel(image, p, *theta, cfg);
      out.set(x, y, cfg.invert_polarity ? 1 - bit : bit);
    }
  }
  return out;
}

}  // namespace ridgeflow
