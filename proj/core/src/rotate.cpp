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


#include "ridgeflow/rotate.hpp"

#include <algorithm>
#include <cmath>

namespace ridgeflow {

Point RotatedImage::to_rotated(Point source) const {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double dx = source.x - source_center.x;
  const double dy = source.y - source_center.y;
  return {rotated_center.x + c * dx + s * dy, rotated_center.y - s * dx + c * dy};
}

Point RotatedImage::to_source(Point rotated) const {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double du = rotated.x - rotated_center.x;
  const double dv = rotated.y - rotated_center.y;
  return {source_center.x + c * du - s * dv, source_center.y + s * du + c * dv};
}

RotatedImage rotate_image(const GrayImage& image, double alpha) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  const double w = image.width();
  const double h = image.height();
  // Bounding box of the rotated pixel grid; the epsilon keeps exact quarter
  // turns from growing by one pixel through cos(pi/2) round-off.
  const int out_w = std::max(1, static_cast<int>(std::ceil(std::abs(w * c) + std::abs(h * s) - 1e-9)));
  const int out_h = std::max(1, static_cast<int>(std::ceil(std::abs(w * s) + std::abs(h * c) - 1e-9)));

  RotatedImage out;
  out.angle = alpha;
  out.values = RealRaster(out_w, out_h);
  out.valid.assign(static_cast<std::size_t>(out_w) * out_h, 0);
  out.source_center = {(w - 1.0) / 2.0, (h - 1.0) / 2.0};
  out.rotated_center = {(out_w - 1.0) / 2.0, (out_h - 1.0) / 2.0};

  for (int v = 0; v < out_h; ++v) {
    for (int u = 0; u < out_w; ++u) {
      const Point src = out.to_source({static_cast<double>(u), static_cast<double>(v)});
      if (const auto value = sample_bilinear(image, src)) {
        out.values.at(u, v) = *value;
        out.valid[static_cast<std::size_t>(v) * out_w + u] = 1;
      }
    }
  }
  return out;
}

GrayImage to_gray(const RotatedImage& rotated) {
  GrayImage out(rotated.width(), rotated.height());
  for (int y = 0; y < rotated.height(); ++y) {
    for (int x = 0; x < rotated.width(); ++x) {
      out.at(x, y) = rotated.is_valid(x, y) ? to_intensity(rotated.values.at(x, y)) : 0;
    }
  }
  return out;
}

}  // namespace ridgeflow
