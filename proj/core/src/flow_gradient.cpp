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


#include "ridgeflow/flow_gradient.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ridgeflow {

GradientField gradient(const GrayImage& image) {
  const int w = image.width();
  const int h = image.height();
  if (w < 3 || h < 3) {
    throw DimensionError("gradient needs at least a 3x3 image, got " + std::to_string(w) + "x" + std::to_string(h));
  }
  GradientField g{w, h, std::vector<double>(static_cast<std::size_t>(w) * h),
                  std::vector<double>(static_cast<std::size_t>(w) * h)};
  auto px = [&](int x, int y) {
    return static_cast<double>(image.at(std::clamp(x, 0, w - 1), std::clamp(y, 0, h - 1)));
  };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double gx = (px(x + 1, y - 1) + 2.0 * px(x + 1, y) + px(x + 1, y + 1)) -
                        (px(x - 1, y - 1) + 2.0 * px(x - 1, y) + px(x - 1, y + 1));
      const double gy = (px(x - 1, y + 1) + 2.0 * px(x, y + 1) + px(x + 1, y + 1)) -
                        (px(x - 1, y - 1) + 2.0 * px(x, y - 1) + px(x + 1, y - 1));
      const std::size_t k = static_cast<std::size_t>(y) * w + x;
      g.gx[k] = gx / 8.0;
      g.gy[k] = gy / 8.0;
    }
  }
  return g;
}

StructureTensor second_moment_matrix(const GradientField& grad, Point p, int window_half, double weight_sigma) {
  const int cx = static_cast<int>(std::lround(p.x));
  const int cy = static_cast<int>(std::lround(p.y));
  StructureTensor t;
  for (int dy = -window_half; dy <= window_half; ++dy) {
    const int y = cy + dy;
    if (y < 0 || y >= grad.height) continue;
    for (int dx = -window_half; dx <= window_half; ++dx) {
      const int x = cx + dx;
      if (x < 0 || x >= grad.width) continue;
      const double w =
          weight_sigma > 0.0 ? std::exp(-(dx * dx + dy * dy) / (2.0 * weight_sigma * weight_sigma)) : 1.0;
      const double gx = grad.dx(x, y);
      const double gy = grad.dy(x, y);
      t.a11 += w * gx * gx;
      t.a12 += w * gx * gy;
      t.a22 += w * gy * gy;
    }
  }
  return t;
}

TensorOrientation tensor_orientation(const StructureTensor& t) {
  TensorOrientation out;
  out.theta = wrap_orientation(0.5 * std::atan2(2.0 * t.a12, t.a11 - t.a22));
  const double trace = t.a11 + t.a22;
  if (trace < 1e-12) return out;
  // l1 - l2 = sqrt((a11 - a22)^2 + 4 a12^2), l1 + l2 = trace.
  const double spread = std::hypot(t.a11 - t.a22, 2.0 * t.a12);
  out.coherence = std::clamp(spread / trace, 0.0, 1.0);
  return out;
}

FlowField compute_flow_field_gradient(const GrayImage& image, const FlowConfig& cfg, const GradientFlowConfig& gcfg) {
  cfg.validate();
  if (gcfg.window_half < 0) throw ConfigError("window_half must be >= 0");
  const GradientField grad = gradient(image);
  FlowField flow = FlowField::for_image(image.width(), image.height(), cfg.stride);
  flow.coherence.assign(flow.site_count(), 0.0);
  for (int j = 0; j < flow.grid_height; ++j) {
    for (int i = 0; i < flow.grid_width; ++i) {
      const Point site = flow.site(i, j);
      const TensorOrientation o =
          tensor_orientation(second_moment_matrix(grad, site, gcfg.window_half, gcfg.weight_sigma));
      flow.coherence[flow.index(i, j)] = o.coherence;
      if (o.coherence < gcfg.min_coherence) continue;
      if (patch_variance(image, site, cfg.tangent_half_length) < cfg.background_variance_threshold) continue;
      flow.set(i, j, o.theta + std::numbers::pi / 2.0);
    }
  }
  return flow;
}

}  // namespace ridgeflow
