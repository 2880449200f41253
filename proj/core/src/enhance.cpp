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


#include "ridgeflow/enhance.hpp"

#include <cmath>
#include <string>

#include "ridgeflow/binarize.hpp"

namespace ridgeflow {

void EnhanceConfig::validate() const {
  if (!(gaussian_sigma > 0.0)) throw ConfigError("gaussian_sigma must be > 0");
  if (kernel_half_length < static_cast<int>(std::ceil(2.0 * gaussian_sigma))) {
    throw ConfigError("kernel_half_length must be >= ceil(2 * gaussian_sigma)");
  }
}

std::vector<double> gaussian_kernel(double sigma, int half_length) {
  if (!(sigma > 0.0)) throw ConfigError("gaussian sigma must be > 0");
  if (half_length < 0) throw ConfigError("kernel half length must be >= 0");
  std::vector<double> w(static_cast<std::size_t>(2 * half_length + 1));
  double sum = 0.0;
  for (int i = -half_length; i <= half_length; ++i) {
    const double v = std::exp(-static_cast<double>(i) * i / (2.0 * sigma * sigma));
    w[static_cast<std::size_t>(i + half_length)] = v;
    sum += v;
  }
  for (double& v : w) v /= sum;
  return w;
}

double masked_path_mean(const GrayImage& image, const BinaryImage& binary, std::span<const Point> points,
                        std::size_t seed_index, std::span<const double> kernel) {
  const Point seed = points[seed_index];
  const int sx = static_cast<int>(std::lround(seed.x));
  const int sy = static_cast<int>(std::lround(seed.y));
  const auto seed_value = sample_bilinear(image, seed);
  if (!binary.contains(sx, sy) || !seed_value) return seed_value.value_or(0.0);
  const std::uint8_t bit = binary.at(sx, sy);
  const long half = static_cast<long>(kernel.size() / 2);

  double acc = 0.0;
  double wsum = 0.0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const long offset = static_cast<long>(k) - static_cast<long>(seed_index);
    if (offset < -half || offset > half) continue;
    const Point q = points[k];
    const int qx = static_cast<int>(std::lround(q.x));
    const int qy = static_cast<int>(std::lround(q.y));
    if (!binary.contains(qx, qy) || binary.at(qx, qy) != bit) continue;
    const auto v = sample_bilinear(image, q);
    if (!v) continue;
    const double w = kernel[static_cast<std::size_t>(offset + half)];
    acc += w * *v;
    wsum += w;
  }
  if (wsum <= 0.0) return *seed_value;
  return acc / wsum;
}

double enhance_pixel(const GrayImage& image, const BinaryImage& binary, Point p, double theta,
                     const EnhanceConfig& cfg) {
  const auto kernel = gaussian_kernel(cfg.gaussian_sigma, cfg.kernel_half_length);
  const auto pts = line_points({p, theta, cfg.kernel_half_length, 1.0});
  return masked_path_mean(image, binary, pts, static_cast<std::size_t>(cfg.kernel_half_length), kernel);
}

void check_same_size(const GrayImage& image, const BinaryImage& binary) {
  if (image.width() != binary.width() || image.height() != binary.height()) {
    throw DimensionError("binary image is " + std::to_string(binary.width()) + "x" + std::to_string(binary.height()) +
                         " but the gray image is " + std::to_string(image.width()) + "x" +
                         std::to_string(image.height()));
  }
}

RealRaster enhance_image_real(const GrayImage& image, const BinaryImage& binary, const FlowField& flow,
                              const EnhanceConfig& cfg) {
  cfg.validate();
  check_same_size(image, binary);
  check_flow_covers(flow, image.width(), image.height());
  const auto kernel = gaussian_kernel(cfg.gaussian_sigma, cfg.kernel_half_length);
  RealRaster out(image.width(), image.height());
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      const Point p{static_cast<double>(x), static_cast<double>(y)};
      const auto theta = angle_at(flow, p);
      if (!theta) {
        out.at(x, y) = image.at(x, y);
        continue;
      }
      const auto pts = line_points({p, *theta, cfg.kernel_half_length, 1.0});
      out.at(x, y) = masked_path_mean(image, binary, pts, static_cast<std::size_t>(cfg.kernel_half_length), kernel);
    }
  }
  return out;
}

GrayImage round_to_gray(const RealRaster& raster) {
  GrayImage out(raster.width, raster.height);
  for (int y = 0; y < raster.height; ++y) {
    for (int x = 0; x < raster.width; ++x) out.at(x, y) = to_intensity(raster.at(x, y));
  }
  return out;
}

GrayImage enhance_image(const GrayImage& image, const BinaryImage& binary, const FlowField& flow,
                        const EnhanceConfig& cfg) {
  return round_to_gray(enhance_image_real(image, binary, flow, cfg));
}

}  // namespace ridgeflow
