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

#include <span>
#include <vector>

#include "ridgeflow/flow_field.hpp"
#include "ridgeflow/image.hpp"

namespace ridgeflow {

struct EnhanceConfig {
  double gaussian_sigma = 3.0;
  int kernel_half_length = 9;

  void validate() const;
};

/// w_i proportional to exp(-i^2 / (2 sigma^2)) for i in [-half, half],
/// normalized to sum 1.
std::vector<double> gaussian_kernel(double sigma, int half_length);

/// Masked Gaussian average along a sampled path. `points[seed_index]` is
/// the center; point k takes kernel weight kernel[k - seed_index + half].
/// Samples that are out of bounds, beyond the kernel, or whose nearest
/// pixel in `binary` differs from the seed's bit are dropped and the
/// remaining weights renormalized. Returns I(seed) when nothing else
/// qualifies.
double masked_path_mean(const GrayImage& image, const BinaryImage& binary, std::span<const Point> points,
                        std::size_t seed_index, std::span<const double> kernel);

/// J(p): masked Gaussian along L(p, theta, kernel_half_length).
double enhance_pixel(const GrayImage& image, const BinaryImage& binary, Point p, double theta,
                     const EnhanceConfig& cfg);

/// Unrounded enhancement of every pixel. Pixels without a defined
/// orientation keep their input value.
RealRaster enhance_image_real(const GrayImage& image, const BinaryImage& binary, const FlowField& flow,
                              const EnhanceConfig& cfg);

/// enhance_image_real rounded and clamped to [0, 255].
GrayImage enhance_image(const GrayImage& image, const BinaryImage& binary, const FlowField& flow,
                        const EnhanceConfig& cfg);

GrayImage round_to_gray(const RealRaster& raster);

/// Throws DimensionError when the binary raster does not match the image.
void check_same_size(const GrayImage& image, const BinaryImage& binary);

}  // namespace ridgeflow
