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

#include <cstdint>
#include <vector>

#include "ridgeflow/binarize.hpp"
#include "ridgeflow/enhance.hpp"
#include "ridgeflow/flow_field.hpp"
#include "ridgeflow/image.hpp"

namespace ridgeflow {

/// Iso-brightness curve through a seed, ordered backward end to forward end.
struct ContourPath {
  std::vector<Point> points;
  std::size_t seed_index = 0;
};

/// Traces C(p) by unit steps along the local orientation, up to `half_steps`
/// steps each way. The first forward step is +(cos t_p, sin t_p) and the
/// first backward step its negation; every later step takes the sign whose
/// dot product with the previous step is >= 0. A side stops early where the
/// orientation is undefined or the next point would leave the
/// width x height raster.
ContourPath trace_contour(const FlowField& flow, Point p, int half_steps, int width, int height);

/// Binarization with g taken along the traced contour (line_half_length
/// steps each way) and h along the straight perpendicular at t_p.
std::uint8_t binarize_pixel_contour(const GrayImage& image, Point p, const FlowField& flow,
                                    const BinarizeConfig& cfg);

/// Masked Gaussian along the traced contour (kernel_half_length steps each
/// way). Returns I(p) when t_p is undefined.
double enhance_pixel_contour(const GrayImage& image, const BinaryImage& binary, Point p, const FlowField& flow,
                             const EnhanceConfig& cfg);

BinaryImage binarize_image_contour(const GrayImage& image, const FlowField& flow, const BinarizeConfig& cfg);
RealRaster enhance_image_contour_real(const GrayImage& image, const BinaryImage& binary, const FlowField& flow,
                                      const EnhanceConfig& cfg);
GrayImage enhance_image_contour(const GrayImage& image, const BinaryImage& binary, const FlowField& flow,
                                const EnhanceConfig& cfg);

}  // namespace ridgeflow
