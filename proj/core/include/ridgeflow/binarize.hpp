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
#include <span>

#include "ridgeflow/flow_field.hpp"
#include "ridgeflow/image.hpp"

namespace ridgeflow {

struct BinarizeConfig {
  int line_half_length = 4;
  /// Flip ridge/valley bits for inputs with light ridges. Pixels without a
  /// defined orientation stay 1 either way.
  bool invert_polarity = false;

  void validate() const;
};

/// g and h closer than this many intensity levels count as equal.
inline constexpr double kBinarizeTieTolerance = 1e-9;

/// 0 (ridge) when g < h by more than kBinarizeTieTolerance, otherwise 1.
inline std::uint8_t classify_ridge(double g, double h) { return g < h - kBinarizeTieTolerance ? 0 : 1; }

/// Mean of the in-bounds bilinear samples at `points`; nullopt if none is
/// in bounds.
std::optional<double> mean_intensity(const GrayImage& image, std::span<const Point> points);

/// Compares g (mean along theta) against h (mean along theta + pi/2) with
/// classify_ridge. A pixel whose lines are entirely out of bounds is 1.
std::uint8_t binarize_pixel(const GrayImage& image, Point p, double theta, const BinarizeConfig& cfg);

/// binarize_pixel at every pixel with theta from angle_at(flow, .);
/// undefined orientation gives 1.
BinaryImage binarize_image(const GrayImage& image, const FlowField& flow, const BinarizeConfig& cfg);

/// Throws DimensionError unless the flow grid reaches within one stride of
/// every image pixel.
void check_flow_covers(const FlowField& flow, int width, int height);

}  // namespace ridgeflow
