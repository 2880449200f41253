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

#include "ridgeflow/image.hpp"

namespace ridgeflow {

/// Source image resampled so that lines at `angle` in the source run along
/// rows of this raster. The raster is sized to hold the rotated bounding
/// box; `valid` is 0 where the bilinear footprint left the source.
struct RotatedImage {
  double angle = 0.0;
  RealRaster values;
  std::vector<std::uint8_t> valid;
  Point source_center;
  Point rotated_center;

  int width() const { return values.width; }
  int height() const { return values.height; }
  bool is_valid(int x, int y) const { return valid[static_cast<std::size_t>(y) * values.width + x] != 0; }

  /// Maps a source-image point into rotated-raster coordinates.
  Point to_rotated(Point source) const;
  /// Inverse of to_rotated.
  Point to_source(Point rotated) const;
};

/// Rotates `image` about its center by -alpha with bilinear resampling.
/// alpha = 0 reproduces the input exactly; alpha = pi/2 is a lossless
/// transpose-and-flip.
RotatedImage rotate_image(const GrayImage& image, double alpha);

/// Rounded, clamped copy of a rotated raster; invalid pixels become 0.
GrayImage to_gray(const RotatedImage& rotated);

}  // namespace ridgeflow
