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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ridgeflow {

/// Raised when image or raster dimensions do not satisfy an operation's
/// precondition.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a configuration struct violates its invariants.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pixel coordinate. x grows right, y grows down; (0, 0) is the center of
/// the top-left pixel.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Dense 8-bit grayscale raster, row-major.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, std::uint8_t fill = 0);
  GrayImage(int width, int height, std::vector<std::uint8_t> data);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  std::uint8_t at(int x, int y) const { return data_[index(x, y)]; }
  std::uint8_t& at(int x, int y) { return data_[index(x, y)]; }
  bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }

  std::span<const std::uint8_t> pixels() const { return data_; }
  std::span<std::uint8_t> pixels() { return data_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Dense 1-bit raster. Bit 0 marks a ridge (dark) pixel, bit 1 a valley or
/// background pixel.
class BinaryImage {
 public:
  BinaryImage() = default;
  BinaryImage(int width, int height, std::uint8_t fill = 1);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return bits_.size(); }

  std::uint8_t at(int x, int y) const { return bits_[index(x, y)]; }
  void set(int x, int y, std::uint8_t bit) { bits_[index(x, y)] = bit ? 1 : 0; }
  bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }

  std::span<const std::uint8_t> bits() const { return bits_; }

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Real-valued raster used for intermediate results (squared intensities,
/// resampled images, gradients).
struct RealRaster {
  int width = 0;
  int height = 0;
  std::vector<double> data;

  RealRaster() = default;
  RealRaster(int w, int h, double fill = 0.0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

  double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
};

/// Straight sampling segment: 2 * half_length + 1 points spaced `spacing`
/// apart along `angle`, symmetric about `center`.
struct LineSegment {
  Point center;
  double angle = 0.0;
  int half_length = 1;
  double spacing = 1.0;
};

/// Points of `seg` ordered from the backward end to the forward end; index
/// `half_length` is the center.
std::vector<Point> line_points(const LineSegment& seg);

/// Bilinear interpolation of the four pixel centers around `p`. Returns
/// nullopt when any pixel carrying non-zero weight lies outside the raster.
/// Coordinates within 1e-9 of a lattice line snap onto it.
std::optional<double> sample_bilinear(const GrayImage& image, Point p);
std::optional<double> sample_bilinear(const RealRaster& raster, Point p);

/// Element-wise I(x)^2.
RealRaster precompute_squares(const GrayImage& image);

/// Rounds to nearest and clamps to [0, 255].
std::uint8_t to_intensity(double value);

/// Separable Gaussian blur with the kernel truncated at 3 sigma and
/// renormalized where it leaves the raster. sigma <= 0 returns a copy.
GrayImage gaussian_smooth(const GrayImage& image, double sigma);

/// Normalizes an angle to the pi-periodic range [0, pi).
double wrap_orientation(double angle);

}  // namespace ridgeflow
