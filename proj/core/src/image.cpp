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

#include "ridgeflow/image.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ridgeflow {

namespace {

void check_dimensions(int width, int height) {
  if (width < 1 || height < 1) {
    throw DimensionError("image dimensions must be at least 1x1, got " + std::to_string(width) + "x" +
                         std::to_string(height));
  }
}

constexpr double kLatticeSnap = 1e-9;

// Splits a coordinate into integer cell and fractional weight, snapping
// near-integers so lattice points need only one pixel along that axis.
void split_coordinate(double v, long& cell, double& frac) {
  const double r = std::round(v);
  if (std::abs(v - r) < kLatticeSnap) {
    cell = static_cast<long>(r);
    frac = 0.0;
    return;
  }
  const double f = std::floor(v);
  cell = static_cast<long>(f);
  frac = v - f;
}

template <typename Fetch>
std::optional<double> bilinear(int width, int height, Point p, Fetch fetch) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) return std::nullopt;
  long x0 = 0;
  long y0 = 0;
  double fx = 0.0;
  double fy = 0.0;
  split_coordinate(p.x, x0, fx);
  split_coordinate(p.y, y0, fy);
  const long x1 = fx > 0.0 ? x0 + 1 : x0;
  const long y1 = fy > 0.0 ? y0 + 1 : y0;
  if (x0 < 0 || y0 < 0 || x1 >= width || y1 >= height) return std::nullopt;

  const int ix0 = static_cast<int>(x0);
  const int iy0 = static_cast<int>(y0);
  const int ix1 = static_cast<int>(x1);
  const int iy1 = static_cast<int>(y1);
  const double top = (1.0 - fx) * fetch(ix0, iy0) + fx * fetch(ix1, iy0);
  if (fy == 0.0) return top;
  const double bottom = (1.0 - fx) * fetch(ix0, iy1) + fx * fetch(ix1, iy1);
  return (1.0 - fy) * top + fy * bottom;
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill) : width_(width), height_(height) {
  check_dimensions(width, height);
  data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
  check_dimensions(width, height);
  if (data_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw DimensionError("pixel buffer holds " + std::to_string(data_.size()) + " values, expected " +
                         std::to_string(static_cast<std::size_t>(width) * static_cast<std::size_t>(height)));
  }
}

BinaryImage::BinaryImage(int width, int height, std::uint8_t fill) : width_(width), height_(height) {
  check_dimensions(width, height);
  bits_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill ? 1 : 0);
}

std::vector<Point> line_points(const LineSegment& seg) {
  const double dx = std::cos(seg.angle) * seg.spacing;
  const double dy = std::sin(seg.angle) * seg.spacing;
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(2 * seg.half_length + 1));
  for (int i = -seg.half_length; i <= seg.half_length; ++i) {
    pts.push_back({seg.center.x + i * dx, seg.center.y + i * dy});
  }
  return pts;
}

std::optional<double> sample_bilinear(const GrayImage& image, Point p) {
  return bilinear(image.width(), image.height(), p,
                  [&](int x, int y) { return static_cast<double>(image.at(x, y)); });
}

std::optional<double> sample_bilinear(const RealRaster& raster, Point p) {
  return bilinear(raster.width, raster.height, p, [&](int x, int y) { return raster.at(x, y); });
}

RealRaster precompute_squares(const GrayImage& image) {
  RealRaster out(image.width(), image.height());
  const auto px = image.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) {
    const double v = px[i];
    out.data[i] = v * v;
  }
  return out;
}

std::uint8_t to_intensity(double value) {
  if (!(value > 0.0)) return 0;
  if (value >= 255.0) return 255;
  return static_cast<std::uint8_t>(std::lround(value));
}

GrayImage gaussian_smooth(const GrayImage& image, double sigma) {
  if (!(sigma > 0.0)) return image;
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> kernel(static_cast<std::size_t>(2 * radius + 1));
  for (int i = -radius; i <= radius; ++i) kernel[static_cast<std::size_t>(i + radius)] = std::exp(-i * i / (2.0 * sigma * sigma));

  const int w = image.width();
  const int h = image.height();
  RealRaster rows(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      double wsum = 0.0;
      for (int i = std::max(-radius, -x); i <= std::min(radius, w - 1 - x); ++i) {
        const double k = kernel[static_cast<std::size_t>(i + radius)];
        acc += k * image.at(x + i, y);
        wsum += k;
      }
      rows.at(x, y) = acc / wsum;
    }
  }
  GrayImage out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      double wsum = 0.0;
      for (int i = std::max(-radius, -y); i <= std::min(radius, h - 1 - y); ++i) {
        const double k = kernel[static_cast<std::size_t>(i + radius)];
        acc += k * rows.at(x, y + i);
        wsum += k;
      }
      out.at(x, y) = to_intensity(acc / wsum);
    }
  }
  return out;
}

double wrap_orientation(double angle) {
  double a = std::fmod(angle, std::numbers::pi);
  if (a < 0.0) a += std::numbers::pi;
  if (a >= std::numbers::pi) a -= std::numbers::pi;
  return a;
}

}  // namespace ridgeflow
