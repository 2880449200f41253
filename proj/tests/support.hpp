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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "ridgeflow/flow_field.hpp"
#include "ridgeflow/image.hpp"
#include "ridgeflow/synth.hpp"

namespace ridgeflow::testing {

inline GrayImage random_image(int w, int h, std::uint64_t seed, int lo = 0, int hi = 255) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(lo, hi);
  GrayImage img(w, h);
  for (auto& v : img.pixels()) v = static_cast<std::uint8_t>(dist(rng));
  return img;
}

/// I(x, y) = f(x): vertical ridges of the given period.
inline GrayImage vertical_stripes(int w, int h, double period = 8.0) {
  GrayImage img(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      img.at(x, y) = to_intensity(127.5 + 127.0 * std::cos(2.0 * std::numbers::pi * x / period));
    }
  }
  return img;
}

inline SyntheticSpec parallel_spec(double orientation, double noise = 0.0, std::uint64_t seed = 1,
                                   int size = 128) {
  SyntheticSpec s;
  s.width = size;
  s.height = size;
  s.orientation = orientation;
  s.noise_sigma = noise;
  s.rng_seed = seed;
  return s;
}

/// Population standard deviation computed in two passes.
inline std::optional<double> two_pass_sigma(std::span<const double> v) {
  if (v.size() < 2) return std::nullopt;
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size()));
}

inline std::vector<double> samples(const GrayImage& img, std::span<const Point> pts) {
  std::vector<double> out;
  for (const Point& p : pts) {
    if (auto v = sample_bilinear(img, p)) out.push_back(*v);
  }
  return out;
}

inline FlowField uniform_flow(int w, int h, int stride, double theta) {
  FlowField f = FlowField::for_image(w, h, stride);
  for (int j = 0; j < f.grid_height; ++j) {
    for (int i = 0; i < f.grid_width; ++i) f.set(i, j, theta);
  }
  return f;
}

}  // namespace ridgeflow::testing
