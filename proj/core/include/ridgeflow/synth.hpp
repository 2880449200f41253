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
#include <string>

#include "ridgeflow/flow_field.hpp"
#include "ridgeflow/image.hpp"

namespace ridgeflow {

enum class Pattern {
  parallel,           // straight sinusoidal ridges running along `orientation`
  concentric,         // rings about the image center
  half_plane_stripe,  // parallel ridges that end on a line through the center
};

std::string to_string(Pattern p);
/// Throws ConfigError for unknown names.
Pattern pattern_from_string(const std::string& name);

/// Ridge pattern parameters. Intensity is offset + amplitude * cos(phase), so
/// ridges (phase = pi) are dark.
struct SyntheticSpec {
  int width = 128;
  int height = 128;
  Pattern pattern = Pattern::parallel;
  double orientation = 0.0;  // radians, ridge direction
  double period = 8.0;       // pixels
  double amplitude = 127.0;
  double offset = 127.5;
  double noise_sigma = 0.0;
  std::uint64_t rng_seed = 1;
  int stride = 2;  // grid of the ground-truth field

  void validate() const;
};

struct SyntheticImage {
  GrayImage image;
  FlowField truth;
};

/// Signed distance along the ridge direction from the line through the
/// image center where half-plane ridges end; stripes occupy the negative
/// side.
double along_ridge(const SyntheticSpec& spec, double x, double y);

/// Noise-free intensity at a pixel, before rounding.
double clean_intensity(const SyntheticSpec& spec, double x, double y);

/// Renders the pattern, adds seeded Gaussian noise, rounds and clamps.
///
/// Noise uses std::mt19937_64 seeded with rng_seed. Each pixel, in
/// row-major order, draws two 64-bit words a and b, maps them to
/// u = (a >> 11) * 2^-53 and v = (b >> 11) * 2^-53, and adds
/// noise_sigma * sqrt(-2 ln(1 - u)) * cos(2 pi v). No words are drawn when
/// noise_sigma is 0.
///
/// The truth field holds the ridge orientation at every stride-grid site.
/// Concentric truth is invalid at the exact center. Half-plane truth is the
/// stripe orientation everywhere, i.e. the blank side carries the direction
/// of the ridges that end on it.
SyntheticImage generate(const SyntheticSpec& spec);

}  // namespace ridgeflow
