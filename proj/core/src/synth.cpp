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


#include "ridgeflow/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace ridgeflow {

std::string to_string(Pattern p) {
  switch (p) {
    case Pattern::parallel: return "parallel";
    case Pattern::concentric: return "concentric";
    case Pattern::half_plane_stripe: return "half_plane_stripe";
  }
  return "parallel";
}

Pattern pattern_from_string(const std::string& name) {
  if (name == "parallel") return Pattern::parallel;
  if (name == "concentric") return Pattern::concentric;
  if (name == "half_plane_stripe" || name == "half-plane-stripe") return Pattern::half_plane_stripe;
  throw ConfigError("unknown pattern '" + name + "' (expected parallel, concentric or half_plane_stripe)");
}

void SyntheticSpec::validate() const {
  if (width < 1 || height < 1) throw ConfigError("synthetic image dimensions must be positive");
  if (!(period >= 4.0)) throw ConfigError("period must be >= 4 pixels");
  if (!(amplitude >= 0.0) || amplitude + std::abs(offset - 127.5) > 127.5 + 1e-9) {
    throw ConfigError("amplitude + |offset - 127.5| must not exceed 127.5");
  }
  if (!(noise_sigma >= 0.0)) throw ConfigError("noise_sigma must be >= 0");
  if (!std::isfinite(orientation)) throw ConfigError("orientation must be finite");
  if (stride < 1) throw ConfigError("stride must be >= 1");
}

namespace {

Point center_of(const SyntheticSpec& spec) { return {(spec.width - 1) / 2.0, (spec.height - 1) / 2.0}; }

// Unit vector at `angle` with round-off residue on the axes flushed to 0.
Point direction(double angle) {
  const auto flush = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
  return {flush(std::cos(angle)), flush(std::sin(angle))};
}

double parallel_value(const SyntheticSpec& spec, double x, double y) {
  const Point n = direction(spec.orientation + std::numbers::pi / 2.0);
  const double u = x * n.x + y * n.y;
  return spec.offset + spec.amplitude * std::cos(2.0 * std::numbers::pi * u / spec.period);
}

}  // namespace

double along_ridge(const SyntheticSpec& spec, double x, double y) {
  const Point c = center_of(spec);
  const Point d = direction(spec.orientation);
  return (x - c.x) * d.x + (y - c.y) * d.y;
}

double clean_intensity(const SyntheticSpec& spec, double x, double y) {
  switch (spec.pattern) {
    case Pattern::parallel:
      return parallel_value(spec, x, y);
    case Pattern::concentric: {
      const Point c = center_of(spec);
      const double r = std::hypot(x - c.x, y - c.y);
      return spec.offset + spec.amplitude * std::cos(2.0 * std::numbers::pi * r / spec.period);
    }
    case Pattern::half_plane_stripe:
      return along_ridge(spec, x, y) < 0.0 ? parallel_value(spec, x, y) : spec.offset;
  }
  return spec.offset;
}

SyntheticImage generate(const SyntheticSpec& spec) {
  spec.validate();
  SyntheticImage out{GrayImage(spec.width, spec.height), FlowField::for_image(spec.width, spec.height, spec.stride)};

  std::mt19937_64 rng(spec.rng_seed);
  constexpr double kTwoPow53 = 9007199254740992.0;
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      double v = clean_intensity(spec, x, y);
      if (spec.noise_sigma > 0.0) {
        const double u = static_cast<double>(rng() >> 11) / kTwoPow53;
        const double w = static_cast<double>(rng() >> 11) / kTwoPow53;
        v += spec.noise_sigma * std::sqrt(-2.0 * std::log(1.0 - u)) * std::cos(2.0 * std::numbers::pi * w);
      }
      out.image.at(x, y) = to_intensity(v);
    }
  }

  const Point c = center_of(spec);
  FlowField& truth = out.truth;
  for (int j = 0; j < truth.grid_height; ++j) {
    for (int i = 0; i < truth.grid_width; ++i) {
      const Point s = truth.site(i, j);
      switch (spec.pattern) {
        case Pattern::parallel:
          truth.set(i, j, spec.orientation);
          break;
        case Pattern::concentric:
          if (std::hypot(s.x - c.x, s.y - c.y) > 1e-9) {
            truth.set(i, j, std::atan2(s.y - c.y, s.x - c.x) + std::numbers::pi / 2.0);
          }
          break;
        case Pattern::half_plane_stripe:
          truth.set(i, j, spec.orientation);
          break;
      }
    }
  }
  return out;
}

}  // namespace ridgeflow
