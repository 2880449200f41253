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


#include <doctest.h>

#include "ridgeflow/synth.hpp"
#include "support.hpp"

using namespace ridgeflow;
using std::numbers::pi;

TEST_CASE("SyntheticSpec validation") {
  SyntheticSpec s;
  CHECK_NOTHROW(s.validate());
  s.period = 3.0;
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s = SyntheticSpec{};
  s.amplitude = 128.0;
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s = SyntheticSpec{};
  s.noise_sigma = -1.0;
  CHECK_THROWS_AS(generate(s), ConfigError);
  CHECK(pattern_from_string("concentric") == Pattern::concentric);
  CHECK(to_string(Pattern::half_plane_stripe) == "half_plane_stripe");
  CHECK_THROWS_AS(pattern_from_string("spiral"), ConfigError);
}

TEST_CASE("vertical ridges are constant along columns") {
  const SyntheticImage s = generate(testing::parallel_spec(pi / 2.0, 0.0, 1, 32));
  for (int x = 0; x < 32; ++x) {
    for (int y = 1; y < 32; ++y) CHECK(s.image.at(x, y) == s.image.at(x, 0));
  }
  for (std::size_t i = 0; i < s.truth.site_count(); ++i) {
    CHECK(s.truth.valid[i] == 1);
    CHECK(s.truth.angles[i] == doctest::Approx(pi / 2.0));
  }
}

TEST_CASE("clean range is offset -/+ amplitude") {
  for (double o : {0.0, 0.3, 1.9}) {
    const SyntheticImage s = generate(testing::parallel_spec(o, 0.0, 1, 64));
    const auto [lo, hi] = std::minmax_element(s.image.pixels().begin(), s.image.pixels().end());
    CHECK(*lo <= to_intensity(127.5 - 127.0) + 1);
    CHECK(*hi >= to_intensity(127.5 + 127.0) - 1);
  }
  const SyntheticImage v = generate(testing::parallel_spec(0.0, 0.0, 1, 64));
  const auto [lo, hi] = std::minmax_element(v.image.pixels().begin(), v.image.pixels().end());
  CHECK(*lo == to_intensity(0.5));
  CHECK(*hi == to_intensity(254.5));
}

TEST_CASE("seeded noise is reproducible") {
  const SyntheticSpec spec = testing::parallel_spec(0.7, 40.0, 99, 64);
  CHECK(generate(spec).image == generate(spec).image);
  SyntheticSpec other = spec;
  other.rng_seed = 100;
  CHECK_FALSE(generate(other).image == generate(spec).image);
}

TEST_CASE("noise follows the documented mapping") {
  SyntheticSpec spec = testing::parallel_spec(0.0, 10.0, 42, 4);
  spec.amplitude = 0.0;
  const GrayImage img = generate(spec).image;
  std::mt19937_64 rng(42);
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 4; ++x) {
      const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
      const double v = static_cast<double>(rng() >> 11) * 0x1p-53;
      CHECK(img.at(x, y) == to_intensity(127.5 + 10.0 * std::sqrt(-2.0 * std::log(1.0 - u)) * std::cos(2.0 * pi * v)));
    }
  }
}

TEST_CASE("noise statistics") {
  SyntheticSpec spec = testing::parallel_spec(0.0, 20.0, 7, 128);
  spec.amplitude = 0.0;
  const GrayImage img = generate(spec).image;
  double s1 = 0.0;
  double s2 = 0.0;
  for (auto v : img.pixels()) {
    s1 += v;
    s2 += static_cast<double>(v) * v;
  }
  const double n = static_cast<double>(img.size());
  const double mean = s1 / n;
  CHECK(mean == doctest::Approx(127.5).epsilon(0.01));
  CHECK(std::sqrt(s2 / n - mean * mean) == doctest::Approx(20.0).epsilon(0.05));
}

TEST_CASE("concentric truth is tangent to circles") {
  SyntheticSpec spec;
  spec.width = 64;
  spec.height = 63;
  spec.pattern = Pattern::concentric;
  const SyntheticImage s = generate(spec);
  const Point c{31.5, 31.0};
  for (int j = 0; j < s.truth.grid_height; ++j) {
    for (int i = 0; i < s.truth.grid_width; ++i) {
      const Point p = s.truth.site(i, j);
      if (p.x == c.x && p.y == c.y) {
        CHECK_FALSE(s.truth.is_valid(i, j));
        continue;
      }
      const double expect = wrap_orientation(std::atan2(p.y - c.y, p.x - c.x) + pi / 2.0);
      CHECK(angular_distance(s.truth.angle(i, j), expect) < 1e-9);
    }
  }
}

TEST_CASE("half-plane stripe is blank on one side") {
  SyntheticSpec spec;
  spec.width = spec.height = 48;
  spec.pattern = Pattern::half_plane_stripe;
  spec.orientation = 0.0;
  const SyntheticImage s = generate(spec);
  for (int y = 0; y < 48; ++y) {
    for (int x = 24; x < 48; ++x) CHECK(s.image.at(x, y) == to_intensity(spec.offset));
  }
  bool varies = false;
  for (int y = 1; y < 48; ++y) varies |= s.image.at(5, y) != s.image.at(5, 0);
  CHECK(varies);
  CHECK(s.truth.valid_count() == s.truth.site_count());
  CHECK(along_ridge(spec, 10, 3) < 0.0);
}
