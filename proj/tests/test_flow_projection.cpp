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

#include "ridgeflow/flow_projection.hpp"
#include "ridgeflow/rotate.hpp"
#include "support.hpp"

using namespace ridgeflow;
using std::numbers::pi;

namespace {

struct ThreeSigmas {
  std::optional<double> full;
  std::optional<double> first;
  std::optional<double> second;
};

ThreeSigmas direct_sigmas(const GrayImage& img, Point q, double alpha, int h) {
  const auto pts = line_points({q, alpha + pi / 2.0, h, 1.0});
  std::vector<Point> first(pts.begin(), pts.begin() + h + 1);
  std::vector<Point> second(pts.begin() + h, pts.end());
  return {testing::two_pass_sigma(testing::samples(img, pts)), testing::two_pass_sigma(testing::samples(img, first)),
          testing::two_pass_sigma(testing::samples(img, second))};
}

}  // namespace

TEST_CASE("FlowConfig defaults and validation") {
  const FlowConfig cfg;
  CHECK(cfg.coarse_step() == doctest::Approx(pi / 8));
  CHECK(cfg.fine_step() == doctest::Approx(pi / 32));
  CHECK(cfg.fine_half_range() == doctest::Approx(pi / 16));
  CHECK(cfg.min_image_size() == 32);
  CHECK_NOTHROW(cfg.validate());

  FlowConfig bad = cfg;
  bad.stride = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = cfg;
  bad.fine_divisions = 4;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = cfg;
  bad.fine_half_steps = 4;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = cfg;
  bad.coarse_divisions = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("angle candidates") {
  const FlowConfig cfg;
  const auto coarse = coarse_candidates(cfg);
  REQUIRE(coarse.size() == 8);
  CHECK(coarse[1] == AngleKey{1, 8});
  CHECK(coarse[4] == AngleKey{1, 2});

  const auto fine = fine_candidates(cfg, AngleKey{0, 1});
  REQUIRE(fine.size() == 4);
  CHECK(fine[0] == AngleKey{15, 16});
  CHECK(fine[1] == AngleKey{31, 32});
  CHECK(fine[2] == AngleKey{1, 32});
  CHECK(fine[3] == AngleKey{1, 16});
  CHECK(AngleKey::make(-3, 6) == AngleKey{1, 2});
  CHECK_THROWS_AS(AngleKey::make(1, 0), ConfigError);
}

TEST_CASE("search_min_alpha keeps the coarse winner on ties") {
  const FlowConfig cfg;
  const auto flat = search_min_alpha(cfg, [](AngleKey) { return std::optional<double>(1.0); });
  CHECK(*flat == AngleKey{0, 1});
  const auto none = search_min_alpha(cfg, [](AngleKey) { return std::optional<double>(); });
  CHECK_FALSE(none.has_value());
  // Refinement equal to the coarse value at both neighbours: earliest strictly better wins.
  const auto pick = search_min_alpha(cfg, [](AngleKey a) {
    if (a == AngleKey{3, 8}) return std::optional<double>(2.0);
    if (a == AngleKey{11, 32} || a == AngleKey{13, 32}) return std::optional<double>(1.0);
    return std::optional<double>(5.0);
  });
  CHECK(*pick == AngleKey{11, 32});
}

TEST_CASE("sigma_q oracles") {
  const FlowConfig cfg;
  SUBCASE("constant image") {
    const GrayImage flat(40, 40, 90);
    for (double a : {0.0, 0.7, 2.0}) CHECK(*sigma_q(flat, {20, 20}, a, cfg) == 0.0);
  }
  SUBCASE("vertical stripes with a vertical perpendicular") {
    const GrayImage s = testing::vertical_stripes(40, 40);
    for (int x = 10; x < 30; ++x) CHECK(*sigma_q(s, {static_cast<double>(x), 20}, 0.0, cfg) == 0.0);
  }
  SUBCASE("ridge ending matches the direct min of three") {
    SyntheticSpec spec;
    spec.width = spec.height = 48;
    spec.pattern = Pattern::half_plane_stripe;
    int strictly_lower = 0;
    const GrayImage img = generate(spec).image;
    for (double x = 18; x <= 30; x += 1.0) {
      for (double y = 18; y <= 30; y += 1.5) {
        for (double alpha : {pi / 2.0, 0.0, pi / 4.0}) {
          const auto got = sigma_q(img, {x, y}, alpha, cfg);
          const ThreeSigmas d = direct_sigmas(img, {x, y}, alpha, cfg.perp_half_length);
          REQUIRE(got.has_value());
          const double expect = std::min({*d.full, *d.first, *d.second});
          CHECK(*got == doctest::Approx(expect).epsilon(1e-12));
          CHECK(*got <= *d.full + 1e-12);
          if (*got + 1.0 < *d.full) ++strictly_lower;
        }
      }
    }
    CHECK(strictly_lower > 0);
  }
  SUBCASE("full-line-only ignores the halves") {
    FlowConfig full = cfg;
    full.half_line_rule = false;
    const GrayImage img = testing::random_image(40, 40, 4);
    const ThreeSigmas d = direct_sigmas(img, {20, 20}, 0.3, cfg.perp_half_length);
    CHECK(*sigma_q(img, {20, 20}, 0.3, full) == doctest::Approx(*d.full).epsilon(1e-12));
  }
  SUBCASE("fewer than two in-bounds samples is undefined") {
    FlowConfig tiny = cfg;
    tiny.perp_half_length = 1;
    const GrayImage img(1, 1, 5);
    CHECK_FALSE(sigma_q(img, {0, 0}, 0.0, tiny).has_value());
  }
}

TEST_CASE("sigma_q min rule holds on random images") {
  const FlowConfig cfg;
  const GrayImage img = testing::random_image(48, 48, 21);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> pos(-4.0, 52.0);
  std::uniform_real_distribution<double> ang(0.0, pi);
  for (int k = 0; k < 500; ++k) {
    const Point q{pos(rng), pos(rng)};
    const double a = ang(rng);
    const auto s = sigma_q(img, q, a, cfg);
    const ThreeSigmas d = direct_sigmas(img, q, a, cfg.perp_half_length);
    if (d.full) {
      REQUIRE(s.has_value());
      CHECK(*s <= *d.full + 1e-12);
    }
  }
}

TEST_CASE("mu_alpha") {
  const FlowConfig cfg;
  const GrayImage flat(40, 40, 33);
  for (double a : {0.0, 1.0, 2.5}) CHECK(*mu_alpha(flat, {20, 20}, a, cfg) == 0.0);

  const GrayImage s = testing::vertical_stripes(40, 40);
  CHECK(*mu_alpha(s, {20, 20}, 0.0, cfg) == 0.0);
  CHECK(*mu_alpha(s, {20, 20}, pi / 2.0, cfg) > 0.0);

  const GrayImage r = testing::random_image(40, 40, 8);
  for (double a = 0.0; a < pi; a += 0.2) CHECK(*mu_alpha(r, {19.5, 20.25}, a, cfg) >= 0.0);
  CHECK_FALSE(mu_alpha(GrayImage(1, 1), {500, 500}, 0.0, cfg).has_value());
}

TEST_CASE("fast path mu matches direct sampling on a 60 degree sinusoid") {
  FlowConfig cfg;
  cfg.coarse_divisions = 6;
  cfg.fine_divisions = 24;
  const SyntheticSpec spec = testing::parallel_spec(pi / 3.0, 0.0, 1, 32);
  const GrayImage img = generate(spec).image;
  const ProjectionEstimator est(img, cfg);
  const AngleKey alpha = AngleKey::make(5, 6);
  const Point p{15.5, 15.5};
  const Point c{15, 15};
  CHECK(std::abs(*est.mu(c, alpha) - *mu_alpha(img, c, alpha.radians(), cfg)) <= 2.0);
  CHECK(std::abs(*est.mu(p, alpha) - *mu_alpha(img, p, alpha.radians(), cfg)) <= 2.0);
  CHECK_THROWS_AS(est.mu(c, AngleKey::make(1, 7)), ConfigError);
}

TEST_CASE("dominant_orientation") {
  const FlowConfig cfg;
  CHECK(*dominant_orientation(testing::vertical_stripes(48, 48), {24, 24}, cfg) == doctest::Approx(pi / 2.0));
  CHECK(*dominant_orientation(GrayImage(48, 48, 100), {24, 24}, cfg) == doctest::Approx(pi / 2.0));

  const double truth = pi / 6.0;
  const GrayImage img = generate(testing::parallel_spec(truth, 0.0, 1, 64)).image;
  for (Point p : {Point{32, 32}, Point{27, 35}, Point{36, 30}}) {
    const double theta = *dominant_orientation(img, p, cfg);
    CHECK(angular_distance(theta, truth) <= pi / 32.0);
    double best = 0.0;
    double best_mu = 1e300;
    for (int k = 0; k < 64; ++k) {
      const double m = *mu_alpha(img, p, k * pi / 64.0, cfg);
      if (m < best_mu) {
        best_mu = m;
        best = k * pi / 64.0;
      }
    }
    CHECK(angular_distance(theta, best + pi / 2.0) <= pi / 32.0);
  }
}

TEST_CASE("dominant_orientation is invariant under affine intensity maps") {
  const FlowConfig cfg;
  SyntheticSpec spec = testing::parallel_spec(0.9, 8.0, 5, 48);
  spec.amplitude = 30.0;
  spec.offset = 50.0;
  const GrayImage img = generate(spec).image;
  REQUIRE(*std::max_element(img.pixels().begin(), img.pixels().end()) <= 120);
  GrayImage mapped(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) mapped.at(x, y) = static_cast<std::uint8_t>(2 * img.at(x, y) + 7);
  }
  for (int y = 16; y <= 32; y += 4) {
    for (int x = 16; x <= 32; x += 4) {
      const Point p{static_cast<double>(x), static_cast<double>(y)};
      CHECK(*dominant_orientation(img, p, cfg) == *dominant_orientation(mapped, p, cfg));
    }
  }
}

TEST_CASE("dominant_orientation is equivariant under a quarter turn") {
  const FlowConfig cfg;
  const int n = 48;
  const GrayImage img = generate(testing::parallel_spec(0.5, 10.0, 9, n)).image;
  const GrayImage turned = to_gray(rotate_image(img, pi / 2.0));
  for (int y = 18; y <= 30; y += 4) {
    for (int x = 18; x <= 30; x += 4) {
      const double a = *dominant_orientation(img, {static_cast<double>(x), static_cast<double>(y)}, cfg);
      const double b =
          *dominant_orientation(turned, {static_cast<double>(y), static_cast<double>(n - 1 - x)}, cfg);
      CHECK(angular_distance(b, a + pi / 2.0) <= cfg.fine_step() + 1e-12);
    }
  }
}

TEST_CASE("coarse-to-fine matches the exhaustive fine grid") {
  const FlowConfig cfg;
  int agree = 0;
  int total = 0;
  for (int k = 0; k < 16; k += 3) {
    const GrayImage img = generate(testing::parallel_spec(k * pi / 16.0 + 0.05, 0.0, 1, 48)).image;
    for (int y = 16; y <= 32; y += 8) {
      for (int x = 16; x <= 32; x += 8) {
        const Point p{static_cast<double>(x), static_cast<double>(y)};
        double best = 0.0;
        double best_mu = 1e300;
        for (int j = 0; j < 32; ++j) {
          const double m = *mu_alpha(img, p, j * pi / 32.0, cfg);
          if (m < best_mu) {
            best_mu = m;
            best = j * pi / 32.0;
          }
        }
        ++total;
        if (angular_distance(*dominant_orientation(img, p, cfg), best + pi / 2.0) <= cfg.fine_step() + 1e-9) ++agree;
      }
    }
  }
  CHECK(agree >= 0.9 * total);
}

TEST_CASE("compute_flow_field") {
  const FlowConfig cfg;
  SUBCASE("constant image is all background") {
    const FlowField f = compute_flow_field(GrayImage(64, 64, 128), cfg);
    CHECK(f.valid_count() == 0);
    CHECK(f.grid_width == 32);
    CHECK(f.grid_height == 32);
  }
  SUBCASE("grid size rounds up") {
    const FlowField f = compute_flow_field(GrayImage(65, 33, 0), cfg);
    CHECK(f.grid_width == 33);
    CHECK(f.grid_height == 17);
  }
  SUBCASE("30 degree sinusoid") {
    const SyntheticImage s = generate(testing::parallel_spec(pi / 6.0, 0.0, 1, 64));
    const FlowField f = compute_flow_field(s.image, cfg);
    const AngularError e = mean_angular_error(f, s.truth, 64, 64, cfg.interior_margin());
    CHECK(e.count > 0);
    CHECK(e.mae <= pi / 32.0);
  }
  SUBCASE("too small") {
    CHECK_THROWS_WITH_AS(compute_flow_field(GrayImage(31, 64), cfg), doctest::Contains("32x32"), DimensionError);
    CHECK_THROWS_AS(compute_flow_field_direct(GrayImage(64, 20), cfg), DimensionError);
  }
}

TEST_CASE("fast and direct paths agree") {
  const FlowConfig cfg;
  std::size_t same = 0;
  std::size_t total = 0;
  for (int k : {1, 4, 7, 10}) {
    const GrayImage img = generate(testing::parallel_spec(k * pi / 16.0, 0.0, 1, 48)).image;
    const FlowField fast = compute_flow_field(img, cfg);
    const FlowField direct = compute_flow_field_direct(img, cfg);
    REQUIRE(fast.valid == direct.valid);
    for (std::size_t i = 0; i < fast.site_count(); ++i) {
      if (!fast.valid[i]) continue;
      ++total;
      if (fast.angles[i] == direct.angles[i]) ++same;
    }
  }
  REQUIRE(total > 0);
  CHECK(same >= 0.95 * total);
}

TEST_CASE("estimator caches one rotation per distinct candidate") {
  const ProjectionEstimator est(GrayImage(40, 40, 1), FlowConfig{});
  CHECK(est.rotation_count() == 32);
  CHECK(est.rotated(AngleKey{1, 2}).width() == 40);
}

TEST_CASE("patch_variance") {
  CHECK(patch_variance(GrayImage(20, 20, 3), {10, 10}, 8) == 0.0);
  GrayImage two(2, 1, std::vector<std::uint8_t>{0, 10});
  CHECK(patch_variance(two, {0, 0}, 8) == doctest::Approx(25.0));
}
