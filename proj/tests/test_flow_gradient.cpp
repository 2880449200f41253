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

#include "ridgeflow/flow_gradient.hpp"
#include "ridgeflow/flow_projection.hpp"
#include "support.hpp"

using namespace ridgeflow;
using std::numbers::pi;

namespace {

GradientField constant_gradient(int w, int h, double gx, double gy) {
  GradientField g{w, h, std::vector<double>(static_cast<std::size_t>(w) * h, gx),
                  std::vector<double>(static_cast<std::size_t>(w) * h, gy)};
  return g;
}

// Dominant eigenvector angle of a symmetric 2x2 matrix.
double eigen_angle(const StructureTensor& t) {
  const double tr = t.a11 + t.a22;
  const double det = t.a11 * t.a22 - t.a12 * t.a12;
  const double l1 = tr / 2.0 + std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
  double vx = t.a12;
  double vy = l1 - t.a11;
  if (std::hypot(vx, vy) < 1e-12) {
    vx = l1 - t.a22;
    vy = t.a12;
  }
  return wrap_orientation(std::atan2(vy, vx));
}

}  // namespace

TEST_CASE("gradient") {
  SUBCASE("constant image") {
    const GradientField g = gradient(GrayImage(5, 4, 17));
    for (double v : g.gx) CHECK(v == 0.0);
    for (double v : g.gy) CHECK(v == 0.0);
  }
  SUBCASE("ramp in x") {
    GrayImage ramp(8, 6);
    for (int y = 0; y < 6; ++y) {
      for (int x = 0; x < 8; ++x) ramp.at(x, y) = static_cast<std::uint8_t>(3 * x);
    }
    const GradientField g = gradient(ramp);
    for (int y = 1; y < 5; ++y) {
      for (int x = 1; x < 7; ++x) {
        CHECK(g.dx(x, y) == doctest::Approx(3.0));
        CHECK(g.dy(x, y) == 0.0);
      }
    }
  }
  SUBCASE("interior pixel equals direct Sobel convolution") {
    const GrayImage r = testing::random_image(3, 3, 12);
    const GradientField g = gradient(r);
    const auto I = [&](int x, int y) { return static_cast<double>(r.at(x, y)); };
    const double gx = ((I(2, 0) + 2 * I(2, 1) + I(2, 2)) - (I(0, 0) + 2 * I(0, 1) + I(0, 2))) / 8.0;
    const double gy = ((I(0, 2) + 2 * I(1, 2) + I(2, 2)) - (I(0, 0) + 2 * I(1, 0) + I(2, 0))) / 8.0;
    CHECK(g.dx(1, 1) == doctest::Approx(gx).epsilon(1e-12));
    CHECK(g.dy(1, 1) == doctest::Approx(gy).epsilon(1e-12));
  }
  SUBCASE("too small") { CHECK_THROWS_AS(gradient(GrayImage(2, 5)), DimensionError); }
}

TEST_CASE("second_moment_matrix") {
  SUBCASE("constant (1, 0), unweighted 3x3") {
    const StructureTensor t = second_moment_matrix(constant_gradient(9, 9, 1, 0), {4, 4}, 1, 0.0);
    CHECK(t.a11 == 9.0);
    CHECK(t.a12 == 0.0);
    CHECK(t.a22 == 0.0);
  }
  SUBCASE("constant (1, 1) gives the weight sum everywhere") {
    const StructureTensor t = second_moment_matrix(constant_gradient(21, 21, 1, 1), {10, 10}, 3, 2.0);
    double wsum = 0.0;
    for (int dy = -3; dy <= 3; ++dy) {
      for (int dx = -3; dx <= 3; ++dx) wsum += std::exp(-(dx * dx + dy * dy) / 8.0);
    }
    CHECK(t.a11 == doctest::Approx(t.a12));
    CHECK(t.a22 == doctest::Approx(t.a12));
    CHECK(t.a11 == doctest::Approx(wsum).epsilon(1e-12));
  }
  SUBCASE("30 degree sinusoid matches direct double loop") {
    const GrayImage img = generate(testing::parallel_spec(pi / 6.0, 0.0, 1, 64)).image;
    const GradientField g = gradient(img);
    const StructureTensor t = second_moment_matrix(g, {30, 33}, 8, 4.0);
    double a11 = 0.0;
    double a12 = 0.0;
    double a22 = 0.0;
    for (int y = 25; y <= 41; ++y) {
      for (int x = 22; x <= 38; ++x) {
        const double w = std::exp(-((x - 30) * (x - 30) + (y - 33) * (y - 33)) / 32.0);
        a11 += w * g.dx(x, y) * g.dx(x, y);
        a12 += w * g.dx(x, y) * g.dy(x, y);
        a22 += w * g.dy(x, y) * g.dy(x, y);
      }
    }
    CHECK(t.a11 == doctest::Approx(a11).epsilon(1e-9));
    CHECK(t.a12 == doctest::Approx(a12).epsilon(1e-9));
    CHECK(t.a22 == doctest::Approx(a22).epsilon(1e-9));
  }
  SUBCASE("window clips at the border and stays PSD") {
    const GradientField g = gradient(testing::random_image(20, 20, 6));
    for (Point p : {Point{0, 0}, Point{19, 3}, Point{10, 10}}) {
      const StructureTensor t = second_moment_matrix(g, p, 8, 4.0);
      CHECK(t.a11 >= 0.0);
      CHECK(t.a22 >= 0.0);
      const double tr = t.a11 + t.a22;
      CHECK(t.a11 * t.a22 - t.a12 * t.a12 >= -1e-6 * tr * tr);
    }
  }
}

TEST_CASE("tensor_orientation") {
  const TensorOrientation rank1 = tensor_orientation({9, 0, 0});
  CHECK(rank1.theta == 0.0);
  CHECK(rank1.coherence == doctest::Approx(1.0));
  CHECK(tensor_orientation({5, 0, 5}).coherence == doctest::Approx(0.0));
  CHECK(tensor_orientation({0, 0, 0}).coherence == 0.0);

  const GrayImage img = generate(testing::parallel_spec(pi / 6.0, 0.0, 1, 64)).image;
  const StructureTensor t = second_moment_matrix(gradient(img), {32, 32}, 8, 4.0);
  const TensorOrientation o = tensor_orientation(t);
  CHECK(angular_distance(o.theta, 2.0 * pi / 3.0) < pi / 64.0);
  CHECK(angular_distance(o.theta, eigen_angle(t)) < 1e-9);

  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    const double c = u(rng);
    const double d = u(rng);
    const StructureTensor s{a * a + b * b, a * c + b * d, c * c + d * d};
    const TensorOrientation so = tensor_orientation(s);
    const TensorOrientation scaled = tensor_orientation({3.5 * s.a11, 3.5 * s.a12, 3.5 * s.a22});
    CHECK(scaled.theta == doctest::Approx(so.theta).epsilon(1e-12));
    CHECK(so.coherence >= 0.0);
    CHECK(so.coherence <= 1.0 + 1e-12);
    if (so.coherence > 1e-6) CHECK(angular_distance(so.theta, eigen_angle(s)) < 1e-9);
  }
}

TEST_CASE("compute_flow_field_gradient") {
  const FlowConfig cfg;
  const FlowField stripes = compute_flow_field_gradient(testing::vertical_stripes(64, 64), cfg);
  const FlowField proj = compute_flow_field(testing::vertical_stripes(64, 64), cfg);
  for (std::size_t i = 0; i < stripes.site_count(); ++i) {
    if (!stripes.valid[i] || !proj.valid[i]) continue;
    CHECK(stripes.angles[i] == doctest::Approx(pi / 2.0));
    CHECK(proj.angles[i] == doctest::Approx(pi / 2.0));
  }
  CHECK(stripes.valid_count() > 0);
  CHECK(stripes.coherence.size() == stripes.site_count());

  CHECK(compute_flow_field_gradient(GrayImage(64, 64, 9), cfg).valid_count() == 0);

  for (int k = 0; k < 16; k += 5) {
    const SyntheticImage s = generate(testing::parallel_spec(k * pi / 16.0, 0.0, 1, 64));
    const FlowField g = compute_flow_field_gradient(s.image, cfg);
    const FlowField p = compute_flow_field(s.image, cfg);
    CHECK(mean_angular_error(g, s.truth, 64, 64, cfg.interior_margin()).mae <= pi / 32.0);
    CHECK(mean_angular_error(g, p, 64, 64, cfg.interior_margin()).mae <= pi / 16.0);
  }
  CHECK_THROWS_AS(compute_flow_field_gradient(GrayImage(2, 2), cfg), DimensionError);
}
