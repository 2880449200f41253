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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ridgeflow/image.hpp"

namespace ridgeflow {

/// Orientation samples on a regular grid. Site (i, j) sits at
/// origin + (i * stride, j * stride) in source-image pixels. Angles are
/// ridge orientations in [0, pi); invalid sites carry no meaningful angle.
struct FlowField {
  int grid_width = 0;
  int grid_height = 0;
  int stride = 1;
  Point origin;
  std::vector<double> angles;
  std::vector<std::uint8_t> valid;
  /// Optional per-site confidence (structure-tensor coherence). Empty when
  /// the producing method has none.
  std::vector<double> coherence;

  /// Grid covering a width x height image: ceil(width/stride) x
  /// ceil(height/stride) sites, all invalid.
  static FlowField for_image(int width, int height, int stride);

  std::size_t site_count() const { return angles.size(); }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * grid_width + i; }
  Point site(int i, int j) const {
    return {origin.x + static_cast<double>(i) * stride, origin.y + static_cast<double>(j) * stride};
  }
  bool is_valid(int i, int j) const { return valid[index(i, j)] != 0; }
  double angle(int i, int j) const { return angles[index(i, j)]; }
  void set(int i, int j, double theta) {
    angles[index(i, j)] = wrap_orientation(theta);
    valid[index(i, j)] = 1;
  }
  std::size_t valid_count() const;
};

/// Orientation at an arbitrary point: bilinear interpolation of the doubled
/// angle vectors (cos 2t, sin 2t) of the surrounding valid sites, weights
/// renormalized over those sites. nullopt when no neighbor is valid or the
/// interpolated vector nearly cancels.
std::optional<double> angle_at(const FlowField& flow, Point p);

/// Distance between pi-periodic orientations, in [0, pi/2].
double angular_distance(double a, double b);

struct AngularError {
  double mae = 0.0;
  std::size_t count = 0;
};

/// True when the site lies at least `margin` pixels inside a width x height
/// image.
bool is_interior(Point site, int width, int height, int margin);

/// Mean angular distance over interior sites valid in both fields. The
/// fields must share the same grid.
AngularError mean_angular_error(const FlowField& estimate, const FlowField& truth, int width, int height,
                                int margin);

/// CSV with header `x,y,theta_radians,valid` (plus `coherence` when present),
/// one row per site in row-major order, theta with 6 decimals.
std::string flow_to_csv(const FlowField& flow);
FlowField flow_from_csv(const std::string& text);
void save_flow_csv(const FlowField& flow, const std::filesystem::path& path);
FlowField load_flow_csv(const std::filesystem::path& path);

}  // namespace ridgeflow
