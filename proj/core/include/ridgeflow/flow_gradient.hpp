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

#include "ridgeflow/flow_field.hpp"
#include "ridgeflow/flow_projection.hpp"
#include "ridgeflow/image.hpp"

namespace ridgeflow {

/// Sobel derivatives in intensity units per pixel.
struct GradientField {
  int width = 0;
  int height = 0;
  std::vector<double> gx;
  std::vector<double> gy;

  double dx(int x, int y) const { return gx[static_cast<std::size_t>(y) * width + x]; }
  double dy(int x, int y) const { return gy[static_cast<std::size_t>(y) * width + x]; }
};

/// Symmetric second-moment matrix [[a11, a12], [a12, a22]].
struct StructureTensor {
  double a11 = 0.0;
  double a12 = 0.0;
  double a22 = 0.0;
};

struct TensorOrientation {
  double theta = 0.0;      // dominant eigenvector (gradient) direction, [0, pi)
  double coherence = 0.0;  // (l1 - l2) / (l1 + l2), 0 for a null tensor
};

struct GradientFlowConfig {
  int window_half = 8;
  double weight_sigma = 4.0;  // <= 0 means unweighted
  double min_coherence = 0.1;
};

/// 3x3 Sobel, normalized by 1/8, borders replicated. Needs a 3x3 image.
GradientField gradient(const GrayImage& image);

/// Gaussian-weighted sum of gradient outer products over the
/// (2 * window_half + 1)^2 window centered on the pixel nearest p; the
/// window is clipped at the raster border.
StructureTensor second_moment_matrix(const GradientField& grad, Point p, int window_half, double weight_sigma);

/// theta = atan2(2 a12, a11 - a22) / 2 in [0, pi), and coherence from the
/// eigenvalues.
TensorOrientation tensor_orientation(const StructureTensor& t);

/// Baseline flow field on the projection grid. Angles are ridge
/// orientations (tensor theta + pi/2). Sites need coherence >=
/// min_coherence and patch variance above the background threshold; the
/// coherence of every site is kept in the field.
FlowField compute_flow_field_gradient(const GrayImage& image, const FlowConfig& cfg,
                                      const GradientFlowConfig& gcfg = {});

}  // namespace ridgeflow
