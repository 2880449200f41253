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

#include <optional>
#include <string>
#include <vector>

#include "ridgeflow/binarize.hpp"
#include "ridgeflow/enhance.hpp"
#include "ridgeflow/flow_field.hpp"
#include "ridgeflow/flow_gradient.hpp"
#include "ridgeflow/flow_projection.hpp"
#include "ridgeflow/image.hpp"

namespace ridgeflow {

enum class PathMode { linear, contour };
enum class FlowMethod { projection, gradient };

std::string to_string(PathMode m);
std::string to_string(FlowMethod m);
PathMode path_mode_from_string(const std::string& s);
FlowMethod flow_method_from_string(const std::string& s);

struct PipelineConfig {
  int iterations = 2;
  PathMode path_mode = PathMode::linear;
  FlowMethod flow_method = FlowMethod::projection;
  FlowConfig flow;
  GradientFlowConfig gradient;
  BinarizeConfig binarize;
  EnhanceConfig enhance;

  void validate() const;
};

struct IterationResult {
  FlowField flow;
  BinaryImage binary;
  GrayImage enhanced;
};

struct PipelineResult {
  std::vector<IterationResult> iterations;

  const IterationResult& final_result() const { return iterations.back(); }
};

/// Orientation flow of `input` by the configured method.
FlowField compute_flow(const GrayImage& input, const PipelineConfig& cfg);

/// One pass of flow -> binarize -> enhance. Binarization and enhancement
/// both read `input`; enhancement uses the binary image of this pass.
IterationResult run_iteration(const GrayImage& input, const PipelineConfig& cfg);

/// cfg.iterations passes, each consuming the previous pass's enhanced
/// image. Flow is recomputed from scratch every pass.
PipelineResult run_pipeline(const GrayImage& input, const PipelineConfig& cfg);

struct SiteComparison {
  Point site;
  std::optional<double> theta_projection;
  std::optional<double> theta_gradient;
  std::optional<double> theta_truth;
  std::optional<double> err_projection;
  std::optional<double> err_gradient;
};

/// Projection vs. gradient flow on one grid. With a truth field the errors
/// are angular distances to the truth and the MAEs average over interior
/// sites where all three fields are valid. Without one, both error columns
/// hold the inter-method disagreement and both MAEs its mean over sites
/// where both methods are valid.
struct ComparisonReport {
  bool has_truth = false;
  FlowField projection;
  FlowField gradient;
  std::vector<SiteComparison> sites;
  double mae_projection = 0.0;
  double mae_gradient = 0.0;
  std::size_t n_sites = 0;
};

ComparisonReport compare_methods(const GrayImage& input, const std::optional<FlowField>& truth,
                                 const PipelineConfig& cfg, int interior_margin = 0);

/// Per-site CSV: site_x,site_y,theta_projection,theta_gradient,theta_truth,
/// err_projection,err_gradient. Undefined values are empty fields.
std::string comparison_to_csv(const ComparisonReport& report);

/// Header `mae_projection,mae_gradient,n_sites` and one value row.
std::string comparison_summary(const ComparisonReport& report);

}  // namespace ridgeflow
