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


#include "ridgeflow/pipeline.hpp"

#include <array>
#include <cstdio>

#include "ridgeflow/contour.hpp"

namespace ridgeflow {

std::string to_string(PathMode m) { return m == PathMode::linear ? "linear" : "contour"; }
std::string to_string(FlowMethod m) { return m == FlowMethod::projection ? "projection" : "gradient"; }

PathMode path_mode_from_string(const std::string& s) {
  if (s == "linear") return PathMode::linear;
  if (s == "contour") return PathMode::contour;
  throw ConfigError("unknown path mode '" + s + "' (expected linear or contour)");
}

FlowMethod flow_method_from_string(const std::string& s) {
  if (s == "projection") return FlowMethod::projection;
  if (s == "gradient") return FlowMethod::gradient;
  throw ConfigError("unknown flow method '" + s + "' (expected projection or gradient)");
}

void PipelineConfig::validate() const {
  if (iterations < 1) throw ConfigError("iterations must be >= 1");
  flow.validate();
  binarize.validate();
  enhance.validate();
}

FlowField compute_flow(const GrayImage& input, const PipelineConfig& cfg) {
  if (cfg.flow_method == FlowMethod::gradient) return compute_flow_field_gradient(input, cfg.flow, cfg.gradient);
  return compute_flow_field(input, cfg.flow);
}

IterationResult run_iteration(const GrayImage& input, const PipelineConfig& cfg) {
  cfg.validate();
  IterationResult r;
  r.flow = compute_flow(input, cfg);
  if (cfg.path_mode == PathMode::contour) {
    r.binary = binarize_image_contour(input, r.flow, cfg.binarize);
    r.enhanced = enhance_image_contour(input, r.binary, r.flow, cfg.enhance);
  } else {
    r.binary = binarize_image(input, r.flow, cfg.binarize);
    r.enhanced = enhance_image(input, r.binary, r.flow, cfg.enhance);
  }
  return r;
}

PipelineResult run_pipeline(const GrayImage& input, const PipelineConfig& cfg) {
  cfg.validate();
  PipelineResult result;
  const GrayImage* current = &input;
  for (int k = 0; k < cfg.iterations; ++k) {
    result.iterations.push_back(run_iteration(*current, cfg));
    current = &result.iterations.back().enhanced;
  }
  return result;
}

ComparisonReport compare_methods(const GrayImage& input, const std::optional<FlowField>& truth,
                                 const PipelineConfig& cfg, int interior_margin) {
  ComparisonReport report;
  report.has_truth = truth.has_value();
  report.projection = compute_flow_field(input, cfg.flow);
  report.gradient = compute_flow_field_gradient(input, cfg.flow, cfg.gradient);
  const FlowField& proj = report.projection;
  const FlowField& grad = report.gradient;
  if (truth && (truth->grid_width != proj.grid_width || truth->grid_height != proj.grid_height ||
                truth->stride != proj.stride)) {
    throw DimensionError("truth field grid does not match the flow grid");
  }

  double sum_p = 0.0;
  double sum_g = 0.0;
  for (int j = 0; j < proj.grid_height; ++j) {
    for (int i = 0; i < proj.grid_width; ++i) {
      SiteComparison s;
      s.site = proj.site(i, j);
      if (proj.is_valid(i, j)) s.theta_projection = proj.angle(i, j);
      if (grad.is_valid(i, j)) s.theta_gradient = grad.angle(i, j);
      if (truth && truth->is_valid(i, j)) s.theta_truth = truth->angle(i, j);
      if (truth) {
        if (s.theta_projection && s.theta_truth) s.err_projection = angular_distance(*s.theta_projection, *s.theta_truth);
        if (s.theta_gradient && s.theta_truth) s.err_gradient = angular_distance(*s.theta_gradient, *s.theta_truth);
      } else if (s.theta_projection && s.theta_gradient) {
        s.err_projection = s.err_gradient = angular_distance(*s.theta_projection, *s.theta_gradient);
      }
      if (s.err_projection && s.err_gradient &&
          is_interior(s.site, input.width(), input.height(), interior_margin)) {
        sum_p += *s.err_projection;
        sum_g += *s.err_gradient;
        ++report.n_sites;
      }
      report.sites.push_back(s);
    }
  }
  if (report.n_sites > 0) {
    report.mae_projection = sum_p / static_cast<double>(report.n_sites);
    report.mae_gradient = sum_g / static_cast<double>(report.n_sites);
  }
  return report;
}

namespace {

std::string fmt6(const std::optional<double>& v) {
  if (!v) return "";
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6f", *v);
  return buf.data();
}

std::string fmt_coord(double v) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%g", v);
  return buf.data();
}

}  // namespace

std::string comparison_to_csv(const ComparisonReport& report) {
  std::string out = "site_x,site_y,theta_projection,theta_gradient,theta_truth,err_projection,err_gradient\n";
  for (const SiteComparison& s : report.sites) {
    out += fmt_coord(s.site.x) + "," + fmt_coord(s.site.y) + "," + fmt6(s.theta_projection) + "," +
           fmt6(s.theta_gradient) + "," + fmt6(s.theta_truth) + "," + fmt6(s.err_projection) + "," +
           fmt6(s.err_gradient) + "\n";
  }
  return out;
}

std::string comparison_summary(const ComparisonReport& report) {
  return "mae_projection,mae_gradient,n_sites\n" + fmt6(report.mae_projection) + "," + fmt6(report.mae_gradient) +
         "," + std::to_string(report.n_sites) + "\n";
}

}  // namespace ridgeflow
