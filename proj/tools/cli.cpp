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


#include "cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <charconv>
#include <filesystem>
#include <numbers>
#include <ostream>
#include <vector>

#include "overlay.hpp"
#include "ridgeflow/contour.hpp"
#include "ridgeflow/pgm.hpp"

namespace ridgeflow::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string shortest(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

struct Paths {
  std::string input;
  std::string out;
  std::string out_prefix;
  std::string flow;
  std::string binary;
  std::string truth;
  std::string summary;
  std::string svg;
  int margin = -1;
  bool print_config = false;
};

struct Names {
  std::string method = "projection";
  std::string path = "linear";
  std::string pattern = "parallel";
  bool full_line_only = false;
};

void add_pipeline_flags(CLI::App* app, ToolConfig& cfg, Names& names) {
  FlowConfig& f = cfg.pipeline.flow;
  app->add_option("--stride", f.stride, "Flow grid spacing in pixels");
  app->add_option("--tangent-half", f.tangent_half_length, "Half length of L(p, alpha)");
  app->add_option("--perp-half", f.perp_half_length, "Half length of the perpendiculars L'");
  app->add_option("--coarse-step-denom", f.coarse_divisions, "Coarse angular step is pi/N");
  app->add_option("--fine-step-denom", f.fine_divisions, "Fine angular step is pi/N");
  app->add_option("--fine-half-steps", f.fine_half_steps, "Refinement window in fine steps each side");
  app->add_option("--bg-threshold", f.background_variance_threshold, "Background patch-variance threshold");
  app->add_option("--presmooth-sigma", f.presmooth_sigma, "Gaussian pre-blur before flow estimation (0 = off)");
  app->add_flag("--full-line-only", names.full_line_only, "Disable the half-line min rule");
  app->add_option("--method", names.method, "Flow method")->check(CLI::IsMember({"projection", "gradient"}));
  app->add_option("--window-half", cfg.pipeline.gradient.window_half, "Structure-tensor window half size");
  app->add_option("--weight-sigma", cfg.pipeline.gradient.weight_sigma, "Structure-tensor Gaussian weight sigma");
  app->add_option("--min-coherence", cfg.pipeline.gradient.min_coherence, "Structure-tensor coherence cutoff");
  app->add_option("--bin-half", cfg.pipeline.binarize.line_half_length, "Half length of the g/h lines");
  app->add_flag("--invert-polarity", cfg.pipeline.binarize.invert_polarity, "Inputs have light ridges");
  app->add_option("--sigma", cfg.pipeline.enhance.gaussian_sigma, "Enhancement Gaussian sigma");
  app->add_option("--kernel-half", cfg.pipeline.enhance.kernel_half_length, "Enhancement kernel half length");
  app->add_option("--iterations", cfg.pipeline.iterations, "Pipeline iterations");
  app->add_option("--path", names.path, "Sampling path")->check(CLI::IsMember({"linear", "contour"}));
}

void add_synth_flags(CLI::App* app, ToolConfig& cfg, Names& names) {
  SyntheticSpec& s = cfg.synth;
  app->add_option("--pattern", names.pattern, "Ridge pattern")
      ->check(CLI::IsMember({"parallel", "concentric", "half_plane_stripe"}));
  app->add_option("--width", s.width, "Image width");
  app->add_option("--height", s.height, "Image height");
  app->add_option("--orientation-deg", cfg.orientation_deg, "Ridge orientation in degrees");
  app->add_option("--period", s.period, "Ridge period in pixels");
  app->add_option("--amplitude", s.amplitude, "Sinusoid amplitude");
  app->add_option("--offset", s.offset, "Sinusoid offset");
  app->add_option("--noise-sigma", s.noise_sigma, "Gaussian noise sigma");
  app->add_option("--seed", s.rng_seed, "Noise seed");
  app->add_option("--stride", s.stride, "Truth grid spacing in pixels");
}

void add_common(CLI::App* app, Paths& paths) {
  app->add_flag("--print-config", paths.print_config, "Print the resolved configuration and exit");
}

void resolve(ToolConfig& cfg, const Names& names) {
  cfg.pipeline.flow_method = flow_method_from_string(names.method);
  cfg.pipeline.path_mode = path_mode_from_string(names.path);
  cfg.pipeline.flow.half_line_rule = !names.full_line_only;
  cfg.synth.pattern = pattern_from_string(names.pattern);
  cfg.synth.orientation = cfg.orientation_deg * std::numbers::pi / 180.0;
}

void require(const std::string& value, const char* what) {
  if (value.empty()) throw UsageError(std::string("missing ") + what);
}

std::filesystem::path prefixed(const std::string& prefix, const std::string& name) {
  return std::filesystem::path(prefix + name);
}

void ensure_parent(const std::filesystem::path& p) {
  const auto parent = p.parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
}

FlowField flow_for(const GrayImage& image, const ToolConfig& cfg, const Paths& paths) {
  if (!paths.flow.empty()) return load_flow_csv(paths.flow);
  return compute_flow(image, cfg.pipeline);
}

BinaryImage binary_for(const GrayImage& image, const FlowField& flow, const ToolConfig& cfg) {
  if (cfg.pipeline.path_mode == PathMode::contour) return binarize_image_contour(image, flow, cfg.pipeline.binarize);
  return binarize_image(image, flow, cfg.pipeline.binarize);
}

int cmd_flow(const ToolConfig& cfg, const Paths& paths, std::ostream& out) {
  require(paths.input, "input image");
  const GrayImage image = load_pgm(paths.input);
  const FlowField flow = compute_flow(image, cfg.pipeline);
  if (paths.out.empty()) {
    out << flow_to_csv(flow);
  } else {
    save_flow_csv(flow, paths.out);
  }
  if (!paths.svg.empty()) render_flow_overlay(image, flow, paths.svg);
  return kExitOk;
}

int cmd_binarize(const ToolConfig& cfg, const Paths& paths) {
  require(paths.input, "input image");
  require(paths.out, "--out");
  const GrayImage image = load_pgm(paths.input);
  const FlowField flow = flow_for(image, cfg, paths);
  save_binary_pgm(binary_for(image, flow, cfg), paths.out);
  return kExitOk;
}

int cmd_enhance(const ToolConfig& cfg, const Paths& paths) {
  require(paths.input, "input image");
  require(paths.out, "--out");
  const GrayImage image = load_pgm(paths.input);
  const FlowField flow = flow_for(image, cfg, paths);
  const BinaryImage binary = paths.binary.empty() ? binary_for(image, flow, cfg) : load_binary_pgm(paths.binary);
  const GrayImage enhanced = cfg.pipeline.path_mode == PathMode::contour
                                 ? enhance_image_contour(image, binary, flow, cfg.pipeline.enhance)
                                 : enhance_image(image, binary, flow, cfg.pipeline.enhance);
  save_pgm(enhanced, paths.out);
  return kExitOk;
}

int cmd_pipeline(const ToolConfig& cfg, const Paths& paths) {
  require(paths.input, "input image");
  require(paths.out_prefix, "--out-prefix");
  const GrayImage image = load_pgm(paths.input);
  const PipelineResult result = run_pipeline(image, cfg.pipeline);
  ensure_parent(prefixed(paths.out_prefix, "flow_1.csv"));
  for (std::size_t k = 0; k < result.iterations.size(); ++k) {
    const std::string n = std::to_string(k + 1);
    const IterationResult& it = result.iterations[k];
    save_flow_csv(it.flow, prefixed(paths.out_prefix, "flow_" + n + ".csv"));
    save_binary_pgm(it.binary, prefixed(paths.out_prefix, "bin_" + n + ".pgm"));
    save_pgm(it.enhanced, prefixed(paths.out_prefix, "enh_" + n + ".pgm"));
  }
  return kExitOk;
}

int cmd_compare(const ToolConfig& cfg, const Paths& paths, std::ostream& out) {
  require(paths.input, "input image");
  const GrayImage image = load_pgm(paths.input);
  std::optional<FlowField> truth;
  if (!paths.truth.empty()) truth = load_flow_csv(paths.truth);
  const int margin = paths.margin >= 0 ? paths.margin : cfg.pipeline.flow.interior_margin();
  const ComparisonReport report = compare_methods(image, truth, cfg.pipeline, margin);
  if (!paths.out.empty()) write_file(paths.out, comparison_to_csv(report));
  if (!paths.summary.empty()) write_file(paths.summary, comparison_summary(report));
  out << comparison_summary(report);
  return kExitOk;
}

int cmd_synth(const ToolConfig& cfg, const Paths& paths) {
  require(paths.out, "--out");
  const SyntheticImage s = generate(cfg.synth);
  save_pgm(s.image, paths.out);
  if (!paths.truth.empty()) save_flow_csv(s.truth, paths.truth);
  return kExitOk;
}

int cmd_viz(const ToolConfig& cfg, const Paths& paths) {
  require(paths.input, "input image");
  require(paths.out, "--out");
  const GrayImage image = load_pgm(paths.input);
  render_flow_overlay(image, flow_for(image, cfg, paths), paths.out);
  return kExitOk;
}

}  // namespace

std::map<std::string, std::string> config_entries(const ToolConfig& cfg) {
  const PipelineConfig& p = cfg.pipeline;
  const SyntheticSpec& s = cfg.synth;
  return {
      {"binarize.invert_polarity", p.binarize.invert_polarity ? "1" : "0"},
      {"binarize.line_half_length", std::to_string(p.binarize.line_half_length)},
      {"enhance.gaussian_sigma", shortest(p.enhance.gaussian_sigma)},
      {"enhance.kernel_half_length", std::to_string(p.enhance.kernel_half_length)},
      {"flow.background_variance_threshold", shortest(p.flow.background_variance_threshold)},
      {"flow.coarse_divisions", std::to_string(p.flow.coarse_divisions)},
      {"flow.fine_divisions", std::to_string(p.flow.fine_divisions)},
      {"flow.fine_half_steps", std::to_string(p.flow.fine_half_steps)},
      {"flow.half_line_rule", p.flow.half_line_rule ? "1" : "0"},
      {"flow.perp_half_length", std::to_string(p.flow.perp_half_length)},
      {"flow.presmooth_sigma", shortest(p.flow.presmooth_sigma)},
      {"flow.stride", std::to_string(p.flow.stride)},
      {"flow.tangent_half_length", std::to_string(p.flow.tangent_half_length)},
      {"gradient.min_coherence", shortest(p.gradient.min_coherence)},
      {"gradient.weight_sigma", shortest(p.gradient.weight_sigma)},
      {"gradient.window_half", std::to_string(p.gradient.window_half)},
      {"pipeline.flow_method", to_string(p.flow_method)},
      {"pipeline.iterations", std::to_string(p.iterations)},
      {"pipeline.path_mode", to_string(p.path_mode)},
      {"synth.amplitude", shortest(s.amplitude)},
      {"synth.height", std::to_string(s.height)},
      {"synth.noise_sigma", shortest(s.noise_sigma)},
      {"synth.offset", shortest(s.offset)},
      {"synth.orientation_deg", shortest(cfg.orientation_deg)},
      {"synth.pattern", to_string(s.pattern)},
      {"synth.period", shortest(s.period)},
      {"synth.seed", std::to_string(s.rng_seed)},
      {"synth.stride", std::to_string(s.stride)},
      {"synth.width", std::to_string(s.width)},
  };
}

std::string format_config(const ToolConfig& cfg) {
  std::string out;
  for (const auto& [k, v] : config_entries(cfg)) out += k + "=" + v + "\n";
  return out;
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  ToolConfig cfg;
  Paths paths;
  Names names;

  CLI::App app{"ridgeflow: fingerprint orientation flow, binarization and enhancement", "ridgeflow"};
  app.require_subcommand(1);

  auto* flow = app.add_subcommand("flow", "Estimate the orientation flow field (CSV)");
  auto* binarize = app.add_subcommand("binarize", "Binarize into ridge (0) and valley (255) pixels");
  auto* enhance = app.add_subcommand("enhance", "Directional enhancement along the flow");
  auto* pipeline = app.add_subcommand("pipeline", "Iterated flow -> binarize -> enhance");
  auto* compare = app.add_subcommand("compare", "Projection vs. gradient flow comparison");
  auto* synth = app.add_subcommand("synth", "Generate a synthetic ridge pattern and its truth field");
  auto* viz = app.add_subcommand("viz", "Render the flow field over the image as SVG");

  for (auto* sub : {flow, binarize, enhance, pipeline, compare, viz}) {
    sub->add_option("input", paths.input, "Input PGM (P5, maxval 255)");
    add_pipeline_flags(sub, cfg, names);
    add_common(sub, paths);
  }
  add_synth_flags(synth, cfg, names);
  add_common(synth, paths);

  flow->add_option("--out", paths.out, "Flow CSV path (stdout when omitted)");
  flow->add_option("--svg", paths.svg, "Also write an SVG overlay");
  binarize->add_option("--out", paths.out, "Binary PGM path");
  binarize->add_option("--flow", paths.flow, "Use this flow CSV instead of estimating");
  enhance->add_option("--out", paths.out, "Enhanced PGM path");
  enhance->add_option("--flow", paths.flow, "Use this flow CSV instead of estimating");
  enhance->add_option("--binary", paths.binary, "Use this binary PGM instead of binarizing");
  pipeline->add_option("--out-prefix", paths.out_prefix, "Prefix for flow_k.csv, bin_k.pgm, enh_k.pgm");
  compare->add_option("--truth", paths.truth, "Ground-truth flow CSV");
  compare->add_option("--out", paths.out, "Per-site comparison CSV");
  compare->add_option("--summary", paths.summary, "Summary CSV");
  compare->add_option("--margin", paths.margin, "Interior margin for the MAE (default tangent+perp half)");
  synth->add_option("--out", paths.out, "Image PGM path");
  synth->add_option("--truth", paths.truth, "Truth flow CSV path");
  viz->add_option("--out", paths.out, "SVG path");
  viz->add_option("--flow", paths.flow, "Use this flow CSV instead of estimating");

  CLI::App* active = &app;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    for (auto* sub : app.get_subcommands()) active = sub;
    resolve(cfg, names);
    if (paths.print_config) {
      out << format_config(cfg);
      return kExitOk;
    }
    cfg.pipeline.validate();
    if (active == synth) {
      cfg.synth.validate();
      return cmd_synth(cfg, paths);
    }
    if (active == flow) return cmd_flow(cfg, paths, out);
    if (active == binarize) return cmd_binarize(cfg, paths);
    if (active == enhance) return cmd_enhance(cfg, paths);
    if (active == pipeline) return cmd_pipeline(cfg, paths);
    if (active == compare) return cmd_compare(cfg, paths, out);
    if (active == viz) return cmd_viz(cfg, paths);
    throw UsageError("no subcommand given");
  } catch (const CLI::CallForHelp&) {
    out << active->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << active->help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << active->help();
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n" << active->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace ridgeflow::cli
