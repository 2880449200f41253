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


#include "ridgeflow/flow_field.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "ridgeflow/pgm.hpp"

namespace ridgeflow {

FlowField FlowField::for_image(int width, int height, int stride) {
  if (stride < 1) throw ConfigError("stride must be >= 1");
  if (width < 1 || height < 1) throw DimensionError("flow grid needs a non-empty image");
  FlowField f;
  f.stride = stride;
  f.grid_width = (width + stride - 1) / stride;
  f.grid_height = (height + stride - 1) / stride;
  const std::size_t n = static_cast<std::size_t>(f.grid_width) * f.grid_height;
  f.angles.assign(n, 0.0);
  f.valid.assign(n, 0);
  return f;
}

std::size_t FlowField::valid_count() const {
  return static_cast<std::size_t>(std::count(valid.begin(), valid.end(), std::uint8_t{1}));
}

std::optional<double> angle_at(const FlowField& flow, Point p) {
  const double gx = (p.x - flow.origin.x) / flow.stride;
  const double gy = (p.y - flow.origin.y) / flow.stride;
  double fi = std::floor(gx);
  double fj = std::floor(gy);
  double fx = gx - fi;
  double fy = gy - fj;
  if (fx > 1.0 - 1e-9) { fi += 1.0; fx = 0.0; }
  if (fy > 1.0 - 1e-9) { fj += 1.0; fy = 0.0; }
  if (fx < 1e-9) fx = 0.0;
  if (fy < 1e-9) fy = 0.0;
  const int i0 = static_cast<int>(fi);
  const int j0 = static_cast<int>(fj);

  struct Neighbor {
    int di, dj;
    double w;
  };
  const std::array<Neighbor, 4> nbrs{{{0, 0, (1 - fx) * (1 - fy)},
                                      {1, 0, fx * (1 - fy)},
                                      {0, 1, (1 - fx) * fy},
                                      {1, 1, fx * fy}}};
  double wsum = 0.0;
  double cx = 0.0;
  double sy = 0.0;
  std::optional<double> first;
  bool uniform = true;
  for (const auto& n : nbrs) {
    if (n.w <= 0.0) continue;
    const int i = i0 + n.di;
    const int j = j0 + n.dj;
    if (i < 0 || j < 0 || i >= flow.grid_width || j >= flow.grid_height) continue;
    if (!flow.is_valid(i, j)) continue;
    const double t = flow.angle(i, j);
    if (!first) {
      first = t;
    } else if (t != *first) {
      uniform = false;
    }
    wsum += n.w;
    cx += n.w * std::cos(2.0 * t);
    sy += n.w * std::sin(2.0 * t);
  }
  if (!first) return std::nullopt;
  if (uniform) return first;
  cx /= wsum;
  sy /= wsum;
  if (std::hypot(cx, sy) < 1e-6) return std::nullopt;
  return wrap_orientation(0.5 * std::atan2(sy, cx));
}

double angular_distance(double a, double b) {
  const double d = std::abs(wrap_orientation(a) - wrap_orientation(b));
  return std::min(d, std::numbers::pi - d);
}

bool is_interior(Point site, int width, int height, int margin) {
  return site.x >= margin && site.y >= margin && site.x <= width - 1 - margin && site.y <= height - 1 - margin;
}

AngularError mean_angular_error(const FlowField& estimate, const FlowField& truth, int width, int height,
                                int margin) {
  if (estimate.grid_width != truth.grid_width || estimate.grid_height != truth.grid_height ||
      estimate.stride != truth.stride) {
    throw DimensionError("flow fields are on different grids");
  }
  AngularError err;
  double sum = 0.0;
  for (int j = 0; j < estimate.grid_height; ++j) {
    for (int i = 0; i < estimate.grid_width; ++i) {
      if (!estimate.is_valid(i, j) || !truth.is_valid(i, j)) continue;
      if (!is_interior(estimate.site(i, j), width, height, margin)) continue;
      sum += angular_distance(estimate.angle(i, j), truth.angle(i, j));
      ++err.count;
    }
  }
  if (err.count > 0) err.mae = sum / static_cast<double>(err.count);
  return err;
}

namespace {

std::string format_fixed6(double v) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6f", v);
  return buf.data();
}

// Integral coordinates print without a fraction so grids round-trip as text.
std::string format_coord(double v) {
  if (v == std::round(v)) return std::to_string(static_cast<long long>(v));
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6f", v);
  return buf.data();
}

// Theta as written: 6 decimals, with values that would print as pi folded
// back to zero so the file stays inside [0, pi).
std::string format_theta(double theta) {
  std::string s = format_fixed6(wrap_orientation(theta));
  if (std::stod(s) >= std::numbers::pi) s = format_fixed6(0.0);
  return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, std::size_t offset) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw FormatError("trailing characters in number '" + s + "'", offset);
    return v;
  } catch (const std::logic_error&) {
    throw FormatError("invalid number '" + s + "'", offset);
  }
}

}  // namespace

std::string flow_to_csv(const FlowField& flow) {
  const bool with_coherence = flow.coherence.size() == flow.site_count() && !flow.coherence.empty();
  std::string out = with_coherence ? "x,y,theta_radians,valid,coherence\n" : "x,y,theta_radians,valid\n";
  for (int j = 0; j < flow.grid_height; ++j) {
    for (int i = 0; i < flow.grid_width; ++i) {
      const Point s = flow.site(i, j);
      const std::size_t k = flow.index(i, j);
      out += format_coord(s.x);
      out += ',';
      out += format_coord(s.y);
      out += ',';
      out += format_theta(flow.angles[k]);
      out += flow.valid[k] ? ",1" : ",0";
      if (with_coherence) {
        out += ',';
        out += format_fixed6(flow.coherence[k]);
      }
      out += '\n';
    }
  }
  return out;
}

FlowField flow_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  if (!std::getline(in, line)) throw FormatError("empty flow CSV", 0);
  const auto header = split_csv_line(line);
  const bool with_coherence = header.size() == 5 && header[4] == "coherence";
  if (header.size() < 4 || header[0] != "x" || header[1] != "y" || header[2] != "theta_radians" ||
      header[3] != "valid" || (header.size() == 5 && !with_coherence) || header.size() > 5) {
    throw FormatError("unexpected flow CSV header '" + line + "'", 0);
  }
  offset += line.size() + 1;

  struct Row {
    double x, y, theta, coherence;
    std::uint8_t valid;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") {
      offset += line.size() + 1;
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != header.size()) throw FormatError("wrong field count in flow CSV row", offset);
    Row r{parse_double(f[0], offset), parse_double(f[1], offset), parse_double(f[2], offset),
          with_coherence ? parse_double(f[4], offset) : 0.0, 0};
    if (f[3] == "1") {
      r.valid = 1;
    } else if (f[3] != "0") {
      throw FormatError("valid column must be 0 or 1", offset);
    }
    rows.push_back(r);
    offset += line.size() + 1;
  }
  if (rows.empty()) throw FormatError("flow CSV has no sites", offset);

  FlowField flow;
  flow.origin = {rows[0].x, rows[0].y};
  int gw = 0;
  while (static_cast<std::size_t>(gw) < rows.size() && rows[gw].y == rows[0].y) ++gw;
  if (rows.size() % static_cast<std::size_t>(gw) != 0) throw FormatError("flow CSV rows do not form a grid", offset);
  flow.grid_width = gw;
  flow.grid_height = static_cast<int>(rows.size() / static_cast<std::size_t>(gw));
  double stride = 1.0;
  if (gw > 1) {
    stride = rows[1].x - rows[0].x;
  } else if (flow.grid_height > 1) {
    stride = rows[static_cast<std::size_t>(gw)].y - rows[0].y;
  }
  if (stride < 1.0 || stride != std::round(stride)) throw FormatError("flow CSV stride is not a positive integer", 0);
  flow.stride = static_cast<int>(stride);
  for (int j = 0; j < flow.grid_height; ++j) {
    for (int i = 0; i < gw; ++i) {
      const Row& r = rows[static_cast<std::size_t>(j) * gw + i];
      const Point expect = flow.site(i, j);
      if (r.x != expect.x || r.y != expect.y) throw FormatError("flow CSV site coordinates are not a regular grid", 0);
    }
  }
  for (const Row& r : rows) {
    flow.angles.push_back(r.theta);
    flow.valid.push_back(r.valid);
    if (with_coherence) flow.coherence.push_back(r.coherence);
  }
  return flow;
}

void save_flow_csv(const FlowField& flow, const std::filesystem::path& path) {
  write_file(path, flow_to_csv(flow));
}

FlowField load_flow_csv(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return flow_from_csv(text);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what(), e.offset());
  }
}

}  // namespace ridgeflow
