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

#include <filesystem>
#include <string>

#include "ridgeflow/flow_field.hpp"
#include "ridgeflow/image.hpp"

namespace ridgeflow::cli {

/// SVG with the image as an embedded PNG background and one line segment
/// per valid site: centered on the site, 0.9 * stride long, at the site's
/// angle. Pixel centers sit at integer user coordinates.
std::string flow_overlay_svg(const GrayImage& image, const FlowField& flow);
void render_flow_overlay(const GrayImage& image, const FlowField& flow, const std::filesystem::path& out);

/// 8-bit grayscale PNG (zlib-compressed, no filtering).
std::string encode_png(const GrayImage& image);

}  // namespace ridgeflow::cli
