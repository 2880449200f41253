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


#include "overlay.hpp"

#include <zlib.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ridgeflow/binarize.hpp"
#include "ridgeflow/pgm.hpp"

namespace ridgeflow::cli {

namespace {

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>((v >> 24) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

void put_chunk(std::string& out, const char* type, const std::string& payload) {
  put_u32(out, static_cast<std::uint32_t>(payload.size()));
  std::string body(type, 4);
  body += payload;
  out += body;
  const auto crc = crc32(0L, reinterpret_cast<const Bytef*>(body.data()), static_cast<uInt>(body.size()));
  put_u32(out, static_cast<std::uint32_t>(crc));
}

std::string base64(const std::string& in) {
  static constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((in.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 2 < in.size(); i += 3) {
    const std::uint32_t n = (static_cast<unsigned char>(in[i]) << 16) | (static_cast<unsigned char>(in[i + 1]) << 8) |
                            static_cast<unsigned char>(in[i + 2]);
    out += kAlphabet[(n >> 18) & 63];
    out += kAlphabet[(n >> 12) & 63];
    out += kAlphabet[(n >> 6) & 63];
    out += kAlphabet[n & 63];
  }
  if (i + 1 == in.size()) {
    const std::uint32_t n = static_cast<unsigned char>(in[i]) << 16;
    out += kAlphabet[(n >> 18) & 63];
    out += kAlphabet[(n >> 12) & 63];
    out += "==";
  } else if (i + 2 == in.size()) {
    const std::uint32_t n = (static_cast<unsigned char>(in[i]) << 16) | (static_cast<unsigned char>(in[i + 1]) << 8);
    out += kAlphabet[(n >> 18) & 63];
    out += kAlphabet[(n >> 12) & 63];
    out += kAlphabet[(n >> 6) & 63];
    out += '=';
  }
  return out;
}

std::string fmt3(double v) {
  std::array<char, 48> buf{};
  std::snprintf(buf.data(), buf.size(), "%.3f", v);
  return buf.data();
}

}  // namespace

std::string encode_png(const GrayImage& image) {
  std::string raw;
  raw.reserve(static_cast<std::size_t>(image.width() + 1) * image.height());
  const auto px = image.pixels();
  for (int y = 0; y < image.height(); ++y) {
    raw.push_back('\0');  // filter: none
    raw.append(reinterpret_cast<const char*>(px.data()) + static_cast<std::size_t>(y) * image.width(),
               static_cast<std::size_t>(image.width()));
  }
  uLongf packed_size = compressBound(static_cast<uLong>(raw.size()));
  std::string packed(packed_size, '\0');
  if (compress2(reinterpret_cast<Bytef*>(packed.data()), &packed_size, reinterpret_cast<const Bytef*>(raw.data()),
                static_cast<uLong>(raw.size()), 9) != Z_OK) {
    throw std::runtime_error("zlib compression failed");
  }
  packed.resize(packed_size);

  std::string png("\x89PNG\r\n\x1a\n", 8);
  std::string ihdr;
  put_u32(ihdr, static_cast<std::uint32_t>(image.width()));
  put_u32(ihdr, static_cast<std::uint32_t>(image.height()));
  ihdr += std::string("\x08\x00\x00\x00\x00", 5);  // 8-bit gray, deflate, no filter, no interlace
  put_chunk(png, "IHDR", ihdr);
  put_chunk(png, "IDAT", packed);
  put_chunk(png, "IEND", "");
  return png;
}

std::string flow_overlay_svg(const GrayImage& image, const FlowField& flow) {
  check_flow_covers(flow, image.width(), image.height());
  const std::string w = std::to_string(image.width());
  const std::string h = std::to_string(image.height());
  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" xmlns:xlink=\"http://www.w3.org/1999/xlink\" width=\"" + w +
         "\" height=\"" + h + "\" viewBox=\"-0.5 -0.5 " + w + " " + h + "\">\n";
  svg += "<image x=\"-0.5\" y=\"-0.5\" width=\"" + w + "\" height=\"" + h +
         "\" image-rendering=\"pixelated\" xlink:href=\"data:image/png;base64," + base64(encode_png(image)) + "\"/>\n";
  svg += "<g stroke=\"#ff3030\" stroke-width=\"0.25\" stroke-linecap=\"round\">\n";
  const double half = 0.45 * flow.stride;
  for (int j = 0; j < flow.grid_height; ++j) {
    for (int i = 0; i < flow.grid_width; ++i) {
      if (!flow.is_valid(i, j)) continue;
      const Point c = flow.site(i, j);
      const double dx = half * std::cos(flow.angle(i, j));
      const double dy = half * std::sin(flow.angle(i, j));
      svg += "<line x1=\"" + fmt3(c.x - dx) + "\" y1=\"" + fmt3(c.y - dy) + "\" x2=\"" + fmt3(c.x + dx) + "\" y2=\"" +
             fmt3(c.y + dy) + "\"/>\n";
    }
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

void render_flow_overlay(const GrayImage& image, const FlowField& flow, const std::filesystem::path& out) {
  write_file(out, flow_overlay_svg(image, flow));
}

}  // namespace ridgeflow::cli
