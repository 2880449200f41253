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

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "ridgeflow/image.hpp"

namespace ridgeflow {

/// Malformed or unsupported PGM payload. `offset()` is the byte position in
/// the file where parsing failed.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// File could not be opened, read or written. The message names the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a binary PGM (P5) with maxval 255. Comment lines in the header are
/// accepted.
GrayImage load_pgm(const std::filesystem::path& path);
GrayImage decode_pgm(const std::string& bytes);

/// Writes "P5\n<w> <h>\n255\n" followed by the raw row-major payload.
void save_pgm(const GrayImage& image, const std::filesystem::path& path);
std::string encode_pgm(const GrayImage& image);

/// Binary rasters travel as PGM with 0 for ridge bits and 255 for valley bits.
/// On load, values below 128 become ridge bits.
void save_binary_pgm(const BinaryImage& image, const std::filesystem::path& path);
BinaryImage load_binary_pgm(const std::filesystem::path& path);
GrayImage binary_to_gray(const BinaryImage& image);

/// Whole-file helpers shared by the other serializers.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace ridgeflow
