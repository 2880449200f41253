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

#include <iosfwd>
#include <map>
#include <span>
#include <string>

#include "ridgeflow/pipeline.hpp"
#include "ridgeflow/synth.hpp"

namespace ridgeflow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

/// Every tunable the command line can override.
struct ToolConfig {
  PipelineConfig pipeline;
  SyntheticSpec synth;
  double orientation_deg = 0.0;
};

/// Flat key=value view of a ToolConfig, keys sorted.
std::map<std::string, std::string> config_entries(const ToolConfig& cfg);
std::string format_config(const ToolConfig& cfg);

/// Runs one invocation. `args` excludes the program name. Returns 0 on
/// success, 1 on usage errors (usage text goes to `err`), 2 on runtime or
/// data errors.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ridgeflow::cli
