// SPDX-License-Identifier: Apache-2.0
//
// fdabeam: frequency diverse array transmit beampattern simulation
// Copyright (C) 2026 The fdabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdabeam/scenario.hpp"

namespace fdabeam {

struct RunOptions {
  /// Overrides the scenario's output directory when set.
  std::optional<std::filesystem::path> output_dir;
};

struct RunSummary {
  std::filesystem::path directory;
  std::vector<std::string> artifacts;  // file names, manifest last
};

/// Evaluates every entry of the scenario and writes artifacts plus manifest.txt
/// ("<sha256>  <file>" per line) into the output directory.
RunSummary run_scenario(const Scenario& scenario, const RunOptions& options = {});

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

struct Preset {
  std::string name;
  std::string description;
  std::string text;  // scenario YAML
};

/// Bundled figure scenarios, sorted by name.
const std::vector<Preset>& presets();
const Preset* find_preset(std::string_view name);

}  // namespace fdabeam
