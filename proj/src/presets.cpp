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

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <utility>

#include "fdabeam/runner.hpp"

namespace fdabeam {

namespace {

std::vector<Preset> load_presets() {
  const std::pair<const char*, const char*> raw[] = {
#include "presets_data.inc"
  };
  std::vector<Preset> out;
  for (const auto& [name, text] : raw) {
    const YAML::Node root = YAML::Load(text);
    std::string desc = root["description"] ? root["description"].as<std::string>() : "";
    out.push_back({name, std::move(desc), text});
  }
  std::sort(out.begin(), out.end(), [](const Preset& a, const Preset& b) { return a.name < b.name; });
  return out;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> table = load_presets();
  return table;
}

const Preset* find_preset(std::string_view name) {
  for (const auto& p : presets())
    if (p.name == name) return &p;
  return nullptr;
}

}  // namespace fdabeam
