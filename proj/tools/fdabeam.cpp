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

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "fdabeam/parallel.hpp"
#include "fdabeam/runner.hpp"
#include "fdabeam/scenario.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitRuntime = 4;

std::optional<std::filesystem::path> output_override(const std::string& flag) {
  if (!flag.empty()) return std::filesystem::path(flag);
  if (const char* env = std::getenv("FDABEAM_OUT_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

void apply_thread_env() {
  const char* env = std::getenv("FDABEAM_THREADS");
  if (!env || !*env) return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1) throw fdabeam::ValidationError("FDABEAM_THREADS must be a positive integer");
  fdabeam::set_default_threads(static_cast<std::size_t>(n));
}

// Runs `body` and maps the error taxonomy onto exit codes.
template <typename F>
int guarded(const std::string& what, F&& body) {
  try {
    return body();
  } catch (const fdabeam::ParseError& e) {
    std::cerr << what << ": parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const fdabeam::ValidationError& e) {
    std::cerr << what << ": validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << what << ": runtime error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

int run(const fdabeam::Scenario& sc, const std::string& out_flag) {
  apply_thread_env();
  fdabeam::RunOptions opts;
  opts.output_dir = output_override(out_flag);
  const auto summary = fdabeam::run_scenario(sc, opts);
  std::cout << "wrote " << summary.artifacts.size() << " files to " << summary.directory.string() << "\n";
  for (const auto& name : summary.artifacts) std::cout << "  " << name << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fdabeam: frequency diverse array transmit beampattern simulator"};
  app.require_subcommand(1);

  std::string file, preset_name, out_flag;

  auto* run_cmd = app.add_subcommand("run", "Evaluate a scenario file");
  run_cmd->add_option("file", file, "Scenario YAML file")->required();
  run_cmd->add_option("--out", out_flag, "Output directory (overrides FDABEAM_OUT_DIR and the scenario)");

  auto* preset_cmd = app.add_subcommand("preset", "Evaluate a bundled figure scenario");
  preset_cmd->add_option("name", preset_name, "Preset name (see list-presets)")->required();
  preset_cmd->add_option("--out", out_flag, "Output directory (overrides FDABEAM_OUT_DIR)");

  auto* list_cmd = app.add_subcommand("list-presets", "List bundled scenarios");

  auto* validate_cmd = app.add_subcommand("validate", "Parse and check a scenario without running it");
  validate_cmd->add_option("file", file, "Scenario YAML file")->required();

  auto* show_cmd = app.add_subcommand("show-preset", "Print the YAML of a bundled scenario");
  show_cmd->add_option("name", preset_name, "Preset name")->required();

  CLI11_PARSE(app, argc, argv);

  if (*run_cmd)
    return guarded(file, [&] { return run(fdabeam::load_scenario_file(file), out_flag); });

  if (*validate_cmd)
    return guarded(file, [&] {
      const auto sc = fdabeam::load_scenario_file(file);
      std::cout << file << ": ok (" << sc.evaluations.size() << " evaluations)\n";
      return 0;
    });

  if (*list_cmd) {
    for (const auto& p : fdabeam::presets()) std::cout << p.name << "  " << p.description << "\n";
    return 0;
  }

  const fdabeam::Preset* p = fdabeam::find_preset(preset_name);
  if (!p) {
    std::cerr << "unknown preset '" << preset_name << "'; try list-presets\n";
    return kExitValidation;
  }
  if (*show_cmd) {
    std::cout << p->text;
    return 0;
  }
  return guarded(p->name, [&] { return run(fdabeam::parse_scenario(p->text), out_flag); });
}
