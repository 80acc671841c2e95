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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "fdabeam/export.hpp"
#include "fdabeam/runner.hpp"
#include "fdabeam/scenario.hpp"

using namespace fdabeam;
namespace fs = std::filesystem;

namespace {

constexpr double deg = kPi / 180.0;

const char* kBase = R"(name: unit
array:
  elements: 8
  carrier: 10 GHz
  spacing: 0.5 lambda0
  pulse: 5 us
plan:
  type: uniform
  offset: 200 kHz
evaluations:
  - kind: fitb_grid
    time_samples: 16
    angle_samples: 64
  - kind: scan_report
    times: [0 us, 1 us]
)";

std::string with(const std::string& extra) { return std::string(kBase) + extra; }

std::string error_of(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) : path(fs::temp_directory_path() / ("fdabeam_test_" + tag)) {
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("quantities and units") {
  CHECK(parse_quantity("200 kHz", Dimension::Frequency) == doctest::Approx(200e3));
  CHECK(parse_quantity("10GHz", Dimension::Frequency) == doctest::Approx(10e9));
  CHECK(parse_quantity("5 us", Dimension::Time) == doctest::Approx(5e-6));
  CHECK(parse_quantity("18 km", Dimension::Length) == doctest::Approx(18e3));
  CHECK(parse_quantity("60 deg", Dimension::Angle) == doctest::Approx(60 * deg));
  CHECK(parse_quantity("60", Dimension::Angle) == doctest::Approx(60 * deg));
  CHECK(parse_quantity("0.5 rad", Dimension::Angle) == doctest::Approx(0.5));
  CHECK(parse_quantity("3e8", Dimension::Speed) == doctest::Approx(3e8));
  CHECK_THROWS_AS(parse_quantity("5 parsecs", Dimension::Length), ValidationError);
  CHECK_THROWS_AS(parse_quantity("5 kHz", Dimension::Time), ValidationError);
  CHECK_THROWS_AS(parse_quantity("fast", Dimension::Speed), ValidationError);

  CHECK(parse_spacing("0.5 lambda0").kind == SpacingSpec::Kind::Lambda0);
  CHECK(parse_spacing("0.5 lambdac").kind == SpacingSpec::Kind::LambdaC);
  const auto m = parse_spacing("0.015 m");
  CHECK(m.kind == SpacingSpec::Kind::Meters);
  CHECK(m.value == doctest::Approx(0.015));
}

TEST_CASE("parse and resolve a minimal scenario") {
  const auto s = parse_scenario(kBase);
  CHECK(s.name == "unit");
  REQUIRE(s.evaluations.size() == 2);
  CHECK(s.evaluations[0].kind == EvaluationKind::FitbGrid);
  CHECK(s.evaluations[0].line == 11);
  CHECK(s.evaluations[1].times.size() == 2);
  CHECK(s.outputs.directory == "out/unit");

  const auto r = resolve(s);
  CHECK(r.config.num_elements() == 8);
  CHECK(r.config.spacing() == doctest::Approx(0.5 * 3e8 / (10e9 + 7 * 200e3)).epsilon(1e-14));
  CHECK(r.plan.uniform_step() == 200e3);
  CHECK(r.waveforms.size() == 1);

  std::string text = kBase;
  text.replace(text.find("lambda0"), 7, "lambdac");
  const auto lc = resolve(parse_scenario(text));
  CHECK(lc.config.spacing() == doctest::Approx(0.015).epsilon(1e-14));
}

TEST_CASE("errors carry line numbers and field names") {
  const auto unknown = error_of(with("bogus: 1\n"));
  CHECK(unknown.find("line 16") != std::string::npos);
  CHECK(unknown.find("bogus") != std::string::npos);

  const auto nested = error_of(std::string(kBase).replace(std::string(kBase).find("  pulse"), 0, "  colour: red\n"));
  CHECK(nested.find("line 6") != std::string::npos);
  CHECK(nested.find("colour") != std::string::npos);

  CHECK_THROWS_AS(parse_scenario(with("weights:\n  type: random\n")), ValidationError);
  CHECK(error_of(with("weights:\n  type: random\n")).find("seed") != std::string::npos);
  CHECK_NOTHROW(parse_scenario(with("weights:\n  type: random\n  seed: 5\n")));

  CHECK_THROWS_AS(parse_scenario(""), ParseError);
  CHECK_THROWS_AS(parse_scenario("just a string"), ParseError);
  CHECK_THROWS_AS(parse_scenario("name: [unclosed\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("name: x\nevaluations: []\n"), ValidationError);
  CHECK_THROWS_AS(parse_scenario(with("outputs:\n  formats: [pdf]\n")), ValidationError);
  CHECK_THROWS_AS(parse_scenario(std::string(kBase).replace(0, 10, "name: a/b\n")), ValidationError);
}

TEST_CASE("semantic validation") {
  const std::string coded = R"(name: coded
array: {elements: 16, carrier: 10 GHz, spacing: 0.5 lambda0, pulse: 5 us}
plan: {type: coding, scheme: square, scale: 1 kHz}
evaluations:
  - kind: fitb_grid
)";
  // lambda0 needs a uniform step.
  CHECK_THROWS_AS(parse_scenario(coded), ValidationError);

  auto ok = coded;
  ok.replace(ok.find("lambda0"), 7, "lambdac");
  const auto r = resolve(parse_scenario(ok));
  CHECK(r.plan.is_tabulated());
  CHECK(r.plan.offset(3) == doctest::Approx(9e3));

  auto scan = ok;
  scan += "  - kind: scan_report\n";
  CHECK_THROWS_AS(parse_scenario(scan), ValidationError);

  CHECK_THROWS_AS(parse_scenario(with("weights:\n  type: steered\n  angle: 90 deg\n")), ValidationError);
  CHECK_THROWS_AS(parse_scenario(std::string(kBase).replace(std::string(kBase).find("elements: 8"), 11, "elements: 0")),
                  ValidationError);
}

TEST_CASE("SHA-256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("runs write artifacts and a matching manifest") {
  TempDir a("run_a"), b("run_b");
  const auto s = parse_scenario(with("outputs:\n  formats: [csv, bin]\n"));
  const auto ra = run_scenario(s, {a.path});
  const auto rb = run_scenario(s, {b.path});
  REQUIRE(!ra.artifacts.empty());
  CHECK(ra.artifacts.back() == "manifest.txt");
  CHECK(ra.artifacts == rb.artifacts);

  std::map<std::string, std::string> hashes;
  std::istringstream manifest(slurp(a.path / "manifest.txt"));
  std::string hash, name;
  while (manifest >> hash >> name) hashes[name] = hash;
  CHECK(hashes.size() + 1 == ra.artifacts.size());
  CHECK(hashes.count("fitb.csv") == 1);
  CHECK(hashes.count("fitb.bin") == 1);
  for (const auto& [file, h] : hashes) {
    CHECK(sha256_hex(slurp(a.path / file)) == h);
    CHECK(slurp(a.path / file) == slurp(b.path / file));
  }
  CHECK(slurp(a.path / "manifest.txt") == slurp(b.path / "manifest.txt"));

  std::ifstream bin(a.path / "fitb.bin", std::ios::binary);
  const auto g = read_grid_binary(bin);
  CHECK(g.num_times() == 16);
  CHECK(g.num_angles() == 64);
}

TEST_CASE("duplicate artifact names are rejected") {
  TempDir d("dup");
  const auto s = parse_scenario(with("  - kind: fitb_grid\n    time_samples: 4\n    angle_samples: 8\n"));
  CHECK_THROWS_AS(run_scenario(s, {d.path}), ValidationError);
}

TEST_CASE("bundled presets") {
  const auto& all = presets();
  CHECK(all.size() >= 16);
  CHECK(find_preset("fig6") != nullptr);
  CHECK(find_preset("fig9b") != nullptr);
  CHECK(find_preset("nope") == nullptr);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].name < all[i].name);
  for (const auto& p : all) {
    INFO(p.name);
    CHECK(!p.description.empty());
    const auto s = parse_scenario(p.text);
    CHECK(s.name == p.name);
    CHECK_NOTHROW(resolve(s));
  }
}
