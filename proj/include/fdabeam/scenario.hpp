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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdabeam/array_model.hpp"
#include "fdabeam/beampattern_instant.hpp"
#include "fdabeam/errors.hpp"
#include "fdabeam/scan_analytics.hpp"
#include "fdabeam/waveform.hpp"

namespace fdabeam {

/// The scenario text is not a well-formed YAML mapping.
class ParseError : public Error {
 public:
  using Error::Error;
};

enum class Dimension { Frequency, Time, Length, Angle, Speed, Scalar };

/// Parses "200 kHz", "5us", "18 km", "60 deg", "0.5 rad", "3e8". Bare numbers are
/// SI, except angles which are degrees. Returns SI (radians for angles).
double parse_quantity(const std::string& text, Dimension dim);

struct SpacingSpec {
  enum class Kind { Meters, Lambda0, LambdaC };
  Kind kind = Kind::Lambda0;
  double value = 0.5;
};

/// "0.015 m", "0.5 lambda0" (c / (f_c + (M-1) df)), "0.5 lambdac" (c / f_c).
SpacingSpec parse_spacing(const std::string& text);

struct ArraySpec {
  std::size_t elements = 16;
  double carrier = 10e9;
  SpacingSpec spacing;
  double pulse = 5e-6;
  double wave_speed = kDefaultWaveSpeed;
  double element_gain = 1.0;
};

struct PlanSpec {
  enum class Kind { Uniform, Tabulated, Coding, TimeModulated };
  Kind kind = Kind::Uniform;
  double offset = 0.0;                  // uniform step
  std::vector<double> offsets;          // tabulated
  FoCoding coding = LogarithmicCoding{};
  ModulationForm form = ModulationForm::SquareRoot;
  double amplitude = 0.0;
  double rate = 1.0;
  std::vector<double> table;
  double table_span = 0.0;
};

struct WeightSpec {
  enum class Kind { Uniform, Steered, Random };
  Kind kind = Kind::Uniform;
  double angle = 0.0;
  std::uint64_t seed = 0;
};

struct WaveformSpec {
  enum class Kind { Rect, ChirpBank, IdenticalChirp };
  Kind kind = Kind::Rect;
  double bandwidth = 0.0;  // declared, rect only
  double base_rate = 100.0;
  double rate_step = 10.0;
};

enum class EvaluationKind { FitbGrid, LegacyGrid, ZeroTimeCut, FgtbCurve, MimoCompare, ScanReport, Schedule };

struct Evaluation {
  EvaluationKind kind = EvaluationKind::FitbGrid;
  std::string label;
  int line = 0;
  std::size_t time_samples = 512;
  std::size_t angle_samples = 1024;
  Engine engine = Engine::Exact;
  std::vector<double> ranges;           // legacy_grid, meters
  bool absolute_time = true;
  double start_time = 0.0;
  std::vector<SpacingSpec> spacings;    // zero_time_cut
  std::vector<double> offsets;          // fgtb_curve / mimo_compare, Hz
  std::size_t quadrature = 0;
  double tolerance = 0.05;              // mimo_compare
  std::vector<double> times;            // scan_report, seconds
  std::vector<ScheduleSegment> segments;
};

struct OutputSpec {
  std::string directory;
  bool csv = true;
  bool binary = false;
  Normalization csv_scale = Normalization::DbRelPeak;
};

struct Scenario {
  std::string name;
  ArraySpec array;
  PlanSpec plan;
  WeightSpec weights;
  WaveformSpec waveforms;
  std::vector<Evaluation> evaluations;
  OutputSpec outputs;
};

/// Parses scenario text. Throws ParseError for malformed text and
/// ValidationError ("line N: field 'x': ...") for semantic problems.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);

/// Engine-level objects resolved from a scenario.
struct ResolvedScenario {
  ArrayConfig config;
  FrequencyPlan plan;
  WeightVector weights;
  std::vector<BasebandWaveform> waveforms;
};

/// Builds the engine objects; ValidationError on inconsistent settings.
ResolvedScenario resolve(const Scenario& scenario);

/// Array config with the spacing rule applied against a uniform step df.
ArrayConfig resolve_array(const ArraySpec& spec, double df);

}  // namespace fdabeam
