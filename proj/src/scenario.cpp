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

#include "fdabeam/scenario.hpp"

#include "fdabeam/beampattern_integral.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <map>
#include <set>
#include <sstream>

namespace fdabeam {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Splits "200kHz" / "200 kHz" into number and unit.
std::pair<double, std::string> split_number(const std::string& text) {
  const std::string s = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ValidationError("'" + text + "' is not a number");
  }
  if (!std::isfinite(v)) throw ValidationError("'" + text + "' is not finite");
  return {v, trim(s.substr(used))};
}

const std::map<std::string, double>& unit_table(Dimension dim) {
  static const std::map<std::string, double> freq{
      {"", 1.0}, {"hz", 1.0}, {"khz", 1e3}, {"mhz", 1e6}, {"ghz", 1e9}};
  static const std::map<std::string, double> time{{"", 1.0},   {"s", 1.0},   {"ms", 1e-3},
                                                  {"us", 1e-6}, {"µs", 1e-6}, {"ns", 1e-9}};
  static const std::map<std::string, double> length{
      {"", 1.0}, {"m", 1.0}, {"km", 1e3}, {"cm", 1e-2}, {"mm", 1e-3}};
  static const std::map<std::string, double> angle{
      {"", kPi / 180.0}, {"deg", kPi / 180.0}, {"rad", 1.0}};
  static const std::map<std::string, double> speed{{"", 1.0}, {"m/s", 1.0}, {"km/s", 1e3}};
  static const std::map<std::string, double> scalar{{"", 1.0}};
  switch (dim) {
    case Dimension::Frequency: return freq;
    case Dimension::Time: return time;
    case Dimension::Length: return length;
    case Dimension::Angle: return angle;
    case Dimension::Speed: return speed;
    case Dimension::Scalar: return scalar;
  }
  return scalar;
}

[[noreturn]] void fail(const YAML::Node& node, int fallback_line, const std::string& field,
                       const std::string& msg) {
  const int line = node.IsDefined() && node.Mark().line >= 0 ? node.Mark().line + 1 : fallback_line;
  throw ValidationError("line " + std::to_string(line) + ": field '" + field + "': " + msg);
}

// Thin accessor that remembers where it is for diagnostics.
class Section {
 public:
  Section(YAML::Node node, std::string path, int parent_line)
      : node_(std::move(node)), path_(std::move(path)) {
    // Missing sections come back from yaml-cpp as invalid nodes; treat them as empty.
    if (!node_.IsDefined()) node_ = YAML::Node();
    line_ = node_.IsDefined() && node_.Mark().line >= 0 ? node_.Mark().line + 1 : parent_line;
    if (node_.IsDefined() && !node_.IsNull() && !node_.IsMap())
      fail(node_, line_, path_, "expected a mapping");
  }

  int line() const { return line_; }
  bool has(const std::string& key) const { return node_.IsMap() && node_[key].IsDefined(); }
  std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  void allow(std::initializer_list<const char*> keys) const {
    if (!node_.IsMap()) return;
    std::set<std::string> ok(keys.begin(), keys.end());
    for (const auto& kv : node_) {
      const auto key = kv.first.as<std::string>();
      if (!ok.count(key)) fail(kv.first, line_, field(key), "unknown key");
    }
  }

  YAML::Node raw(const std::string& key) const {
    if (!node_.IsMap()) return YAML::Node();
    const YAML::Node n = node_[key];
    return n.IsDefined() ? n : YAML::Node();
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    const auto n = raw(key);
    if (!n.IsScalar()) fail(n, line_, field(key), "expected a scalar");
    return n.Scalar();
  }

  double quantity(const std::string& key, Dimension dim, double fallback) const {
    if (!has(key)) return fallback;
    return quantity_of(raw(key), field(key), dim);
  }

  double quantity_of(const YAML::Node& n, const std::string& name, Dimension dim) const {
    if (!n.IsScalar()) fail(n, line_, name, "expected a scalar");
    try {
      return parse_quantity(n.Scalar(), dim);
    } catch (const ValidationError& e) {
      fail(n, line_, name, e.what());
    }
  }

  std::vector<double> quantities(const std::string& key, Dimension dim) const {
    std::vector<double> out;
    if (!has(key)) return out;
    const auto n = raw(key);
    if (!n.IsSequence()) fail(n, line_, field(key), "expected a list");
    for (std::size_t i = 0; i < n.size(); ++i)
      out.push_back(quantity_of(n[i], field(key) + "[" + std::to_string(i) + "]", dim));
    return out;
  }

  std::size_t count(const std::string& key, std::size_t fallback, std::size_t minimum) const {
    if (!has(key)) return fallback;
    const double v = quantity(key, Dimension::Scalar, 0.0);
    if (v < static_cast<double>(minimum) || v != std::floor(v) || v > 1e8)
      fail(raw(key), line_, field(key), "expected an integer >= " + std::to_string(minimum));
    return static_cast<std::size_t>(v);
  }

  std::uint64_t seed(const std::string& key) const {
    if (!has(key)) fail(node_, line_, field(key), "a seed is required for random elements");
    const std::string s = trim(text(key, ""));
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      fail(raw(key), line_, field(key), "seed must be a non-negative integer");
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      fail(raw(key), line_, field(key), "seed out of range");
    }
  }

  bool flag(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const auto v = lower(text(key, ""));
    if (v == "true" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "no" || v == "off") return false;
    fail(raw(key), line_, field(key), "expected true or false");
  }

  template <typename E>
  E choice(const std::string& key, const std::map<std::string, E>& options, E fallback,
           bool required = false) const {
    if (!has(key)) {
      if (required) fail(node_, line_, field(key), "missing required field");
      return fallback;
    }
    const auto v = lower(text(key, ""));
    const auto it = options.find(v);
    if (it == options.end()) {
      std::string names;
      for (const auto& [k, _] : options) names += (names.empty() ? "" : ", ") + k;
      fail(raw(key), line_, field(key), "'" + v + "' is not one of: " + names);
    }
    return it->second;
  }

  [[noreturn]] void error(const std::string& key, const std::string& msg) const {
    fail(has(key) ? raw(key) : node_, line_, field(key), msg);
  }

 private:
  YAML::Node node_;
  std::string path_;
  int line_ = 0;
};

ArraySpec parse_array(const Section& s) {
  s.allow({"elements", "carrier", "spacing", "pulse", "wave_speed", "element_gain"});
  ArraySpec a;
  a.elements = s.count("elements", a.elements, 1);
  a.carrier = s.quantity("carrier", Dimension::Frequency, a.carrier);
  if (s.has("spacing")) {
    try {
      a.spacing = parse_spacing(s.text("spacing", ""));
    } catch (const ValidationError& e) {
      s.error("spacing", e.what());
    }
  }
  a.pulse = s.quantity("pulse", Dimension::Time, a.pulse);
  a.wave_speed = s.quantity("wave_speed", Dimension::Speed, a.wave_speed);
  a.element_gain = s.quantity("element_gain", Dimension::Scalar, a.element_gain);
  if (!(a.carrier > 0)) s.error("carrier", "must be positive");
  if (!(a.pulse > 0)) s.error("pulse", "must be positive");
  if (!(a.wave_speed > 0)) s.error("wave_speed", "must be positive");
  if (!(a.spacing.value > 0)) s.error("spacing", "must be positive");
  return a;
}

PlanSpec parse_plan(const Section& s) {
  using K = PlanSpec::Kind;
  PlanSpec p;
  p.kind = s.choice<K>("type",
                       {{"uniform", K::Uniform}, {"tabulated", K::Tabulated},
                        {"coding", K::Coding}, {"time_modulated", K::TimeModulated}},
                       K::Uniform);
  switch (p.kind) {
    case K::Uniform:
      s.allow({"type", "offset"});
      p.offset = s.quantity("offset", Dimension::Frequency, 0.0);
      break;
    case K::Tabulated:
      s.allow({"type", "offsets"});
      p.offsets = s.quantities("offsets", Dimension::Frequency);
      if (p.offsets.empty()) s.error("offsets", "tabulated plan needs a non-empty offset list");
      break;
    case K::Coding: {
      s.allow({"type", "scheme", "scale", "seed", "code"});
      enum class C { Random, Costas, Log, Square };
      const C c = s.choice<C>("scheme",
                              {{"random", C::Random}, {"costas", C::Costas},
                               {"logarithmic", C::Log}, {"square", C::Square}},
                              C::Log, true);
      const double scale = s.quantity("scale", Dimension::Frequency, 0.0);
      if (c == C::Random) p.coding = RandomCoding{s.seed("seed"), scale};
      if (c == C::Log) p.coding = LogarithmicCoding{scale};
      if (c == C::Square) p.coding = SquareCoding{scale};
      if (c == C::Costas) {
        CostasCoding cc{{}, scale};
        for (double v : s.quantities("code", Dimension::Scalar)) {
          if (v != std::floor(v)) s.error("code", "Costas code entries must be integers");
          cc.code.push_back(static_cast<int>(v));
        }
        p.coding = cc;
      }
      break;
    }
    case K::TimeModulated:
      s.allow({"type", "form", "amplitude", "rate", "table", "span"});
      p.form = s.choice<ModulationForm>("form",
                                        {{"sqrt", ModulationForm::SquareRoot},
                                         {"cbrt", ModulationForm::CubeRoot},
                                         {"atan", ModulationForm::Arctangent},
                                         {"sinh", ModulationForm::HyperbolicSine},
                                         {"table", ModulationForm::Sampled}},
                                        ModulationForm::SquareRoot, true);
      p.amplitude = s.quantity("amplitude", Dimension::Frequency, 0.0);
      p.rate = s.quantity("rate", Dimension::Scalar, 1.0);
      p.table = s.quantities("table", Dimension::Scalar);
      p.table_span = s.quantity("span", Dimension::Time, 0.0);
      if (p.form == ModulationForm::Sampled && (p.table.empty() || !(p.table_span > 0)))
        s.error("table", "table form needs a non-empty table and a positive span");
      break;
  }
  return p;
}

WeightSpec parse_weights(const Section& s) {
  using K = WeightSpec::Kind;
  WeightSpec w;
  w.kind = s.choice<K>("type", {{"uniform", K::Uniform}, {"steered", K::Steered}, {"random", K::Random}},
                       K::Uniform);
  if (w.kind == K::Uniform) s.allow({"type"});
  if (w.kind == K::Steered) {
    s.allow({"type", "angle"});
    if (!s.has("angle")) s.error("angle", "steered weights need an angle");
    w.angle = s.quantity("angle", Dimension::Angle, 0.0);
    if (!(std::abs(w.angle) < kPi / 2)) s.error("angle", "must lie inside (-90, 90) deg");
  }
  if (w.kind == K::Random) {
    s.allow({"type", "seed"});
    w.seed = s.seed("seed");
  }
  return w;
}

WaveformSpec parse_waveforms(const Section& s) {
  using K = WaveformSpec::Kind;
  WaveformSpec w;
  w.kind = s.choice<K>("type",
                       {{"rect", K::Rect}, {"chirp_bank", K::ChirpBank}, {"identical_chirp", K::IdenticalChirp}},
                       K::Rect);
  s.allow({"type", "bandwidth", "base_rate", "rate_step"});
  w.bandwidth = s.quantity("bandwidth", Dimension::Frequency, 0.0);
  w.base_rate = s.quantity("base_rate", Dimension::Scalar, w.base_rate);
  w.rate_step = s.quantity("rate_step", Dimension::Scalar, w.rate_step);
  return w;
}

std::vector<ScheduleSegment> parse_segments(const Section& s) {
  std::vector<ScheduleSegment> out;
  const auto n = s.raw("segments");
  if (!n.IsDefined() || !n.IsSequence() || n.size() == 0)
    s.error("segments", "schedule needs a non-empty segment list");
  for (std::size_t i = 0; i < n.size(); ++i) {
    Section seg(n[i], s.field("segments") + "[" + std::to_string(i) + "]", s.line());
    seg.allow({"start", "end", "from", "to", "hold"});
    for (const char* k : {"start", "end"})
      if (!seg.has(k)) seg.error(k, "missing required field");
    ScheduleSegment g;
    g.t_begin = seg.quantity("start", Dimension::Time, 0.0);
    g.t_end = seg.quantity("end", Dimension::Time, 0.0);
    if (seg.has("hold")) {
      g.angle_begin = g.angle_end = seg.quantity("hold", Dimension::Angle, 0.0);
    } else {
      for (const char* k : {"from", "to"})
        if (!seg.has(k)) seg.error(k, "sweep segments need 'from' and 'to' (or 'hold')");
      g.angle_begin = seg.quantity("from", Dimension::Angle, 0.0);
      g.angle_end = seg.quantity("to", Dimension::Angle, 0.0);
    }
    out.push_back(g);
  }
  return out;
}

Evaluation parse_evaluation(const Section& s) {
  using K = EvaluationKind;
  Evaluation e;
  e.line = s.line();
  e.kind = s.choice<K>("kind",
                       {{"fitb_grid", K::FitbGrid}, {"legacy_grid", K::LegacyGrid},
                        {"zero_time_cut", K::ZeroTimeCut}, {"fgtb_curve", K::FgtbCurve},
                        {"mimo_compare", K::MimoCompare}, {"scan_report", K::ScanReport},
                        {"schedule", K::Schedule}},
                       K::FitbGrid, true);
  e.label = s.text("label", "");
  switch (e.kind) {
    case K::FitbGrid:
      s.allow({"kind", "label", "time_samples", "angle_samples", "engine"});
      e.engine = s.choice<Engine>("engine", {{"exact", Engine::Exact}, {"closed_form", Engine::ClosedForm}},
                                  Engine::Exact);
      break;
    case K::LegacyGrid:
      s.allow({"kind", "label", "time_samples", "angle_samples", "ranges", "absolute_time", "start_time"});
      e.ranges = s.quantities("ranges", Dimension::Length);
      if (e.ranges.empty()) s.error("ranges", "legacy grid needs at least one range");
      e.absolute_time = s.flag("absolute_time", true);
      e.start_time = s.quantity("start_time", Dimension::Time, 0.0);
      break;
    case K::ZeroTimeCut:
      s.allow({"kind", "label", "angle_samples", "spacings"});
      if (s.has("spacings")) {
        const auto n = s.raw("spacings");
        if (!n.IsSequence()) s.error("spacings", "expected a list");
        for (std::size_t i = 0; i < n.size(); ++i) {
          try {
            e.spacings.push_back(parse_spacing(n[i].Scalar()));
          } catch (const ValidationError& err) {
            fail(n[i], s.line(), s.field("spacings"), err.what());
          }
        }
      }
      break;
    case K::FgtbCurve:
    case K::MimoCompare:
      s.allow({"kind", "label", "angle_samples", "offsets", "quadrature", "tolerance"});
      e.offsets = s.quantities("offsets", Dimension::Frequency);
      if (e.offsets.empty()) s.error("offsets", "needs at least one frequency offset");
      e.quadrature = s.count("quadrature", 0, 0);
      e.tolerance = s.quantity("tolerance", Dimension::Scalar, e.tolerance);
      break;
    case K::ScanReport:
      s.allow({"kind", "label", "times"});
      e.times = s.quantities("times", Dimension::Time);
      if (e.times.empty()) e.times.push_back(0.0);
      break;
    case K::Schedule:
      s.allow({"kind", "label", "time_samples", "angle_samples", "segments"});
      e.segments = parse_segments(s);
      break;
  }
  e.time_samples = s.count("time_samples", e.time_samples, 2);
  e.angle_samples = s.count("angle_samples", e.angle_samples, 3);
  return e;
}

OutputSpec parse_outputs(const Section& s, const std::string& name) {
  s.allow({"directory", "formats", "csv_scale"});
  OutputSpec o;
  o.directory = s.text("directory", "out/" + name);
  if (s.has("formats")) {
    const auto n = s.raw("formats");
    if (!n.IsSequence()) s.error("formats", "expected a list");
    o.csv = o.binary = false;
    for (std::size_t i = 0; i < n.size(); ++i) {
      const auto f = lower(n[i].Scalar());
      if (f == "csv") o.csv = true;
      else if (f == "bin") o.binary = true;
      else fail(n[i], s.line(), s.field("formats"), "'" + f + "' is not one of: csv, bin");
    }
  }
  o.csv_scale = s.choice<Normalization>("csv_scale",
                                        {{"db", Normalization::DbRelPeak},
                                         {"linear", Normalization::LinearMagnitude}},
                                        Normalization::DbRelPeak);
  return o;
}

}  // namespace

double parse_quantity(const std::string& text, Dimension dim) {
  auto [v, unit] = split_number(text);
  const auto& table = unit_table(dim);
  const auto it = table.find(lower(unit));
  if (it == table.end()) throw ValidationError("unknown unit '" + unit + "' in '" + text + "'");
  return v * it->second;
}

SpacingSpec parse_spacing(const std::string& text) {
  auto [v, unit] = split_number(text);
  const auto u = lower(unit);
  SpacingSpec s;
  s.value = v;
  if (u == "lambda0") s.kind = SpacingSpec::Kind::Lambda0;
  else if (u == "lambdac") s.kind = SpacingSpec::Kind::LambdaC;
  else {
    s.kind = SpacingSpec::Kind::Meters;
    s.value = parse_quantity(text, Dimension::Length);
  }
  if (!(s.value > 0)) throw ValidationError("spacing must be positive");
  return s;
}

Scenario parse_scenario(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ParseError("line " + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  if (!root.IsDefined() || root.IsNull()) throw ParseError("line 1: scenario file is empty");
  if (!root.IsMap()) throw ParseError("line 1: scenario must be a mapping of sections");

  Section top(root, "", 1);
  top.allow({"name", "description", "array", "plan", "weights", "waveforms", "evaluations", "outputs"});
  Scenario sc;
  sc.name = top.text("name", "");
  if (sc.name.empty()) top.error("name", "missing required field");
  if (sc.name.find_first_of("/\\") != std::string::npos) top.error("name", "must not contain path separators");
  sc.array = parse_array(Section(top.raw("array"), "array", top.line()));
  sc.plan = parse_plan(Section(top.raw("plan"), "plan", top.line()));
  sc.weights = parse_weights(Section(top.raw("weights"), "weights", top.line()));
  sc.waveforms = parse_waveforms(Section(top.raw("waveforms"), "waveforms", top.line()));

  const auto evals = top.raw("evaluations");
  if (!evals.IsDefined() || !evals.IsSequence() || evals.size() == 0)
    top.error("evaluations", "needs a non-empty list of evaluations");
  for (std::size_t i = 0; i < evals.size(); ++i)
    sc.evaluations.push_back(
        parse_evaluation(Section(evals[i], "evaluations[" + std::to_string(i) + "]", top.line())));

  sc.outputs = parse_outputs(Section(top.raw("outputs"), "outputs", top.line()), sc.name);

  // Semantic checks that need the whole document.
  resolve(sc);
  for (const auto& e : sc.evaluations) {
    const bool needs_uniform = e.kind == EvaluationKind::ScanReport || e.kind == EvaluationKind::Schedule ||
                               e.kind == EvaluationKind::LegacyGrid ||
                               e.kind == EvaluationKind::ZeroTimeCut ||
                               (e.kind == EvaluationKind::FitbGrid && e.engine == Engine::ClosedForm);
    if (needs_uniform && sc.plan.kind != PlanSpec::Kind::Uniform)
      throw ValidationError("line " + std::to_string(e.line) +
                            ": field 'plan.type': this evaluation needs a uniform plan");
    if ((e.kind == EvaluationKind::FgtbCurve || e.kind == EvaluationKind::MimoCompare) &&
        sc.plan.kind == PlanSpec::Kind::TimeModulated)
      throw ValidationError("line " + std::to_string(e.line) +
                            ": field 'plan.type': integrated patterns need constant offsets");
    if (e.kind == EvaluationKind::Schedule) {
      try {
        const auto r = resolve(sc);
        design_phase_schedule(r.config, sc.plan.offset, e.segments, e.time_samples);
      } catch (const ValidationError& err) {
        throw ValidationError("line " + std::to_string(e.line) + ": field 'segments': " + err.what());
      }
    }
  }
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

ArrayConfig resolve_array(const ArraySpec& spec, double df) {
  double d = spec.spacing.value;
  if (spec.spacing.kind == SpacingSpec::Kind::LambdaC) d *= spec.wave_speed / spec.carrier;
  if (spec.spacing.kind == SpacingSpec::Kind::Lambda0)
    d *= spec.wave_speed / (spec.carrier + static_cast<double>(spec.elements - 1) * df);
  return ArrayConfig(spec.elements, spec.carrier, d, spec.pulse, spec.wave_speed, spec.element_gain);
}

ResolvedScenario resolve(const Scenario& sc) {
  using PK = PlanSpec::Kind;
  try {
    const std::size_t M = sc.array.elements;
    if (sc.array.spacing.kind == SpacingSpec::Kind::Lambda0 && sc.plan.kind != PK::Uniform)
      throw ValidationError("field 'array.spacing': lambda0 spacing needs a uniform plan; use lambdac or meters");

    FrequencyPlan plan = FrequencyPlan::uniform(0.0);
    switch (sc.plan.kind) {
      case PK::Uniform: plan = FrequencyPlan::uniform(sc.plan.offset); break;
      case PK::Tabulated: plan = FrequencyPlan::tabulated(sc.plan.offsets); break;
      case PK::Coding: plan = FrequencyPlan::tabulated(generate_offsets(sc.plan.coding, M)); break;
      case PK::TimeModulated:
        if (sc.plan.form == ModulationForm::Sampled) {
          std::vector<ModulationFunction> chi(M);
          for (std::size_t m = 0; m < M; ++m)
            chi[m] = {ModulationForm::Sampled, static_cast<double>(m) * sc.plan.amplitude, 1.0,
                      sc.plan.table, sc.plan.table_span};
          plan = FrequencyPlan::time_modulated(std::move(chi));
        } else {
          plan = FrequencyPlan::time_modulated(M, sc.plan.form, sc.plan.amplitude, sc.plan.rate);
        }
        break;
    }
    plan.check_compatible(M);

    const ArrayConfig config = resolve_array(sc.array, plan.is_uniform() ? plan.uniform_step() : 0.0);

    WeightVector w = WeightVector::uniform(M);
    if (sc.weights.kind == WeightSpec::Kind::Steered) {
      if (!plan.is_uniform()) throw ValidationError("field 'weights': steered weights need a uniform plan");
      w = steered_weights(config, plan, sc.weights.angle);
    }
    if (sc.weights.kind == WeightSpec::Kind::Random) {
      w = random_phase_weights(M, sc.weights.seed);
    }

    std::vector<BasebandWaveform> waves;
    switch (sc.waveforms.kind) {
      case WaveformSpec::Kind::Rect:
        waves.push_back(BasebandWaveform::rect(config.pulse_duration(), sc.waveforms.bandwidth));
        break;
      case WaveformSpec::Kind::ChirpBank:
        waves = make_chirp_bank(config, sc.waveforms.base_rate, sc.waveforms.rate_step);
        break;
      case WaveformSpec::Kind::IdenticalChirp:
        waves = make_chirp_bank(config, sc.waveforms.base_rate, 0.0);
        break;
    }
    return {config, std::move(plan), std::move(w), std::move(waves)};
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(e.what());
  }
}

}  // namespace fdabeam
