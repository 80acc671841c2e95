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

#include "fdabeam/runner.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "fdabeam/beampattern_integral.hpp"
#include "fdabeam/export.hpp"
#include "fdabeam/parallel.hpp"

namespace fdabeam {

namespace {

constexpr double kDeg = 180.0 / kPi;

std::string num(double v, int digits = 10) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string freq_tag(double hz) {
  const double a = std::abs(hz);
  if (a >= 1e6 && std::fmod(a, 1e6) == 0.0) return num(hz / 1e6) + "MHz";
  if (a >= 1e3 && std::fmod(a, 1e3) == 0.0) return num(hz / 1e3) + "kHz";
  return num(hz) + "Hz";
}

std::string range_tag(double m) {
  if (std::fmod(m, 1e3) == 0.0) return "r" + num(m / 1e3) + "km";
  return "r" + num(m) + "m";
}

std::string spacing_tag(const SpacingSpec& s) {
  std::string v = num(s.value);
  std::replace(v.begin(), v.end(), '.', 'p');
  switch (s.kind) {
    case SpacingSpec::Kind::Lambda0: return v + "lambda0";
    case SpacingSpec::Kind::LambdaC: return v + "lambdac";
    case SpacingSpec::Kind::Meters: return v + "m";
  }
  return v;
}

std::size_t argmax(std::span<const double> v) {
  return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

double envelope_gain(const ArrayConfig& config, const WeightVector& w,
                     std::span<const BasebandWaveform> waveforms) {
  double amp = 0.0;
  for (const auto& s : waveforms) amp = std::max(amp, s.amplitude);
  double sum = 0.0;
  for (const auto& x : w.weights) sum += std::abs(x);
  return sum * amp * config.element_gain();
}

// Collects artifact bytes so that everything lands on disk only after all
// evaluations succeed.
class Artifacts {
 public:
  std::ostringstream& open(const std::string& name, int line) {
    if (files_.count(name))
      throw ValidationError("line " + std::to_string(line) + ": field 'label': artifact '" + name +
                            "' is produced twice; give the evaluations distinct labels");
    order_.push_back(name);
    return files_[name];
  }

  std::vector<std::string> flush(const std::filesystem::path& dir) const {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir))
      throw ValidationError("field 'outputs.directory': cannot create '" + dir.string() + "'");
    std::vector<std::string> names(order_.begin(), order_.end());
    std::sort(names.begin(), names.end());
    std::string manifest;
    for (const auto& name : names) {
      const std::string bytes = files_.at(name).str();
      write(dir / name, bytes);
      manifest += sha256_hex(bytes) + "  " + name + "\n";
    }
    write(dir / "manifest.txt", manifest);
    names.push_back("manifest.txt");
    return names;
  }

 private:
  static void write(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw ValidationError("field 'outputs.directory': cannot write '" + path.string() + "'");
  }

  std::map<std::string, std::ostringstream> files_;
  std::vector<std::string> order_;
};

struct Context {
  const Scenario& scenario;
  const ResolvedScenario& r;
  Artifacts& out;
};

std::string stem_of(const Evaluation& e, const char* fallback) {
  return e.label.empty() ? fallback : e.label;
}

void write_grid(Context& ctx, const Evaluation& e, const std::string& stem, const BeampatternGrid& grid) {
  const auto& o = ctx.scenario.outputs;
  const BeampatternGrid scaled = o.csv_scale == Normalization::DbRelPeak ? to_db(grid) : grid;
  if (o.csv) write_grid_csv(scaled, ctx.out.open(stem + ".csv", e.line));
  if (o.binary) write_grid_binary(scaled, ctx.out.open(stem + ".bin", e.line));
}

void run_fitb(Context& ctx, const Evaluation& e) {
  const auto& r = ctx.r;
  const std::string stem = stem_of(e, "fitb");
  const auto grid = sweep_grid(r.config, r.plan, r.weights, r.waveforms, e.time_samples, e.angle_samples, e.engine);
  write_grid(ctx, e, stem, grid);

  const auto traj = measure_peak_trajectory(grid);
  write_trajectory_csv(traj, ctx.out.open(stem + "_trajectory.csv", e.line));

  const auto mean = time_averaged_pattern(grid);
  const auto mean_db = magnitude_db_rel_peak(mean);
  write_curve_csv(grid.theta_axis, mean_db, ctx.out.open(stem + "_average.csv", e.line));

  auto& s = ctx.out.open(stem + "_summary.txt", e.line);
  std::size_t ambiguous = 0;
  for (const auto& p : traj) ambiguous += p.ambiguous ? 1 : 0;
  s << "time_samples = " << grid.num_times() << "\n"
    << "angle_samples = " << grid.num_angles() << "\n"
    << "peak_at_t0_deg = " << num(grid.theta_axis[argmax(grid.row(0))] * kDeg) << "\n"
    << "average_peak_deg = " << num(grid.theta_axis[argmax(mean)] * kDeg) << "\n"
    << "ambiguous_rows = " << ambiguous << "\n"
    << "sine_coverage = " << num(sine_coverage(traj)) << "\n";
  if (r.plan.is_uniform()) {
    const auto vol = scan_volume(r.config, r.plan.uniform_step());
    s << "scan_volume_pred = " << num(vol.exact) << "\n";
  }
}

void run_legacy(Context& ctx, const Evaluation& e) {
  const auto& r = ctx.r;
  const std::string stem = stem_of(e, "legacy");
  const double df = r.plan.uniform_step();
  const double c = r.config.wave_speed();
  const auto t_ret = time_axis(r.config.pulse_duration(), e.time_samples);
  const auto thetas = angle_axis(e.angle_samples);
  const double gain = envelope_gain(r.config, r.weights, r.waveforms);

  std::vector<BeampatternGrid> fitb, legacy;
  for (double range : e.ranges) {
    // FITB keyed by retarded time, with the range carried on every sample.
    BeampatternGrid g;
    g.t_axis = t_ret;
    g.theta_axis = thetas;
    g.values.assign(t_ret.size() * thetas.size(), 0.0);
    g.full_gain = gain;
    parallel_for(t_ret.size(), [&](std::size_t i) {
      for (std::size_t j = 0; j < thetas.size(); ++j)
        g.at(i, j) = std::abs(field_exact(r.config, r.plan, r.weights, r.waveforms,
                                          EvalPoint::at_range(t_ret[i], thetas[j], range)));
    });
    write_grid(ctx, e, stem + "_fitb_" + range_tag(range), g);
    fitb.push_back(std::move(g));

    std::vector<double> t_abs(t_ret.size());
    for (std::size_t i = 0; i < t_ret.size(); ++i)
      t_abs[i] = e.absolute_time ? e.start_time + t_ret[i] : t_ret[i] + range / c;
    auto lg = legacy_grid(r.config, df, range, t_abs, e.angle_samples);
    write_grid(ctx, e, stem + "_" + range_tag(range), lg);
    legacy.push_back(std::move(lg));
  }

  auto& s = ctx.out.open(stem + "_summary.txt", e.line);
  const double bw = beamwidth(r.config, df, 0.0).azimuth;
  s << "df_hz = " << num(df) << "\n"
    << "time_reference = " << (e.absolute_time ? "absolute" : "retarded") << "\n"
    << "beamwidth_deg = " << num(bw * kDeg) << "\n";
  const auto ref_traj = measure_peak_trajectory(legacy.front());
  for (std::size_t k = 1; k < e.ranges.size(); ++k) {
    const bool identical = fitb[k].values == fitb.front().values;
    const auto traj = measure_peak_trajectory(legacy[k]);
    double lo = 1e300, hi = 0.0, sum = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
      if (traj[i].ambiguous || ref_traj[i].ambiguous) continue;
      const double shift = std::abs(traj[i].theta - ref_traj[i].theta);
      lo = std::min(lo, shift);
      hi = std::max(hi, shift);
      sum += shift;
      ++n;
    }
    const std::string pair = range_tag(e.ranges.front()) + "_" + range_tag(e.ranges[k]);
    s << "fitb_identical_" << pair << " = " << (identical ? "yes" : "no") << "\n"
      << "legacy_matched_rows_" << pair << " = " << n << "\n";
    if (n > 0)
      s << "legacy_shift_min_deg_" << pair << " = " << num(lo * kDeg) << "\n"
        << "legacy_shift_mean_deg_" << pair << " = " << num(sum / static_cast<double>(n) * kDeg) << "\n"
        << "legacy_shift_max_deg_" << pair << " = " << num(hi * kDeg) << "\n";
  }
}

void run_zero_cut(Context& ctx, const Evaluation& e) {
  const auto& sc = ctx.scenario;
  const std::string stem = stem_of(e, "zero_cut");
  const double df = ctx.r.plan.uniform_step();
  std::vector<SpacingSpec> spacings = e.spacings;
  if (spacings.empty()) spacings.push_back(sc.array.spacing);
  const auto thetas = angle_axis(e.angle_samples);

  auto& s = ctx.out.open(stem + "_summary.txt", e.line);
  for (const auto& sp : spacings) {
    ArraySpec spec = sc.array;
    spec.spacing = sp;
    const ArrayConfig config = resolve_array(spec, df);
    std::vector<double> v(thetas.size());
    for (std::size_t j = 0; j < thetas.size(); ++j) v[j] = zero_time_cut(config, df, thetas[j]);
    const auto db = magnitude_db_rel_peak(v);
    const std::string tag = spacing_tag(sp);
    auto& csv = ctx.out.open(stem + "_" + tag + ".csv", e.line);
    csv << "theta_deg,magnitude,magnitude_dB\n";
    for (std::size_t j = 0; j < thetas.size(); ++j)
      csv << num(thetas[j] * kDeg) << ',' << num(v[j]) << ',' << num(db[j]) << '\n';

    const std::size_t p = argmax(v);
    std::size_t null_idx = p;
    while (null_idx + 1 < v.size() && v[null_idx + 1] < v[null_idx]) ++null_idx;
    double outer = 0.0;
    for (std::size_t j = 0; j < thetas.size(); ++j)
      if (std::abs(thetas[j]) > kPi / 3) outer = std::max(outer, v[j]);
    s << "[" << tag << "]\n"
      << "spacing_m = " << num(config.spacing()) << "\n"
      << "peak = " << num(v[p]) << "\n"
      << "peak_deg = " << num(thetas[p] * kDeg) << "\n"
      << "first_null_pred_deg = " << num(first_null(config, df) * kDeg) << "\n"
      << "first_null_grid_deg = " << num(thetas[null_idx] * kDeg) << "\n"
      << "max_beyond_60deg = " << num(outer) << "\n";
  }
}

void run_fgtb(Context& ctx, const Evaluation& e) {
  const auto& r = ctx.r;
  const std::string stem = stem_of(e, "fgtb");
  const auto thetas = angle_axis(e.angle_samples);
  const double bs = max_bandwidth(r.waveforms);
  const auto bounds = equivalence_fo_bounds(r.config, bs);

  auto& s = ctx.out.open(stem + "_summary.txt", e.line);
  s << "waveform_bandwidth_hz = " << num(bs) << "\n"
    << "equivalence_lower_hz = " << num(bounds.lower) << "\n"
    << "equivalence_upper_hz = " << num(bounds.upper) << "\n";
  for (double df : e.offsets) {
    const auto plan = FrequencyPlan::uniform(df);
    const auto R = covariance(r.config, r.waveforms, plan, CovarianceFlavor::FDA, e.quadrature);
    const auto curve = fgtb_curve(R, r.config, plan, r.weights, thetas);
    const std::string tag = freq_tag(df);
    write_curve_csv(thetas, power_db(curve), ctx.out.open(stem + "_df" + tag + ".csv", e.line));
    write_covariance_csv(R, ctx.out.open(stem + "_covariance_df" + tag + ".csv", e.line));
    const double hi = *std::max_element(curve.begin(), curve.end());
    const double lo = *std::min_element(curve.begin(), curve.end());
    s << "[df " << tag << "]\n"
      << "quadrature_points = " << R.quadrature_points << "\n"
      << "peak = " << num(hi) << "\n"
      << "peak_deg = " << num(thetas[argmax(curve)] * kDeg) << "\n"
      << "peak_to_mean_db = " << num(peak_to_mean_db(curve)) << "\n"
      << "max_to_min_db = " << num(lo > 0 ? 10.0 * std::log10(hi / lo) : INFINITY) << "\n"
      << "hermitian_error = " << num(R.max_hermitian_error(), 4) << "\n"
      << "min_eigenvalue = " << num(R.min_eigenvalue(), 4) << "\n"
      << "max_off_diagonal = " << num(R.max_off_diagonal(), 6) << "\n"
      << "covariance_valid = " << (R.is_valid() ? "yes" : "no") << "\n";
  }
}

void run_mimo(Context& ctx, const Evaluation& e) {
  const auto& r = ctx.r;
  const std::string stem = stem_of(e, "mimo_compare");
  const auto thetas = angle_axis(e.angle_samples);
  auto& s = ctx.out.open(stem + ".txt", e.line);
  s << "tolerance = " << num(e.tolerance) << "\n";
  for (double df : e.offsets) {
    const auto plan = FrequencyPlan::uniform(df);
    const auto rep = compare_fgtb_mimo(r.config, plan, r.waveforms, r.weights, thetas, e.quadrature);
    const std::string tag = freq_tag(df);
    auto& csv = ctx.out.open(stem + "_df" + tag + ".csv", e.line);
    const auto f = power_db(rep.fgtb_normalized);
    const auto m = power_db(rep.mimo_normalized);
    csv << "theta_deg,fgtb_dB,mimo_dB\n";
    for (std::size_t j = 0; j < thetas.size(); ++j)
      csv << num(thetas[j] * kDeg) << ',' << num(f[j]) << ',' << num(m[j]) << '\n';
    const bool pass = rep.max_deviation < e.tolerance;
    s << "[df " << tag << "]\n"
      << "max_deviation = " << num(rep.max_deviation, 6) << "\n"
      << "fgtb_peak = " << num(rep.fgtb_peak) << "\n"
      << "mimo_peak = " << num(rep.mimo_peak) << "\n"
      << "quadrature_points = " << rep.quadrature_points << "\n"
      << "status = " << (pass ? "pass" : "documented-discrepancy") << "\n";
    if (!pass)
      s << "note = peak-normalized curves differ by " << num(rep.max_deviation, 6)
        << " which exceeds the tolerance; the measured value is reported as is\n";
  }
}

void run_scan(Context& ctx, const Evaluation& e) {
  const auto& r = ctx.r;
  auto& s = ctx.out.open(stem_of(e, "scan_report") + ".txt", e.line);
  bool first = true;
  for (double t : e.times) {
    if (!first) s << "\n";
    first = false;
    s << format_scan_report(scan_report(r.config, r.plan.uniform_step(), t));
  }
}

void run_schedule(Context& ctx, const Evaluation& e) {
  const auto& r = ctx.r;
  const std::string stem = stem_of(e, "schedule");
  const auto sched = design_phase_schedule(r.config, r.plan.uniform_step(), e.segments, e.time_samples);
  auto& csv = ctx.out.open(stem + "_phase.csv", e.line);
  csv << "t_us,phase_cycles,target_deg\n";
  for (std::size_t i = 0; i < sched.t_axis.size(); ++i)
    csv << num(sched.t_axis[i] * 1e6) << ',' << num(sched.phase_cycles[i], 15) << ','
        << num(sched.target_angle[i] * kDeg) << '\n';
  const auto grid = play_schedule(r.config, sched, r.waveforms, e.angle_samples);
  write_grid(ctx, e, stem + "_grid", grid);
  write_trajectory_csv(measure_peak_trajectory(grid), ctx.out.open(stem + "_trajectory.csv", e.line));
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xF];
  }
  return out;
}

RunSummary run_scenario(const Scenario& scenario, const RunOptions& options) {
  const ResolvedScenario r = resolve(scenario);
  Artifacts out;
  Context ctx{scenario, r, out};
  for (const auto& e : scenario.evaluations) {
    switch (e.kind) {
      case EvaluationKind::FitbGrid: run_fitb(ctx, e); break;
      case EvaluationKind::LegacyGrid: run_legacy(ctx, e); break;
      case EvaluationKind::ZeroTimeCut: run_zero_cut(ctx, e); break;
      case EvaluationKind::FgtbCurve: run_fgtb(ctx, e); break;
      case EvaluationKind::MimoCompare: run_mimo(ctx, e); break;
      case EvaluationKind::ScanReport: run_scan(ctx, e); break;
      case EvaluationKind::Schedule: run_schedule(ctx, e); break;
    }
  }
  RunSummary summary;
  summary.directory = options.output_dir.value_or(std::filesystem::path(scenario.outputs.directory));
  summary.artifacts = out.flush(summary.directory);
  return summary;
}

}  // namespace fdabeam
