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

#include "fdabeam/scan_analytics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "fdabeam/errors.hpp"

namespace fdabeam {

namespace {

constexpr double kEndfireGuard = 1e-6;
constexpr double kRadToDeg = 180.0 / kPi;

// c / ((f_c + df) d): sine-space period of the grating lobes.
double sine_period(const ArrayConfig& config, double df) {
  return config.wave_speed() / ((config.carrier() + df) * config.spacing());
}

void check_sector(double theta) {
  if (!(std::abs(theta) < kPi / 2 - kEndfireGuard))
    throw OutOfSectorError("angle too close to endfire for a finite scan rate");
}

}  // namespace

std::optional<double> predict_peak_direction(const ArrayConfig& config, double df,
                                             double retarded_time, int k) {
  const double arg = (static_cast<double>(k) - df * retarded_time) * sine_period(config, df);
  if (arg < -1.0 || arg > 1.0) return std::nullopt;
  return std::asin(arg);
}

int visible_grating_index(double df, double retarded_time) {
  return static_cast<int>(std::lround(df * retarded_time));
}

double scan_speed(const ArrayConfig& config, double df, double theta) {
  check_sector(theta);
  return -config.wave_speed() * df /
         ((config.carrier() + df) * config.spacing() * std::cos(theta));
}

Beamwidth beamwidth(const ArrayConfig& config, double df, double theta_peak) {
  check_sector(theta_peak);
  const double sine = sine_period(config, df) / static_cast<double>(config.num_elements());
  return {sine, sine / std::cos(theta_peak)};
}

ScanVolume scan_volume(const ArrayConfig& config, double df) {
  return {std::abs(df) * config.pulse_duration() * sine_period(config, df),
          2.0 * std::abs(df) * config.pulse_duration()};
}

double first_null(const ArrayConfig& config, double df) {
  const double arg = sine_period(config, df) / static_cast<double>(config.num_elements());
  if (arg > 1.0) return std::numeric_limits<double>::quiet_NaN();
  return std::asin(arg);
}

std::vector<double> zero_time_peaks(const ArrayConfig& config, double df) {
  const double p = sine_period(config, df);
  std::vector<double> peaks;
  const int kmax = static_cast<int>(std::floor(1.0 / p));
  for (int k = -kmax; k <= kmax; ++k) {
    const double arg = static_cast<double>(k) * p;
    if (arg >= -1.0 && arg <= 1.0) peaks.push_back(std::asin(arg));
  }
  return peaks;
}

ScanReport scan_report(const ArrayConfig& config, double df, double report_time) {
  ScanReport r;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  r.report_time = report_time;
  r.grating_index = visible_grating_index(df, report_time);
  const auto peak = predict_peak_direction(config, df, report_time, r.grating_index);
  r.peak_direction_pred = peak.value_or(nan);
  const double at = peak.value_or(0.0);
  const bool finite_speed = peak && std::abs(at) < kPi / 2 - kEndfireGuard;
  r.scan_speed = finite_speed ? scan_speed(config, df, at) : nan;
  const auto bw = beamwidth(config, df, finite_speed ? at : 0.0);
  r.beamwidth_sine = bw.sine_units;
  r.azimuth_resolution = finite_speed ? bw.azimuth : nan;
  const auto vol = scan_volume(config, df);
  r.scan_volume = vol.exact;
  r.scan_volume_approx = vol.approx;
  r.first_null = first_null(config, df);
  r.zero_time_peaks = zero_time_peaks(config, df);
  return r;
}

std::string format_scan_report(const ScanReport& r) {
  std::ostringstream os;
  os << std::setprecision(12);
  os << "report_time_us = " << r.report_time * 1e6 << '\n';
  os << "grating_index = " << r.grating_index << '\n';
  os << "peak_direction_deg = " << r.peak_direction_pred * kRadToDeg << '\n';
  os << "scan_speed_deg_per_us = " << r.scan_speed * kRadToDeg * 1e-6 << '\n';
  os << "beamwidth_sine = " << r.beamwidth_sine << '\n';
  os << "azimuth_resolution_deg = " << r.azimuth_resolution * kRadToDeg << '\n';
  os << "scan_volume_sine = " << r.scan_volume << '\n';
  os << "scan_volume_approx_sine = " << r.scan_volume_approx << '\n';
  os << "first_null_deg = " << r.first_null * kRadToDeg << '\n';
  os << "zero_time_peaks_deg =";
  for (double p : r.zero_time_peaks) os << ' ' << p * kRadToDeg;
  os << '\n';
  return os.str();
}

std::vector<TrajectoryPoint> measure_peak_trajectory(const BeampatternGrid& grid) {
  if (grid.normalization != Normalization::LinearMagnitude)
    throw ContractError("trajectory extraction needs a linear-magnitude grid");
  const std::size_t n = grid.num_angles();
  std::vector<double> sines(n);
  for (std::size_t j = 0; j < n; ++j) sines[j] = std::sin(grid.theta_axis[j]);

  std::vector<TrajectoryPoint> out(grid.num_times());
  for (std::size_t i = 0; i < grid.num_times(); ++i) {
    const auto row = grid.row(i);
    const auto it = std::max_element(row.begin(), row.end());
    const auto j = static_cast<std::size_t>(it - row.begin());
    TrajectoryPoint p;
    p.retarded_time = grid.t_axis[i];
    p.peak_value = *it;
    double x = sines[j];
    if (j > 0 && j + 1 < n) {
      const double x0 = sines[j - 1], x1 = sines[j], x2 = sines[j + 1];
      const double y0 = row[j - 1], y1 = row[j], y2 = row[j + 1];
      const double den = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
      if (den != 0.0) {
        const double num = (x1 - x0) * (x1 - x0) * (y1 - y2) - (x1 - x2) * (x1 - x2) * (y1 - y0);
        x = std::clamp(x1 - 0.5 * num / den, x0, x2);
      }
    }
    p.sine = x;
    p.theta = std::asin(std::clamp(x, -1.0, 1.0));
    p.ambiguous = !(p.peak_value > 0.0) || p.peak_value < 0.5 * grid.full_gain;
    out[i] = p;
  }
  return out;
}

double sine_coverage(std::span<const TrajectoryPoint> trajectory) {
  double total = 0.0;
  const TrajectoryPoint* prev = nullptr;
  for (const auto& p : trajectory) {
    if (p.ambiguous) continue;
    if (prev) {
      double d = p.sine - prev->sine;
      if (std::abs(d) > 1.0) d -= std::copysign(2.0, d);
      total += std::abs(d);
    }
    prev = &p;
  }
  return total;
}

double angular_coverage(std::span<const TrajectoryPoint> trajectory, double t_begin, double t_end) {
  std::vector<TrajectoryPoint> pts;
  for (const auto& p : trajectory)
    if (!p.ambiguous) pts.push_back(p);
  if (pts.size() < 2 || !(t_end > t_begin)) return 0.0;

  auto interp = [&](double t) {
    if (t <= pts.front().retarded_time) return pts.front();
    if (t >= pts.back().retarded_time) return pts.back();
    auto hi = std::lower_bound(pts.begin(), pts.end(), t, [](const TrajectoryPoint& p, double v) {
      return p.retarded_time < v;
    });
    auto lo = hi - 1;
    if (std::abs(hi->sine - lo->sine) > 1.0) return *lo;
    const double f = (t - lo->retarded_time) / (hi->retarded_time - lo->retarded_time);
    TrajectoryPoint q = *lo;
    q.retarded_time = t;
    q.theta = lo->theta + f * (hi->theta - lo->theta);
    q.sine = std::sin(q.theta);
    return q;
  };

  std::vector<TrajectoryPoint> window{interp(t_begin)};
  for (const auto& p : pts)
    if (p.retarded_time > t_begin && p.retarded_time < t_end) window.push_back(p);
  window.push_back(interp(t_end));

  double total = 0.0;
  for (std::size_t i = 1; i < window.size(); ++i) {
    if (std::abs(window[i].sine - window[i - 1].sine) > 1.0) continue;
    total += std::abs(window[i].theta - window[i - 1].theta);
  }
  return total;
}

std::optional<double> measure_lobe_width(std::span<const double> row,
                                         std::span<const double> theta_axis, double drop_db) {
  if (row.size() != theta_axis.size() || row.size() < 3)
    throw ContractError("row and angle axis must match");
  const auto j = static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin());
  const double level = row[j] * std::pow(10.0, -drop_db / 20.0);

  auto crossing = [&](std::size_t inside, std::size_t outside) {
    const double s_in = std::sin(theta_axis[inside]), s_out = std::sin(theta_axis[outside]);
    const double f = (row[inside] - level) / (row[inside] - row[outside]);
    return s_in + f * (s_out - s_in);
  };

  std::size_t l = j;
  while (l > 0 && row[l - 1] >= level) --l;
  if (l == 0) return std::nullopt;
  std::size_t r = j;
  while (r + 1 < row.size() && row[r + 1] >= level) ++r;
  if (r + 1 == row.size()) return std::nullopt;
  return crossing(r, r + 1) - crossing(l, l - 1);
}

PhaseSchedule design_phase_schedule(const ArrayConfig& config, double df,
                                    std::vector<ScheduleSegment> segments, std::size_t n_t) {
  if (segments.empty()) throw ValidationError("schedule needs at least one segment");
  const double tp = config.pulse_duration();
  const double slack = 1e-12 * tp;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    const std::string where = "segment " + std::to_string(i) + ": ";
    if (!(s.t_end > s.t_begin)) throw ValidationError(where + "end time must exceed start time");
    if (s.t_begin < -slack || s.t_end > tp + slack)
      throw ValidationError(where + "time interval must lie inside the pulse");
    if (!(std::abs(s.angle_begin) < kPi / 2) || !(std::abs(s.angle_end) < kPi / 2))
      throw ValidationError(where + "angles must lie inside (-90, 90) deg");
    if (i > 0) {
      const auto& p = segments[i - 1];
      if (s.t_begin < p.t_begin) throw ValidationError(where + "segments must be time-ordered");
      if (s.t_begin < p.t_end - slack) throw ValidationError(where + "overlaps the previous segment");
    }
  }

  PhaseSchedule out;
  out.df = df;
  out.t_axis = time_axis(tp, n_t);
  out.phase_cycles.resize(n_t);
  out.target_angle.resize(n_t);
  const double k = config.carrier() / config.wave_speed() * config.spacing();
  for (std::size_t i = 0; i < n_t; ++i) {
    const double t = out.t_axis[i];
    double target = segments.front().angle_begin;
    for (const auto& s : segments) {
      if (t < s.t_begin) break;
      if (t <= s.t_end) {
        const double slope = (s.angle_end - s.angle_begin) / (s.t_end - s.t_begin);
        target = s.angle_begin + slope * (t - s.t_begin);
        break;
      }
      target = s.angle_end;
    }
    out.target_angle[i] = target;
    out.phase_cycles[i] = -df * t - k * std::sin(target);
  }
  out.segments = std::move(segments);
  return out;
}

WeightVector schedule_weights(const PhaseSchedule& schedule, std::size_t row,
                              std::size_t num_elements) {
  const double phi = schedule.phase_cycles.at(row);
  CVector w(num_elements);
  for (std::size_t m = 0; m < num_elements; ++m)
    w[m] = std::polar(1.0, -kTwoPi * static_cast<double>(m) * phi);
  return WeightVector::custom(std::move(w));
}

BeampatternGrid play_schedule(const ArrayConfig& config, const PhaseSchedule& schedule,
                              std::span<const BasebandWaveform> waveforms, std::size_t n_theta) {
  const std::size_t n_t = schedule.t_axis.size();
  const double tp = config.pulse_duration();
  const std::size_t M = config.num_elements();
  auto weights = [&](double t) {
    const auto row = static_cast<std::size_t>(std::lround(t / tp * static_cast<double>(n_t - 1)));
    return schedule_weights(schedule, std::min(row, n_t - 1), M);
  };
  return sweep_grid_time_variant(config, FrequencyPlan::uniform(schedule.df), weights, waveforms,
                                 n_t, n_theta);
}

}  // namespace fdabeam
