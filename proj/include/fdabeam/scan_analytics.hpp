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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdabeam/array_model.hpp"
#include "fdabeam/beampattern_instant.hpp"

namespace fdabeam {

/// Closed-form auto-scan predictions for a uniform-offset array.
struct ScanReport {
  double report_time = 0.0;           // t' at which the peak is predicted, seconds
  int grating_index = 0;              // k of the visible branch at report_time
  double peak_direction_pred = 0.0;   // radians
  double scan_speed = 0.0;            // rad/s at peak_direction_pred
  double beamwidth_sine = 0.0;        // Theta, sine units
  double azimuth_resolution = 0.0;    // radians at peak_direction_pred
  double scan_volume = 0.0;           // sine units, exact form
  double scan_volume_approx = 0.0;    // 2 df T_p
  double first_null = 0.0;            // radians
  std::vector<double> zero_time_peaks;  // radians, visible sector
};

struct Beamwidth {
  double sine_units = 0.0;  // Theta
  double azimuth = 0.0;     // theta-bar, radians
};

struct ScanVolume {
  double exact = 0.0;
  double approx = 0.0;
};

/// Peak direction at t' for grating branch k; empty when off the visible sector.
std::optional<double> predict_peak_direction(const ArrayConfig& config, double df,
                                             double retarded_time, int k);

/// Branch k that keeps the asin argument smallest at t' (the visible branch).
int visible_grating_index(double df, double retarded_time);

/// d theta / d t' = -c df / ((f_c + df) d cos theta). Throws OutOfSectorError near endfire.
double scan_speed(const ArrayConfig& config, double df, double theta);

/// Theta = c / (M (f_c + df) d) and theta-bar = Theta / cos(theta_peak).
Beamwidth beamwidth(const ArrayConfig& config, double df, double theta_peak);

/// Total sine-space coverage over one pulse.
ScanVolume scan_volume(const ArrayConfig& config, double df);

/// First null of the zero-time cut, asin(c / (M (f_c + df) d)).
double first_null(const ArrayConfig& config, double df);

/// Zero-time mainlobe and grating-lobe directions inside the visible sector.
std::vector<double> zero_time_peaks(const ArrayConfig& config, double df);

ScanReport scan_report(const ArrayConfig& config, double df, double report_time = 0.0);

/// Flat "key = value" table, angles in degrees.
std::string format_scan_report(const ScanReport& report);

struct TrajectoryPoint {
  double retarded_time = 0.0;
  double theta = 0.0;       // radians
  double sine = 0.0;        // interpolated sin(theta) of the peak
  double peak_value = 0.0;
  bool ambiguous = false;   // row max below half the grid's full gain
};

/// Per-row peak with 3-point parabolic refinement in sin(theta).
std::vector<TrajectoryPoint> measure_peak_trajectory(const BeampatternGrid& grid);

/// Total sine-space travel of the unambiguous peaks; jumps larger than 1 are
/// taken as wraps across endfire and unwrapped by the visible width 2.
double sine_coverage(std::span<const TrajectoryPoint> trajectory);

/// Accumulated |d theta| in radians between two retarded times, with linear
/// interpolation at the window edges. Wrap jumps are skipped.
double angular_coverage(std::span<const TrajectoryPoint> trajectory, double t_begin, double t_end);

/// Width of the lobe containing the row maximum at `drop_db` below it, in sin(theta).
/// Returns nullopt when a crossing falls off the sampled sector.
std::optional<double> measure_lobe_width(std::span<const double> row,
                                         std::span<const double> theta_axis, double drop_db = 4.0);

/// One steering segment: sweep linearly from angle_begin to angle_end over [t_begin, t_end].
struct ScheduleSegment {
  double t_begin = 0.0;
  double t_end = 0.0;
  double angle_begin = 0.0;  // radians
  double angle_end = 0.0;
};

/// Phase function phi(t') in cycles, sampled on a uniform time grid.
struct PhaseSchedule {
  std::vector<ScheduleSegment> segments;
  std::vector<double> t_axis;
  std::vector<double> phase_cycles;
  std::vector<double> target_angle;  // itinerary angle at each sample, radians
  double df = 0.0;
};

/// Samples phi on time_axis(T_p, n_t). Inside a segment
/// phi = -df t' - (f_c/c) d sin(target(t')); outside all segments the target
/// holds at the previous segment's end angle (the first segment's start
/// angle before it begins). Throws ValidationError for bad segments.
PhaseSchedule design_phase_schedule(const ArrayConfig& config, double df,
                                    std::vector<ScheduleSegment> segments, std::size_t n_t = 512);

/// Weights that realize phi at row i: element m is driven by e^{j2pi m phi(t')}.
WeightVector schedule_weights(const PhaseSchedule& schedule, std::size_t row,
                              std::size_t num_elements);

/// Exact-engine playback of a schedule on the FDA with offset step df.
BeampatternGrid play_schedule(const ArrayConfig& config, const PhaseSchedule& schedule,
                              std::span<const BasebandWaveform> waveforms, std::size_t n_theta);

}  // namespace fdabeam
