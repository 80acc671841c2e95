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
#include <functional>
#include <span>
#include <vector>

#include "fdabeam/array_model.hpp"
#include "fdabeam/waveform.hpp"

namespace fdabeam {

enum class Normalization { LinearMagnitude, DbRelPeak };
enum class Engine { Exact, ClosedForm };

/// Sampled pattern magnitude over (time, azimuth), row-major by time.
struct BeampatternGrid {
  std::vector<double> t_axis;      // seconds, strictly increasing
  std::vector<double> theta_axis;  // radians, strictly increasing
  std::vector<double> values;      // t_axis.size() * theta_axis.size()
  Normalization normalization = Normalization::LinearMagnitude;
  /// Level a fully coherent element sum reaches at this scaling (M for the
  /// closed form, M * |phi| for the exact engine with unit-modulus weights).
  double full_gain = 0.0;

  std::size_t num_times() const noexcept { return t_axis.size(); }
  std::size_t num_angles() const noexcept { return theta_axis.size(); }
  double at(std::size_t i, std::size_t j) const { return values[i * theta_axis.size() + j]; }
  double& at(std::size_t i, std::size_t j) { return values[i * theta_axis.size() + j]; }
  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * theta_axis.size(), theta_axis.size()};
  }
};

/// n samples covering [0, T_p] inclusive.
std::vector<double> time_axis(double pulse_s, std::size_t n);

/// n samples strictly inside (-pi/2, pi/2): theta_j = -pi/2 + (j+1) pi/(n+1).
std::vector<double> angle_axis(std::size_t n);

/// Exact element sum: sum_m conj(w_m) s_m(t') e^{j2pi df_m t'} e^{j2pi (f_c+df_m) m d sin(theta)/c}.
///
/// `waveforms` holds either one envelope shared by all elements or one per
/// element. Time-modulated plans use e^{j2pi chi_m(tau) tau} with
/// tau = t' + m d sin(theta)/c in place of the offset terms. Returns 0 outside
/// the pulse. The 1/r and carrier factors are omitted.
cdouble field_exact(const ArrayConfig& config, const FrequencyPlan& plan, const WeightVector& w,
                    std::span<const BasebandWaveform> waveforms, const EvalPoint& point);

/// |sin(M U)/sin(U)| with U = pi [df t' + (f_c+df) d sin(theta)/c]; M at the removable singularity.
double fitb_closed_form(const ArrayConfig& config, double df, double retarded_time, double theta);

/// Range-dependent array factor driven by absolute time, with no pulse-support check.
double legacy_array_factor(const ArrayConfig& config, double df, double t, double range_m,
                           double theta);

/// Closed-form pattern at t' = 0.
double zero_time_cut(const ArrayConfig& config, double df, double theta);

/// Dense pattern evaluation over time_axis(T_p, n_t) x angle_axis(n_theta).
BeampatternGrid sweep_grid(const ArrayConfig& config, const FrequencyPlan& plan,
                           const WeightVector& w, std::span<const BasebandWaveform> waveforms,
                           std::size_t n_t, std::size_t n_theta, Engine engine);

/// Exact-engine sweep whose weights change with retarded time; weights(t')
/// is sampled once per time row.
BeampatternGrid sweep_grid_time_variant(const ArrayConfig& config, const FrequencyPlan& plan,
                                        const std::function<WeightVector(double)>& weights,
                                        std::span<const BasebandWaveform> waveforms,
                                        std::size_t n_t, std::size_t n_theta);

/// Legacy array factor over explicit absolute times at one range.
BeampatternGrid legacy_grid(const ArrayConfig& config, double df, double range_m,
                            std::span<const double> absolute_times, std::size_t n_theta);

/// 20 log10(v / max) floored at floor_db. The input must be linear.
BeampatternGrid to_db(const BeampatternGrid& grid, double floor_db = -60.0);

/// Mean over time rows, one value per angle.
std::vector<double> time_averaged_pattern(const BeampatternGrid& grid);

}  // namespace fdabeam
