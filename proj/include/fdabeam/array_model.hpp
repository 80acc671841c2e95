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

#include <complex>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace fdabeam {

using cdouble = std::complex<double>;
using CVector = std::vector<cdouble>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kDefaultWaveSpeed = 3.0e8;

/// Physical configuration of a uniform linear transmit array.
///
/// All quantities are SI. The element pattern is a constant scalar and the
/// 1/r spreading loss is left out of every pattern magnitude, so patterns are
/// field magnitudes up to a positive constant.
class ArrayConfig {
 public:
  /// Throws ConfigurationError unless M >= 1 and f_c, d, T_p, c are all positive.
  ArrayConfig(std::size_t num_elements, double carrier_hz, double spacing_m, double pulse_s,
              double wave_speed = kDefaultWaveSpeed, double element_gain = 1.0);

  std::size_t num_elements() const noexcept { return num_elements_; }
  double carrier() const noexcept { return carrier_; }
  double spacing() const noexcept { return spacing_; }
  double pulse_duration() const noexcept { return pulse_; }
  double wave_speed() const noexcept { return wave_speed_; }
  double element_gain() const noexcept { return element_gain_; }

  /// Array transit time over inverse bandwidth, M*d*B/c. Must be << 1 for the
  /// envelope delay across the aperture to be negligible.
  double narrowband_ratio(double bandwidth_hz) const noexcept;

  /// Same array with a different element spacing.
  ArrayConfig with_spacing(double spacing_m) const;

 private:
  std::size_t num_elements_;
  double carrier_;
  double spacing_;
  double pulse_;
  double wave_speed_;
  double element_gain_;
};

/// Named shapes for time-modulated frequency offsets.
enum class ModulationForm { SquareRoot, CubeRoot, Arctangent, HyperbolicSine, Sampled };

/// One element's time-dependent offset chi(tau) = amplitude * g(rate * tau), in Hz.
///
/// Analytic forms are odd-extended to negative arguments. A Sampled form holds
/// g on a uniform grid over [0, table_span] seconds of tau (rate ignored) and is
/// linearly interpolated, clamped at both ends.
struct ModulationFunction {
  ModulationForm form = ModulationForm::SquareRoot;
  double amplitude_hz = 0.0;
  double rate = 1.0;
  std::vector<double> table;
  double table_span = 0.0;

  double operator()(double tau) const;
};

struct UniformOffsets {
  double step_hz = 0.0;
};

struct TabulatedOffsets {
  std::vector<double> offsets_hz;
};

struct TimeModulatedOffsets {
  std::vector<ModulationFunction> chi;
};

/// Per-element frequency offsets: f_m = f_c + offset_m.
class FrequencyPlan {
 public:
  using Variant = std::variant<UniformOffsets, TabulatedOffsets, TimeModulatedOffsets>;

  static FrequencyPlan uniform(double step_hz);
  static FrequencyPlan tabulated(std::vector<double> offsets_hz);
  static FrequencyPlan time_modulated(std::vector<ModulationFunction> chi);
  /// chi_m = m * amplitude * g(rate * tau) for every element.
  static FrequencyPlan time_modulated(std::size_t num_elements, ModulationForm form,
                                      double amplitude_hz, double rate);

  const Variant& variant() const noexcept { return v_; }
  bool is_uniform() const noexcept { return std::holds_alternative<UniformOffsets>(v_); }
  bool is_tabulated() const noexcept { return std::holds_alternative<TabulatedOffsets>(v_); }
  bool is_time_modulated() const noexcept {
    return std::holds_alternative<TimeModulatedOffsets>(v_);
  }

  /// Uniform step; throws UnsupportedPlanError for other variants.
  double uniform_step() const;

  /// Constant offset of element m in Hz. Throws UnsupportedPlanError for time-modulated plans.
  double offset(std::size_t m) const;

  /// Constant offsets for elements 0..M-1.
  std::vector<double> offsets(std::size_t num_elements) const;

  /// Throws ConfigurationError when the plan cannot pair with an M-element array.
  void check_compatible(std::size_t num_elements) const;

 private:
  explicit FrequencyPlan(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

enum class WeightOrigin { Uniform, Steered, Custom };

/// Complex transmit weights. Element m is driven by conj(w_m).
struct WeightVector {
  CVector weights;
  WeightOrigin origin = WeightOrigin::Custom;
  double steer_angle = 0.0;  // radians, meaningful for Steered only

  static WeightVector uniform(std::size_t num_elements);
  static WeightVector custom(CVector w);
  std::size_t size() const noexcept { return weights.size(); }
};

/// Far-field evaluation point. Patterns depend on the retarded time only; the
/// absolute (t, r) pair is carried as metadata when the caller has one.
struct EvalPoint {
  double retarded_time = 0.0;  // t' = t - r/c, seconds
  double azimuth = 0.0;        // radians
  std::optional<double> range; // meters

  static EvalPoint at(double retarded_time, double azimuth) { return {retarded_time, azimuth, {}}; }
  static EvalPoint at_range(double retarded_time, double azimuth, double range_m) {
    return {retarded_time, azimuth, range_m};
  }
  static EvalPoint from_absolute(double t, double range_m, double azimuth, double wave_speed);

  std::optional<double> absolute_time(double wave_speed) const;
};

/// c / (f_c + (M-1) * df). Uniform plans only.
double reference_wavelength(const ArrayConfig& config, const FrequencyPlan& plan);

/// a_T(theta): entry m = exp(j 2 pi (f_c/c) m d sin theta).
CVector steering_angle(const ArrayConfig& config, double theta);

/// a_T(df, theta): entry m = exp(j 2 pi df m^2 d sin theta / c) (uniform), or
/// exp(j 2 pi df_m m d sin theta / c) (tabulated).
CVector steering_fo_angle(const ArrayConfig& config, const FrequencyPlan& plan, double theta);

/// a_T(df, t'): entry m = exp(j 2 pi df_m t').
CVector steering_time(const ArrayConfig& config, const FrequencyPlan& plan, double retarded_time);

/// Weights that put the zero-time mainlobe at theta0 (uniform plans).
WeightVector steered_weights(const ArrayConfig& config, const FrequencyPlan& plan, double theta0);

}  // namespace fdabeam
