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

#include "fdabeam/array_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fdabeam/errors.hpp"

namespace fdabeam {

ArrayConfig::ArrayConfig(std::size_t num_elements, double carrier_hz, double spacing_m,
                         double pulse_s, double wave_speed, double element_gain)
    : num_elements_(num_elements),
      carrier_(carrier_hz),
      spacing_(spacing_m),
      pulse_(pulse_s),
      wave_speed_(wave_speed),
      element_gain_(element_gain) {
  if (num_elements_ < 1) throw ConfigurationError("array needs at least one element");
  if (!(carrier_ > 0.0) || !std::isfinite(carrier_))
    throw ConfigurationError("carrier frequency must be positive");
  if (!(spacing_ > 0.0) || !std::isfinite(spacing_))
    throw ConfigurationError("element spacing must be positive");
  if (!(pulse_ > 0.0) || !std::isfinite(pulse_))
    throw ConfigurationError("pulse duration must be positive");
  if (!(wave_speed_ > 0.0) || !std::isfinite(wave_speed_))
    throw ConfigurationError("propagation speed must be positive");
}

double ArrayConfig::narrowband_ratio(double bandwidth_hz) const noexcept {
  return static_cast<double>(num_elements_) * spacing_ * bandwidth_hz / wave_speed_;
}

ArrayConfig ArrayConfig::with_spacing(double spacing_m) const {
  return ArrayConfig(num_elements_, carrier_, spacing_m, pulse_, wave_speed_, element_gain_);
}

namespace {

double odd_sqrt(double x) { return std::copysign(std::sqrt(std::abs(x)), x); }

double sampled(const std::vector<double>& table, double span, double tau) {
  if (table.empty()) return 0.0;
  if (table.size() == 1 || span <= 0.0) return table.front();
  const double pos = std::clamp(tau / span, 0.0, 1.0) * static_cast<double>(table.size() - 1);
  const auto i = std::min(static_cast<std::size_t>(pos), table.size() - 2);
  const double frac = pos - static_cast<double>(i);
  return table[i] + frac * (table[i + 1] - table[i]);
}

}  // namespace

double ModulationFunction::operator()(double tau) const {
  const double x = rate * tau;
  switch (form) {
    case ModulationForm::SquareRoot:
      return amplitude_hz * odd_sqrt(x);
    case ModulationForm::CubeRoot:
      return amplitude_hz * std::cbrt(x);
    case ModulationForm::Arctangent:
      return amplitude_hz * std::atan(x);
    case ModulationForm::HyperbolicSine:
      return amplitude_hz * std::sinh(x);
    case ModulationForm::Sampled:
      return amplitude_hz * sampled(table, table_span, tau);
  }
  return 0.0;
}

FrequencyPlan FrequencyPlan::uniform(double step_hz) {
  if (!std::isfinite(step_hz)) throw ConfigurationError("frequency offset must be finite");
  return FrequencyPlan(UniformOffsets{step_hz});
}

FrequencyPlan FrequencyPlan::tabulated(std::vector<double> offsets_hz) {
  if (offsets_hz.empty()) throw ConfigurationError("tabulated plan needs at least one offset");
  for (double f : offsets_hz)
    if (!std::isfinite(f)) throw ConfigurationError("tabulated offsets must be finite");
  return FrequencyPlan(TabulatedOffsets{std::move(offsets_hz)});
}

FrequencyPlan FrequencyPlan::time_modulated(std::vector<ModulationFunction> chi) {
  if (chi.empty()) throw ConfigurationError("time-modulated plan needs at least one element");
  for (const auto& f : chi)
    if (f.form == ModulationForm::Sampled && f.table.empty())
      throw ConfigurationError("sampled modulation form needs a table");
  return FrequencyPlan(TimeModulatedOffsets{std::move(chi)});
}

FrequencyPlan FrequencyPlan::time_modulated(std::size_t num_elements, ModulationForm form,
                                            double amplitude_hz, double rate) {
  if (form == ModulationForm::Sampled)
    throw ConfigurationError("use the per-element overload for sampled forms");
  std::vector<ModulationFunction> chi(num_elements);
  for (std::size_t m = 0; m < num_elements; ++m)
    chi[m] = ModulationFunction{form, static_cast<double>(m) * amplitude_hz, rate, {}, 0.0};
  return time_modulated(std::move(chi));
}

double FrequencyPlan::uniform_step() const {
  if (const auto* u = std::get_if<UniformOffsets>(&v_)) return u->step_hz;
  throw UnsupportedPlanError("operation requires a uniform frequency plan");
}

double FrequencyPlan::offset(std::size_t m) const {
  if (const auto* u = std::get_if<UniformOffsets>(&v_)) return static_cast<double>(m) * u->step_hz;
  if (const auto* t = std::get_if<TabulatedOffsets>(&v_)) {
    if (m >= t->offsets_hz.size()) throw ContractError("element index beyond tabulated plan");
    return t->offsets_hz[m];
  }
  throw UnsupportedPlanError("time-modulated plans have no constant offsets");
}

std::vector<double> FrequencyPlan::offsets(std::size_t num_elements) const {
  check_compatible(num_elements);
  std::vector<double> out(num_elements);
  for (std::size_t m = 0; m < num_elements; ++m) out[m] = offset(m);
  return out;
}

void FrequencyPlan::check_compatible(std::size_t num_elements) const {
  std::size_t n = num_elements;
  if (const auto* t = std::get_if<TabulatedOffsets>(&v_)) n = t->offsets_hz.size();
  if (const auto* t = std::get_if<TimeModulatedOffsets>(&v_)) n = t->chi.size();
  if (n != num_elements)
    throw ConfigurationError("frequency plan has " + std::to_string(n) +
                             " entries but the array has " + std::to_string(num_elements));
}

WeightVector WeightVector::uniform(std::size_t num_elements) {
  return {CVector(num_elements, cdouble(1.0, 0.0)), WeightOrigin::Uniform, 0.0};
}

WeightVector WeightVector::custom(CVector w) { return {std::move(w), WeightOrigin::Custom, 0.0}; }

EvalPoint EvalPoint::from_absolute(double t, double range_m, double azimuth, double wave_speed) {
  return {t - range_m / wave_speed, azimuth, range_m};
}

std::optional<double> EvalPoint::absolute_time(double wave_speed) const {
  if (!range) return std::nullopt;
  return retarded_time + *range / wave_speed;
}

double reference_wavelength(const ArrayConfig& config, const FrequencyPlan& plan) {
  const double df = plan.uniform_step();
  const double top = config.carrier() + static_cast<double>(config.num_elements() - 1) * df;
  return config.wave_speed() / top;
}

CVector steering_angle(const ArrayConfig& config, double theta) {
  const std::size_t M = config.num_elements();
  const double k = kTwoPi * config.carrier() / config.wave_speed() * config.spacing() *
                   std::sin(theta);
  CVector a(M);
  for (std::size_t m = 0; m < M; ++m) a[m] = std::polar(1.0, k * static_cast<double>(m));
  return a;
}

CVector steering_fo_angle(const ArrayConfig& config, const FrequencyPlan& plan, double theta) {
  if (plan.is_time_modulated())
    throw UnsupportedPlanError("time-modulated plans have no FO-angle steering vector");
  plan.check_compatible(config.num_elements());
  const std::size_t M = config.num_elements();
  const double base = kTwoPi * config.spacing() * std::sin(theta) / config.wave_speed();
  CVector a(M);
  for (std::size_t m = 0; m < M; ++m) {
    // offset(m) is m*df for uniform plans, so this is df*m^2*d*sin/c
    const double mm = static_cast<double>(m);
    a[m] = std::polar(1.0, base * plan.offset(m) * mm);
  }
  return a;
}

CVector steering_time(const ArrayConfig& config, const FrequencyPlan& plan, double retarded_time) {
  if (plan.is_time_modulated())
    throw UnsupportedPlanError("time-modulated plans have no constant time steering vector");
  plan.check_compatible(config.num_elements());
  const std::size_t M = config.num_elements();
  CVector a(M);
  for (std::size_t m = 0; m < M; ++m) a[m] = std::polar(1.0, kTwoPi * plan.offset(m) * retarded_time);
  return a;
}

WeightVector steered_weights(const ArrayConfig& config, const FrequencyPlan& plan, double theta0) {
  plan.uniform_step();
  if (!(std::abs(theta0) < kPi / 2)) throw OutOfSectorError("steering angle outside (-90, 90) deg");
  const CVector a = steering_angle(config, theta0);
  const CVector b = steering_fo_angle(config, plan, theta0);
  WeightVector w;
  w.weights.resize(a.size());
  // Elements are driven by conj(w_m); storing the steering phases themselves
  // makes conj(w_m) cancel the element phase at theta0.
  for (std::size_t m = 0; m < a.size(); ++m) w.weights[m] = a[m] * b[m];
  w.origin = WeightOrigin::Steered;
  w.steer_angle = theta0;
  return w;
}

}  // namespace fdabeam
