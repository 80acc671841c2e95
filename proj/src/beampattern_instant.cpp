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

#include "fdabeam/beampattern_instant.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fdabeam/errors.hpp"
#include "fdabeam/parallel.hpp"

namespace fdabeam {

namespace {

void check_inputs(const ArrayConfig& config, const FrequencyPlan& plan, std::size_t num_weights,
                  std::span<const BasebandWaveform> waveforms) {
  const std::size_t M = config.num_elements();
  plan.check_compatible(M);
  if (num_weights != M)
    throw ContractError("weight vector has " + std::to_string(num_weights) +
                        " entries, array has " + std::to_string(M));
  if (waveforms.size() != 1 && waveforms.size() != M)
    throw ContractError("expected one shared waveform or one per element");
}

const BasebandWaveform& waveform_for(std::span<const BasebandWaveform> waveforms, std::size_t m) {
  return waveforms.size() == 1 ? waveforms[0] : waveforms[m];
}

double dirichlet(std::size_t M, double upsilon) {
  const double s = std::sin(upsilon);
  if (std::abs(s) < 1e-12) return static_cast<double>(M);
  return std::abs(std::sin(static_cast<double>(M) * upsilon) / s);
}

double full_gain(const CVector& w, std::span<const BasebandWaveform> waveforms, double gain) {
  double amp = 0.0;
  for (const auto& s : waveforms) amp = std::max(amp, s.amplitude);
  double sum = 0.0;
  for (const auto& x : w) sum += std::abs(x);
  return sum * amp * std::abs(gain);
}

BeampatternGrid empty_grid(double pulse, std::size_t n_t, std::size_t n_theta) {
  if (n_t < 2 || n_theta < 2) throw ContractError("grids need at least 2 samples per axis");
  BeampatternGrid g;
  g.t_axis = time_axis(pulse, n_t);
  g.theta_axis = angle_axis(n_theta);
  g.values.assign(n_t * n_theta, 0.0);
  return g;
}

// Separable exact sweep for plans with constant offsets: per row a coefficient
// vector, per column an angle phasor vector, magnitude of their dot product.
BeampatternGrid separable_sweep(const ArrayConfig& config, const FrequencyPlan& plan,
                                const std::function<const CVector&(std::size_t, double)>& weights,
                                std::span<const BasebandWaveform> waveforms, std::size_t n_t,
                                std::size_t n_theta) {
  const std::size_t M = config.num_elements();
  BeampatternGrid g = empty_grid(config.pulse_duration(), n_t, n_theta);
  const auto offsets = plan.offsets(M);
  const double k = config.spacing() / config.wave_speed();

  std::vector<cdouble> angle(n_theta * M);
  for (std::size_t j = 0; j < n_theta; ++j) {
    const double s = std::sin(g.theta_axis[j]);
    for (std::size_t m = 0; m < M; ++m) {
      const double mm = static_cast<double>(m);
      angle[j * M + m] = std::polar(1.0, kTwoPi * (config.carrier() + offsets[m]) * mm * k * s);
    }
  }

  const double gain = config.element_gain();
  parallel_for(n_t, [&](std::size_t i) {
    const double t = g.t_axis[i];
    const CVector& w = weights(i, t);
    CVector coef(M);
    for (std::size_t m = 0; m < M; ++m)
      coef[m] = std::conj(w[m]) * sample_waveform(waveform_for(waveforms, m), t) *
                std::polar(1.0, kTwoPi * offsets[m] * t);
    for (std::size_t j = 0; j < n_theta; ++j) {
      cdouble acc(0.0, 0.0);
      const cdouble* a = &angle[j * M];
      for (std::size_t m = 0; m < M; ++m) acc += coef[m] * a[m];
      g.at(i, j) = std::abs(acc) * gain;
    }
  });
  return g;
}

}  // namespace

std::vector<double> time_axis(double pulse_s, std::size_t n) {
  if (n < 2) throw ContractError("time axis needs at least 2 samples");
  std::vector<double> t(n);
  const double step = pulse_s / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) t[i] = step * static_cast<double>(i);
  t.back() = pulse_s;
  return t;
}

std::vector<double> angle_axis(std::size_t n) {
  if (n < 1) throw ContractError("angle axis needs at least 1 sample");
  std::vector<double> th(n);
  const double step = kPi / static_cast<double>(n + 1);
  for (std::size_t j = 0; j < n; ++j) th[j] = -kPi / 2 + step * static_cast<double>(j + 1);
  return th;
}

cdouble field_exact(const ArrayConfig& config, const FrequencyPlan& plan, const WeightVector& w,
                    std::span<const BasebandWaveform> waveforms, const EvalPoint& point) {
  check_inputs(config, plan, w.size(), waveforms);
  const double t = point.retarded_time;
  if (t < 0.0 || t > config.pulse_duration()) return {0.0, 0.0};

  const std::size_t M = config.num_elements();
  const double delay = config.spacing() * std::sin(point.azimuth) / config.wave_speed();
  cdouble acc(0.0, 0.0);

  if (const auto* tm = std::get_if<TimeModulatedOffsets>(&plan.variant())) {
    for (std::size_t m = 0; m < M; ++m) {
      const double mm = static_cast<double>(m);
      const double tau = t + mm * delay;
      const double phase = kTwoPi * (tm->chi[m](tau) * tau + config.carrier() * mm * delay);
      acc += std::conj(w.weights[m]) * sample_waveform(waveform_for(waveforms, m), t) *
             std::polar(1.0, phase);
    }
  } else {
    for (std::size_t m = 0; m < M; ++m) {
      const double mm = static_cast<double>(m);
      const double fo = plan.offset(m);
      const double phase = kTwoPi * (fo * t + (config.carrier() + fo) * mm * delay);
      acc += std::conj(w.weights[m]) * sample_waveform(waveform_for(waveforms, m), t) *
             std::polar(1.0, phase);
    }
  }
  return acc * config.element_gain();
}

double fitb_closed_form(const ArrayConfig& config, double df, double retarded_time, double theta) {
  const double upsilon =
      kPi * (df * retarded_time +
             (config.carrier() + df) * config.spacing() * std::sin(theta) / config.wave_speed());
  return dirichlet(config.num_elements(), upsilon);
}

double legacy_array_factor(const ArrayConfig& config, double df, double t, double range_m,
                           double theta) {
  const double c = config.wave_speed();
  const double xi = df * t - df * range_m / c +
                    config.carrier() * config.spacing() * std::sin(theta) / c +
                    df * config.spacing() * std::sin(theta) / c;
  return dirichlet(config.num_elements(), kPi * xi);
}

double zero_time_cut(const ArrayConfig& config, double df, double theta) {
  return fitb_closed_form(config, df, 0.0, theta);
}

BeampatternGrid sweep_grid(const ArrayConfig& config, const FrequencyPlan& plan,
                           const WeightVector& w, std::span<const BasebandWaveform> waveforms,
                           std::size_t n_t, std::size_t n_theta, Engine engine) {
  if (engine == Engine::ClosedForm) {
    const double df = plan.uniform_step();
    for (const auto& x : w.weights)
      if (x != cdouble(1.0, 0.0)) throw ContractError("closed-form engine assumes uniform weights");
    BeampatternGrid g = empty_grid(config.pulse_duration(), n_t, n_theta);
    parallel_for(n_t, [&](std::size_t i) {
      for (std::size_t j = 0; j < n_theta; ++j)
        g.at(i, j) = fitb_closed_form(config, df, g.t_axis[i], g.theta_axis[j]);
    });
    g.full_gain = static_cast<double>(config.num_elements());
    return g;
  }

  check_inputs(config, plan, w.size(), waveforms);
  if (plan.is_time_modulated()) {
    BeampatternGrid g = empty_grid(config.pulse_duration(), n_t, n_theta);
    parallel_for(n_t, [&](std::size_t i) {
      for (std::size_t j = 0; j < n_theta; ++j)
        g.at(i, j) =
            std::abs(field_exact(config, plan, w, waveforms, EvalPoint::at(g.t_axis[i], g.theta_axis[j])));
    });
    g.full_gain = full_gain(w.weights, waveforms, config.element_gain());
    return g;
  }

  auto g = separable_sweep(
      config, plan, [&](std::size_t, double) -> const CVector& { return w.weights; }, waveforms,
      n_t, n_theta);
  g.full_gain = full_gain(w.weights, waveforms, config.element_gain());
  return g;
}

BeampatternGrid sweep_grid_time_variant(const ArrayConfig& config, const FrequencyPlan& plan,
                                        const std::function<WeightVector(double)>& weights,
                                        std::span<const BasebandWaveform> waveforms,
                                        std::size_t n_t, std::size_t n_theta) {
  if (plan.is_time_modulated())
    throw UnsupportedPlanError("time-variant weights need a plan with constant offsets");
  const auto axis = time_axis(config.pulse_duration(), n_t);
  std::vector<CVector> rows(n_t);
  for (std::size_t i = 0; i < n_t; ++i) {
    WeightVector w = weights(axis[i]);
    check_inputs(config, plan, w.size(), waveforms);
    rows[i] = std::move(w.weights);
  }
  auto g = separable_sweep(
      config, plan, [&](std::size_t i, double) -> const CVector& { return rows[i]; }, waveforms,
      n_t, n_theta);
  double gain = 0.0;
  for (const auto& r : rows) gain = std::max(gain, full_gain(r, waveforms, config.element_gain()));
  g.full_gain = gain;
  return g;
}

BeampatternGrid legacy_grid(const ArrayConfig& config, double df, double range_m,
                            std::span<const double> absolute_times, std::size_t n_theta) {
  if (absolute_times.size() < 2 || n_theta < 2)
    throw ContractError("grids need at least 2 samples per axis");
  BeampatternGrid g;
  g.t_axis.assign(absolute_times.begin(), absolute_times.end());
  g.theta_axis = angle_axis(n_theta);
  g.values.assign(g.t_axis.size() * n_theta, 0.0);
  parallel_for(g.t_axis.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < n_theta; ++j)
      g.at(i, j) = legacy_array_factor(config, df, g.t_axis[i], range_m, g.theta_axis[j]);
  });
  g.full_gain = static_cast<double>(config.num_elements());
  return g;
}

BeampatternGrid to_db(const BeampatternGrid& grid, double floor_db) {
  if (grid.normalization != Normalization::LinearMagnitude)
    throw ContractError("grid is already in dB");
  BeampatternGrid out = grid;
  out.normalization = Normalization::DbRelPeak;
  const double peak = grid.values.empty() ? 0.0 : *std::max_element(grid.values.begin(), grid.values.end());
  for (auto& v : out.values) {
    if (peak <= 0.0 || v <= 0.0) {
      v = floor_db;
      continue;
    }
    v = std::max(floor_db, 20.0 * std::log10(v / peak));
  }
  out.full_gain = 0.0;
  return out;
}

std::vector<double> time_averaged_pattern(const BeampatternGrid& grid) {
  std::vector<double> mean(grid.num_angles(), 0.0);
  for (std::size_t i = 0; i < grid.num_times(); ++i)
    for (std::size_t j = 0; j < grid.num_angles(); ++j) mean[j] += grid.at(i, j);
  for (auto& v : mean) v /= static_cast<double>(grid.num_times());
  return mean;
}

}  // namespace fdabeam
