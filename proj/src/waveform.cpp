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

#include "fdabeam/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fdabeam/errors.hpp"

namespace fdabeam {

BasebandWaveform BasebandWaveform::rect(double pulse_s, double declared_bandwidth_hz) {
  if (!(pulse_s > 0.0)) throw ConfigurationError("pulse duration must be positive");
  BasebandWaveform w;
  w.kind = WaveformKind::RectPulse;
  w.pulse_duration = pulse_s;
  w.bandwidth = declared_bandwidth_hz > 0.0 ? declared_bandwidth_hz : 1.0 / pulse_s;
  w.amplitude = 1.0 / std::sqrt(pulse_s);
  return w;
}

BasebandWaveform BasebandWaveform::chirp(double pulse_s, double rate_hz_per_s) {
  if (!(pulse_s > 0.0)) throw ConfigurationError("pulse duration must be positive");
  BasebandWaveform w;
  w.kind = WaveformKind::RectChirp;
  w.pulse_duration = pulse_s;
  w.chirp_rate = rate_hz_per_s;
  w.bandwidth = std::abs(rate_hz_per_s) * pulse_s;
  w.amplitude = 1.0 / std::sqrt(pulse_s);
  return w;
}

BasebandWaveform BasebandWaveform::shifted(double shift_hz) const {
  BasebandWaveform w = *this;
  w.frequency_shift_hz = shift_hz;
  return w;
}

cdouble sample_waveform(const BasebandWaveform& w, double t) {
  if (t < 0.0 || t > w.pulse_duration) return {0.0, 0.0};
  double phase = 0.0;
  if (w.kind == WaveformKind::RectChirp) phase += kPi * w.chirp_rate * t * t;
  if (w.frequency_shift_hz != 0.0) phase += kTwoPi * w.frequency_shift_hz * t;
  return std::polar(w.amplitude, phase);
}

std::vector<BasebandWaveform> make_chirp_bank(const ArrayConfig& config, double base_rate_num,
                                              double rate_step) {
  const double tp = config.pulse_duration();
  std::vector<BasebandWaveform> bank;
  bank.reserve(config.num_elements());
  for (std::size_t m = 0; m < config.num_elements(); ++m) {
    const double cycles = base_rate_num + rate_step * static_cast<double>(m);
    bank.push_back(BasebandWaveform::chirp(tp, cycles / (tp * tp)));
  }
  return bank;
}

double max_bandwidth(std::span<const BasebandWaveform> waveforms) {
  double b = 0.0;
  for (const auto& w : waveforms) b = std::max(b, w.bandwidth + std::abs(w.frequency_shift_hz));
  return b;
}

double waveform_energy(const BasebandWaveform& w, std::size_t n) {
  if (n < 2) throw SamplingError("energy quadrature needs at least two samples");
  const double h = w.pulse_duration / static_cast<double>(n - 1);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = (i + 1 == n) ? w.pulse_duration : h * static_cast<double>(i);
    const double weight = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    acc += weight * std::norm(sample_waveform(w, t));
  }
  return acc * h;
}

std::vector<int> welch_costas(int prime, int primitive_root) {
  if (prime < 3) throw ConfigurationError("Welch construction needs an odd prime");
  std::vector<int> code;
  code.reserve(static_cast<std::size_t>(prime - 1));
  long long v = 1;
  for (int i = 0; i < prime - 1; ++i) {
    code.push_back(static_cast<int>(v));
    v = (v * primitive_root) % prime;
  }
  std::vector<int> sorted = code;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < prime - 1; ++i)
    if (sorted[static_cast<std::size_t>(i)] != i + 1)
      throw ConfigurationError("primitive root does not generate a permutation");
  return code;
}

const std::vector<int>& default_costas_code() {
  static const std::vector<int> code = welch_costas(17, 3);
  return code;
}

std::vector<double> open_unit_draws(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<double> out(count);
  for (auto& x : out) x = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  return out;
}

namespace {

struct OffsetVisitor {
  std::size_t M;

  std::vector<double> operator()(const RandomCoding& c) const {
    auto eps = open_unit_draws(c.seed, M);
    for (auto& e : eps) e *= c.scale_hz;
    return eps;
  }
  std::vector<double> operator()(const CostasCoding& c) const {
    const auto& code = c.code.empty() ? default_costas_code() : c.code;
    if (code.size() < M)
      throw ConfigurationError("Costas table has " + std::to_string(code.size()) +
                               " entries, array needs " + std::to_string(M));
    std::vector<double> out(M);
    for (std::size_t m = 0; m < M; ++m) out[m] = static_cast<double>(code[m]) * c.scale_hz;
    return out;
  }
  std::vector<double> operator()(const LogarithmicCoding& c) const {
    std::vector<double> out(M);
    for (std::size_t m = 0; m < M; ++m) out[m] = std::log(static_cast<double>(m) + 1.0) * c.scale_hz;
    return out;
  }
  std::vector<double> operator()(const SquareCoding& c) const {
    std::vector<double> out(M);
    for (std::size_t m = 0; m < M; ++m) {
      const double mm = static_cast<double>(m);
      out[m] = mm * mm * c.scale_hz;
    }
    return out;
  }
};

}  // namespace

std::vector<double> generate_offsets(const FoCoding& coding, std::size_t num_elements) {
  return std::visit(OffsetVisitor{num_elements}, coding);
}

}  // namespace fdabeam
