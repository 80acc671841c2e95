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
#include <span>
#include <variant>
#include <vector>

#include "fdabeam/array_model.hpp"

namespace fdabeam {

enum class WaveformKind { RectPulse, RectChirp };

/// Unit-energy baseband envelope supported on [0, T_p].
///
/// s(t) = e^{j pi rate t^2} e^{j 2 pi shift t} / sqrt(T_p) on the support and 0
/// elsewhere. `frequency_shift_hz` lets an element's carrier offset be folded
/// into its baseband (used when a co-located MIMO array emulates an FDA).
struct BasebandWaveform {
  WaveformKind kind = WaveformKind::RectPulse;
  double pulse_duration = 1.0;
  double chirp_rate = 0.0;        // Hz/s, RectChirp only
  double bandwidth = 0.0;         // declared, Hz
  double amplitude = 1.0;         // 1/sqrt(T_p) for unit energy
  double frequency_shift_hz = 0.0;

  static BasebandWaveform rect(double pulse_s, double declared_bandwidth_hz = 0.0);
  static BasebandWaveform chirp(double pulse_s, double rate_hz_per_s);

  BasebandWaveform shifted(double shift_hz) const;
};

/// s(t); exactly zero outside [0, T_p].
cdouble sample_waveform(const BasebandWaveform& w, double t);

/// Chirp bank with rate_m = (base + step*m) / T_p^2, so waveform m sweeps
/// (base + step*m) / T_p Hz over the pulse.
std::vector<BasebandWaveform> make_chirp_bank(const ArrayConfig& config, double base_rate_num = 100.0,
                                              double rate_step = 10.0);

/// Largest declared bandwidth (including any folded frequency shift) in a set.
double max_bandwidth(std::span<const BasebandWaveform> waveforms);

/// Composite-trapezoid energy on [0, T_p] with n samples.
double waveform_energy(const BasebandWaveform& w, std::size_t n);

struct RandomCoding {
  std::uint64_t seed = 0;
  double scale_hz = 0.0;
};
struct CostasCoding {
  std::vector<int> code;  // empty selects the bundled length-16 sequence
  double scale_hz = 0.0;
};
struct LogarithmicCoding {
  double scale_hz = 0.0;
};
struct SquareCoding {
  double scale_hz = 0.0;
};

/// Nonlinear frequency-offset coding schemes.
using FoCoding = std::variant<RandomCoding, CostasCoding, LogarithmicCoding, SquareCoding>;

/// Welch-construction Costas permutation of length p-1 for prime p, values 1..p-1.
std::vector<int> welch_costas(int prime, int primitive_root);

/// The bundled default table: Welch construction with p = 17, root 3.
const std::vector<int>& default_costas_code();

/// Offsets in Hz for elements 0..M-1. Deterministic for a given seed or table.
std::vector<double> generate_offsets(const FoCoding& coding, std::size_t num_elements);

/// Uniform draws in the open interval (0, 1) from a seeded 64-bit Mersenne twister.
/// The bit-to-double mapping is fixed so sequences match across standard libraries.
std::vector<double> open_unit_draws(std::uint64_t seed, std::size_t count);

}  // namespace fdabeam
