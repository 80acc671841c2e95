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

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fdabeam/array_model.hpp"
#include "fdabeam/waveform.hpp"

namespace fdabeam {

enum class CovarianceFlavor { FDA, MIMO };

/// Pulse-integrated waveform covariance.
///
/// FDA: R(m,n) = int_0^Tp s_m(t) conj(s_n(t)) e^{j2pi (df_m - df_n) t} dt.
/// MIMO: the same integral without the offset exponential.
struct CovarianceMatrix {
  Eigen::MatrixXcd entries;
  CovarianceFlavor flavor = CovarianceFlavor::FDA;
  std::size_t quadrature_points = 0;
  std::string rule = "composite-trapezoid";

  std::size_t size() const noexcept { return static_cast<std::size_t>(entries.rows()); }
  double max_hermitian_error() const;
  double min_eigenvalue() const;
  /// Hermitian within tol and eigenvalues >= -psd_scale * trace.
  bool is_valid(double hermitian_tol = 1e-10, double psd_scale = 1e-8) const;
  double max_off_diagonal() const;
};

/// Nyquist floor 2 T_p (B + offset extent); covariance() rejects fewer samples.
std::size_t minimum_quadrature_points(const ArrayConfig& config,
                                      std::span<const BasebandWaveform> waveforms,
                                      const FrequencyPlan& plan, CovarianceFlavor flavor);

/// max(4096, ceil(8 T_p (B + offset extent))).
std::size_t default_quadrature_points(const ArrayConfig& config,
                                      std::span<const BasebandWaveform> waveforms,
                                      const FrequencyPlan& plan, CovarianceFlavor flavor);

/// Covariance by composite trapezoid on n_q nodes over [0, T_p]. `waveforms`
/// holds one shared envelope or one per element. n_q == 0 picks the default.
CovarianceMatrix covariance(const ArrayConfig& config, std::span<const BasebandWaveform> waveforms,
                            const FrequencyPlan& plan, CovarianceFlavor flavor,
                            std::size_t n_q = 0);

/// Weighted steering vector v = w (.) conj(a_T(theta) (.) a_T(df, theta)).
/// Element m then radiates conj(v_m) s_m(t) e^{j2pi df_m t}, and the quadratic
/// form v^H R v is the pulse energy toward theta.
CVector fgtb_weighted_steering(const ArrayConfig& config, const FrequencyPlan& plan,
                               const WeightVector& w, double theta);

/// (1/T_p) v^H R v for an FDA-flavor covariance.
double fgtb(const CovarianceMatrix& R, const ArrayConfig& config, const FrequencyPlan& plan,
            const WeightVector& w, double theta);

/// (1/T_p) Tr{R v v^H}; algebraically equal to fgtb().
double fgtb_trace_form(const CovarianceMatrix& R, const ArrayConfig& config,
                       const FrequencyPlan& plan, const WeightVector& w, double theta);

/// v^H R v with v = w (.) conj(a_T(theta)) for a MIMO-flavor covariance. No 1/T_p factor.
double mimo_beampattern(const CovarianceMatrix& R, const ArrayConfig& config,
                        const WeightVector& w, double theta);

std::vector<double> fgtb_curve(const CovarianceMatrix& R, const ArrayConfig& config,
                               const FrequencyPlan& plan, const WeightVector& w,
                               std::span<const double> thetas);

std::vector<double> mimo_curve(const CovarianceMatrix& R, const ArrayConfig& config,
                               const WeightVector& w, std::span<const double> thetas);

struct FoBounds {
  double lower = 0.0;  // Hz, clamped at 0
  double upper = 0.0;  // Hz
};

/// Offset window in which the FO steering term can be dropped:
/// (M B - f_c)/(2M) <= df <= f_c / (4M^2 - M).
FoBounds equivalence_fo_bounds(const ArrayConfig& config, double bandwidth_hz);

struct EquivalenceReport {
  double df = 0.0;
  double max_deviation = 0.0;         // peak-normalized curves
  std::vector<double> thetas;
  std::vector<double> fgtb_normalized;
  std::vector<double> mimo_normalized;
  double fgtb_peak = 0.0;             // absolute, includes 1/T_p
  double mimo_peak = 0.0;             // absolute
  std::size_t quadrature_points = 0;
};

/// FDA side: bare envelopes with the offset plan in covariance and steering.
/// MIMO side: element m transmits s_m(t) e^{j2pi df_m t} with plain angle steering.
/// Both curves are peak-normalized before differencing.
EquivalenceReport compare_fgtb_mimo(const ArrayConfig& config, const FrequencyPlan& plan,
                                    std::span<const BasebandWaveform> waveforms,
                                    const WeightVector& w, std::span<const double> thetas,
                                    std::size_t n_q = 0);

/// Unit-modulus weights e^{j2pi c_m} with c_m drawn from open_unit_draws(seed).
WeightVector random_phase_weights(std::size_t num_elements, std::uint64_t seed);

/// Peak over mean of a nonnegative curve, in dB.
double peak_to_mean_db(std::span<const double> curve);

}  // namespace fdabeam
