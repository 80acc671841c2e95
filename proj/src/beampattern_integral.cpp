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

#include "fdabeam/beampattern_integral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fdabeam/errors.hpp"
#include "fdabeam/parallel.hpp"

namespace fdabeam {

namespace {

void check_waveforms(const ArrayConfig& config, std::span<const BasebandWaveform> waveforms) {
  if (waveforms.size() != 1 && waveforms.size() != config.num_elements())
    throw ContractError("expected one shared waveform or one per element");
}

const BasebandWaveform& waveform_for(std::span<const BasebandWaveform> waveforms, std::size_t m) {
  return waveforms.size() == 1 ? waveforms[0] : waveforms[m];
}

double offset_extent(const ArrayConfig& config, const FrequencyPlan& plan, CovarianceFlavor flavor) {
  if (flavor == CovarianceFlavor::MIMO) return 0.0;
  if (plan.is_time_modulated())
    throw UnsupportedPlanError("covariance needs constant per-element offsets");
  if (plan.is_uniform())
    return static_cast<double>(config.num_elements()) * std::abs(plan.uniform_step());
  const auto offs = plan.offsets(config.num_elements());
  const auto [lo, hi] = std::minmax_element(offs.begin(), offs.end());
  return *hi - *lo;
}

Eigen::VectorXcd to_eigen(const CVector& v) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

double quadratic_form(const Eigen::MatrixXcd& R, const CVector& v) {
  const Eigen::VectorXcd x = to_eigen(v);
  return std::max(0.0, (x.adjoint() * R * x)(0, 0).real());
}

void check_weights(const ArrayConfig& config, const WeightVector& w) {
  if (w.size() != config.num_elements()) throw ContractError("weight length must equal M");
}

}  // namespace

double CovarianceMatrix::max_hermitian_error() const {
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

double CovarianceMatrix::min_eigenvalue() const {
  // The solver reads only the lower triangle, so symmetrize first.
  const Eigen::MatrixXcd h = 0.5 * (entries + entries.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool CovarianceMatrix::is_valid(double hermitian_tol, double psd_scale) const {
  if (max_hermitian_error() > hermitian_tol) return false;
  return min_eigenvalue() >= -psd_scale * entries.trace().real();
}

double CovarianceMatrix::max_off_diagonal() const {
  double best = 0.0;
  for (Eigen::Index i = 0; i < entries.rows(); ++i)
    for (Eigen::Index j = 0; j < entries.cols(); ++j)
      if (i != j) best = std::max(best, std::abs(entries(i, j)));
  return best;
}

std::size_t minimum_quadrature_points(const ArrayConfig& config,
                                      std::span<const BasebandWaveform> waveforms,
                                      const FrequencyPlan& plan, CovarianceFlavor flavor) {
  const double span = max_bandwidth(waveforms) + offset_extent(config, plan, flavor);
  return static_cast<std::size_t>(std::ceil(2.0 * config.pulse_duration() * span));
}

std::size_t default_quadrature_points(const ArrayConfig& config,
                                      std::span<const BasebandWaveform> waveforms,
                                      const FrequencyPlan& plan, CovarianceFlavor flavor) {
  const double span = max_bandwidth(waveforms) + offset_extent(config, plan, flavor);
  const auto want = static_cast<std::size_t>(std::ceil(8.0 * config.pulse_duration() * span));
  return std::max<std::size_t>(4096, want);
}

CovarianceMatrix covariance(const ArrayConfig& config, std::span<const BasebandWaveform> waveforms,
                            const FrequencyPlan& plan, CovarianceFlavor flavor, std::size_t n_q) {
  check_waveforms(config, waveforms);
  const std::size_t M = config.num_elements();
  if (flavor == CovarianceFlavor::FDA) plan.check_compatible(M);
  if (n_q == 0) n_q = default_quadrature_points(config, waveforms, plan, flavor);
  const std::size_t floor = minimum_quadrature_points(config, waveforms, plan, flavor);
  if (n_q < 2 || n_q < floor)
    throw SamplingError("quadrature with " + std::to_string(n_q) + " samples is below the " +
                        std::to_string(std::max<std::size_t>(2, floor)) +
                        " needed for the declared bandwidths");

  std::vector<double> offsets(M, 0.0);
  if (flavor == CovarianceFlavor::FDA) offsets = plan.offsets(M);

  const double tp = config.pulse_duration();
  const double h = tp / static_cast<double>(n_q - 1);
  // Column i holds sqrt(weight_i * h) * x(t_i); R = X X^H.
  Eigen::MatrixXcd X(static_cast<Eigen::Index>(M), static_cast<Eigen::Index>(n_q));
  parallel_for(n_q, [&](std::size_t i) {
    const double t = (i + 1 == n_q) ? tp : h * static_cast<double>(i);
    const double scale = std::sqrt(((i == 0 || i + 1 == n_q) ? 0.5 : 1.0) * h);
    for (std::size_t m = 0; m < M; ++m) {
      cdouble x = sample_waveform(waveform_for(waveforms, m), t);
      if (flavor == CovarianceFlavor::FDA) x *= std::polar(1.0, kTwoPi * offsets[m] * t);
      X(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(i)) = scale * x;
    }
  });

  CovarianceMatrix R;
  R.entries = X * X.adjoint();
  R.flavor = flavor;
  R.quadrature_points = n_q;
  return R;
}

CVector fgtb_weighted_steering(const ArrayConfig& config, const FrequencyPlan& plan,
                               const WeightVector& w, double theta) {
  check_weights(config, w);
  const CVector a = steering_angle(config, theta);
  const CVector b = steering_fo_angle(config, plan, theta);
  CVector v(a.size());
  for (std::size_t m = 0; m < a.size(); ++m) v[m] = w.weights[m] * std::conj(a[m] * b[m]);
  return v;
}

double fgtb(const CovarianceMatrix& R, const ArrayConfig& config, const FrequencyPlan& plan,
            const WeightVector& w, double theta) {
  if (R.flavor != CovarianceFlavor::FDA) throw ContractError("FGTB needs an FDA covariance");
  if (R.size() != config.num_elements()) throw ContractError("covariance size must equal M");
  return quadratic_form(R.entries, fgtb_weighted_steering(config, plan, w, theta)) /
         config.pulse_duration();
}

double fgtb_trace_form(const CovarianceMatrix& R, const ArrayConfig& config,
                       const FrequencyPlan& plan, const WeightVector& w, double theta) {
  if (R.flavor != CovarianceFlavor::FDA) throw ContractError("FGTB needs an FDA covariance");
  if (R.size() != config.num_elements()) throw ContractError("covariance size must equal M");
  const Eigen::VectorXcd v = to_eigen(fgtb_weighted_steering(config, plan, w, theta));
  const Eigen::MatrixXcd outer = v * v.adjoint();
  return std::max(0.0, (R.entries * outer).trace().real()) / config.pulse_duration();
}

double mimo_beampattern(const CovarianceMatrix& R, const ArrayConfig& config,
                        const WeightVector& w, double theta) {
  if (R.flavor != CovarianceFlavor::MIMO) throw ContractError("MIMO pattern needs a MIMO covariance");
  if (R.size() != config.num_elements()) throw ContractError("covariance size must equal M");
  check_weights(config, w);
  const CVector a = steering_angle(config, theta);
  CVector v(a.size());
  for (std::size_t m = 0; m < a.size(); ++m) v[m] = w.weights[m] * std::conj(a[m]);
  return quadratic_form(R.entries, v);
}

std::vector<double> fgtb_curve(const CovarianceMatrix& R, const ArrayConfig& config,
                               const FrequencyPlan& plan, const WeightVector& w,
                               std::span<const double> thetas) {
  std::vector<double> out(thetas.size());
  parallel_for(thetas.size(), [&](std::size_t i) { out[i] = fgtb(R, config, plan, w, thetas[i]); });
  return out;
}

std::vector<double> mimo_curve(const CovarianceMatrix& R, const ArrayConfig& config,
                               const WeightVector& w, std::span<const double> thetas) {
  std::vector<double> out(thetas.size());
  parallel_for(thetas.size(), [&](std::size_t i) { out[i] = mimo_beampattern(R, config, w, thetas[i]); });
  return out;
}

FoBounds equivalence_fo_bounds(const ArrayConfig& config, double bandwidth_hz) {
  const std::size_t M = config.num_elements();
  const double m = static_cast<double>(M);
  FoBounds b;
  b.lower = std::max(0.0, (m * bandwidth_hz - config.carrier()) / (2.0 * m));
  b.upper = config.carrier() / static_cast<double>(4 * M * M - M);
  return b;
}

EquivalenceReport compare_fgtb_mimo(const ArrayConfig& config, const FrequencyPlan& plan,
                                    std::span<const BasebandWaveform> waveforms,
                                    const WeightVector& w, std::span<const double> thetas,
                                    std::size_t n_q) {
  check_waveforms(config, waveforms);
  check_weights(config, w);
  if (thetas.empty()) throw ContractError("comparison needs at least one angle");
  const std::size_t M = config.num_elements();
  const auto offsets = plan.offsets(M);

  std::vector<BasebandWaveform> folded;
  folded.reserve(M);
  for (std::size_t m = 0; m < M; ++m) {
    const auto& s = waveform_for(waveforms, m);
    folded.push_back(offsets[m] == 0.0 ? s : s.shifted(offsets[m]));
  }

  if (n_q == 0) n_q = default_quadrature_points(config, waveforms, plan, CovarianceFlavor::FDA);
  const auto r_fda = covariance(config, waveforms, plan, CovarianceFlavor::FDA, n_q);
  const auto r_mimo = covariance(config, folded, FrequencyPlan::uniform(0.0),
                                 CovarianceFlavor::MIMO, n_q);

  EquivalenceReport rep;
  rep.df = plan.is_uniform() ? plan.uniform_step() : 0.0;
  rep.thetas.assign(thetas.begin(), thetas.end());
  rep.quadrature_points = n_q;
  // Compare raw quadratic forms; the 1/T_p factor cancels under peak normalization.
  std::vector<double> qf(thetas.size()), qm(thetas.size());
  parallel_for(thetas.size(), [&](std::size_t i) {
    qf[i] = quadratic_form(r_fda.entries, fgtb_weighted_steering(config, plan, w, thetas[i]));
    qm[i] = mimo_beampattern(r_mimo, config, w, thetas[i]);
  });
  const double pf = *std::max_element(qf.begin(), qf.end());
  const double pm = *std::max_element(qm.begin(), qm.end());
  rep.fgtb_peak = pf / config.pulse_duration();
  rep.mimo_peak = pm;
  rep.fgtb_normalized.resize(qf.size());
  rep.mimo_normalized.resize(qm.size());
  double dev = 0.0;
  for (std::size_t i = 0; i < qf.size(); ++i) {
    rep.fgtb_normalized[i] = pf > 0.0 ? qf[i] / pf : 0.0;
    rep.mimo_normalized[i] = pm > 0.0 ? qm[i] / pm : 0.0;
    dev = std::max(dev, std::abs(rep.fgtb_normalized[i] - rep.mimo_normalized[i]));
  }
  // mimo_normalized peaks at 1, so the absolute deviation is already relative.
  rep.max_deviation = dev;
  return rep;
}

WeightVector random_phase_weights(std::size_t num_elements, std::uint64_t seed) {
  const auto c = open_unit_draws(seed, num_elements);
  CVector w(num_elements);
  for (std::size_t m = 0; m < num_elements; ++m) w[m] = std::polar(1.0, kTwoPi * c[m]);
  return WeightVector::custom(std::move(w));
}

double peak_to_mean_db(std::span<const double> curve) {
  if (curve.empty()) throw ContractError("empty curve");
  const double peak = *std::max_element(curve.begin(), curve.end());
  const double mean = std::accumulate(curve.begin(), curve.end(), 0.0) / static_cast<double>(curve.size());
  return 10.0 * std::log10(peak / mean);
}

}  // namespace fdabeam
