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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fdabeam/beampattern_instant.hpp"
#include "fdabeam/beampattern_integral.hpp"
#include "fdabeam/errors.hpp"
#include "oracles.hpp"

using namespace fdabeam;

namespace {

constexpr double Tp = 5e-6;
constexpr double deg = kPi / 180.0;

ArrayConfig array(std::size_t M = 16) { return ArrayConfig(M, 10e9, 0.015, Tp); }

const std::vector<BasebandWaveform> kRect{BasebandWaveform::rect(Tp)};

WeightVector scaled_uniform(std::size_t M, double s) {
  return WeightVector::custom(CVector(M, cdouble(s, 0.0)));
}

}  // namespace

TEST_CASE("covariance of rect pulses") {
  const auto a = array();

  SUBCASE("coherent without offsets") {
    const auto R = covariance(a, kRect, FrequencyPlan::uniform(0.0), CovarianceFlavor::FDA);
    CHECK(R.quadrature_points == 4096);
    CHECK(R.rule == "composite-trapezoid");
    for (Eigen::Index i = 0; i < 16; ++i)
      for (Eigen::Index j = 0; j < 16; ++j) CHECK(std::abs(R.entries(i, j) - cdouble(1.0, 0.0)) < 1e-12);
    CHECK(R.is_valid());
  }

  SUBCASE("orthogonal at integer cycles per pulse") {
    for (double k : {1.0, 3.0}) {
      const auto R = covariance(a, kRect, FrequencyPlan::uniform(k / Tp), CovarianceFlavor::FDA);
      const Eigen::MatrixXcd diff = R.entries - Eigen::MatrixXcd::Identity(16, 16);
      CHECK(diff.cwiseAbs().maxCoeff() < 1e-6);
    }
  }

  SUBCASE("MIMO flavor ignores offsets") {
    const auto R = covariance(a, kRect, FrequencyPlan::uniform(1e6), CovarianceFlavor::MIMO);
    CHECK(R.flavor == CovarianceFlavor::MIMO);
    CHECK(std::abs(R.entries(3, 11) - cdouble(1.0, 0.0)) < 1e-12);
  }

  SUBCASE("quadrature floor") {
    const auto plan = FrequencyPlan::uniform(10e6);
    const std::size_t floor = minimum_quadrature_points(a, kRect, plan, CovarianceFlavor::FDA);
    CHECK(floor == static_cast<std::size_t>(std::ceil(2 * Tp * (2e5 + 16 * 10e6))));
    CHECK(default_quadrature_points(a, kRect, plan, CovarianceFlavor::FDA) ==
          static_cast<std::size_t>(std::ceil(8 * Tp * (2e5 + 16 * 10e6))));
    CHECK(default_quadrature_points(a, kRect, FrequencyPlan::uniform(0.0), CovarianceFlavor::FDA) == 4096);
    CHECK_THROWS_AS(covariance(a, kRect, plan, CovarianceFlavor::FDA, floor - 1), SamplingError);
    CHECK_NOTHROW(covariance(a, kRect, plan, CovarianceFlavor::FDA, floor));
  }

  SUBCASE("time-modulated plans are rejected") {
    const auto tm = FrequencyPlan::time_modulated(16, ModulationForm::Arctangent, 1e3, 1e6);
    CHECK_THROWS_AS(covariance(a, kRect, tm, CovarianceFlavor::FDA), UnsupportedPlanError);
  }
}

TEST_CASE("covariance properties across waveform sets") {
  const auto a = array();
  const auto bank = make_chirp_bank(a);
  const auto tab = FrequencyPlan::tabulated(generate_offsets(RandomCoding{4, 3e6}, 16));
  for (const auto& plan : {FrequencyPlan::uniform(0.0), FrequencyPlan::uniform(1e6), FrequencyPlan::uniform(10e6), tab}) {
    for (auto flavor : {CovarianceFlavor::FDA, CovarianceFlavor::MIMO}) {
      const auto R = covariance(a, bank, plan, flavor);
      CHECK(R.max_hermitian_error() < 1e-10);
      CHECK(R.min_eigenvalue() >= -1e-8 * R.entries.trace().real());
      CHECK(R.is_valid());
      for (Eigen::Index i = 0; i < 16; ++i) CHECK(std::abs(R.entries(i, i) - cdouble(1.0, 0.0)) < 1e-6);
      CHECK(R.entries.trace().real() == doctest::Approx(16.0).epsilon(1e-6));
    }
  }

  const auto a40 = array(40);
  const auto R = covariance(a40, make_chirp_bank(a40), FrequencyPlan::uniform(10e6), CovarianceFlavor::FDA);
  CHECK(R.max_off_diagonal() < 0.01);
}

TEST_CASE("FGTB limiting regimes") {
  const auto a = array();
  const auto w = WeightVector::uniform(16);

  const auto Rc = covariance(a, kRect, FrequencyPlan::uniform(0.0), CovarianceFlavor::FDA);
  CHECK(fgtb(Rc, a, FrequencyPlan::uniform(0.0), w, 0.0) == doctest::Approx(256 / Tp).epsilon(1e-10));
  CHECK(fgtb(Rc, a, FrequencyPlan::uniform(0.0), scaled_uniform(16, 0.0), 0.3) == 0.0);

  const auto plan = FrequencyPlan::uniform(1.0 / Tp);
  const auto Ro = covariance(a, kRect, plan, CovarianceFlavor::FDA);
  for (double th : {-1.2, -0.4, 0.0, 0.7, 1.3}) CHECK(fgtb(Ro, a, plan, w, th) == doctest::Approx(16 / Tp).epsilon(1e-6));

  const auto Mc = covariance(a, kRect, FrequencyPlan::uniform(0.0), CovarianceFlavor::MIMO);
  CHECK(mimo_beampattern(Mc, a, w, 0.0) == doctest::Approx(256.0).epsilon(1e-10));
  const auto Mo = covariance(a, kRect, plan, CovarianceFlavor::FDA);
  // An orthogonal set seen as a MIMO covariance.
  CovarianceMatrix Mo_as_mimo = Mo;
  Mo_as_mimo.flavor = CovarianceFlavor::MIMO;
  for (double th : {-0.9, 0.2}) CHECK(mimo_beampattern(Mo_as_mimo, a, w, th) == doctest::Approx(16.0).epsilon(1e-6));

  CHECK_THROWS_AS(fgtb(Mc, a, plan, w, 0.0), ContractError);
  CHECK_THROWS_AS(fgtb_trace_form(Mc, a, plan, w, 0.0), ContractError);
  CHECK_THROWS_AS(mimo_beampattern(Rc, a, w, 0.0), ContractError);
  CHECK_THROWS_AS(fgtb(Rc, array(8), FrequencyPlan::uniform(0.0), WeightVector::uniform(8), 0.0), ContractError);
}

TEST_CASE("trace form and quadratic form agree; both are nonnegative") {
  const auto a = array();
  const auto bank = make_chirp_bank(a);
  const auto w = random_phase_weights(16, 9);
  for (double df : {0.0, 2e6, 10e6}) {
    const auto plan = FrequencyPlan::uniform(df);
    const auto R = covariance(a, bank, plan, CovarianceFlavor::FDA);
    for (double th : angle_axis(23)) {
      const double q = fgtb(R, a, plan, w, th);
      CHECK(q >= 0.0);
      CHECK(fgtb_trace_form(R, a, plan, w, th) == doctest::Approx(q).epsilon(1e-10));
    }
  }
}

TEST_CASE("FGTB equals the direct field-energy integral") {
  const auto a = array();
  const oracle::Array o{16, 10e9, 0.015, Tp, 3e8};
  const auto bank = make_chirp_bank(a);
  const auto w = random_phase_weights(16, 21);
  const std::vector<oracle::cd> ow(w.weights.begin(), w.weights.end());
  const double df = 1e6;
  const auto plan = FrequencyPlan::uniform(df);
  const auto offs = oracle::uniform_offsets(16, df);
  const auto env = oracle::chirps(Tp, 100, 10);
  const double spots[] = {-60 * deg, -20 * deg, 0.0, 35 * deg, 70 * deg};

  SUBCASE("same trapezoid nodes, to rounding") {
    const std::size_t n = 4096;
    const auto R = covariance(a, bank, plan, CovarianceFlavor::FDA, n);
    const double h = Tp / static_cast<double>(n - 1);
    for (double th : spots) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double wt = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
        sum += wt * std::norm(oracle::field(o, offs, ow, env, h * static_cast<double>(i), th));
      }
      CHECK(fgtb(R, a, plan, w, th) == doctest::Approx(sum * h / Tp).epsilon(1e-10));
    }
  }

  SUBCASE("independent Simpson integration, fine grids") {
    const auto R = covariance(a, bank, plan, CovarianceFlavor::FDA, std::size_t{1} << 18);
    for (double th : spots) {
      const double ref = oracle::integrated_power(o, offs, ow, env, th, std::size_t{1} << 18);
      CHECK(fgtb(R, a, plan, w, th) == doctest::Approx(ref).epsilon(1e-6));
    }
  }
}

TEST_CASE("coherence loss and flatness for the chirp bank") {
  const auto a = array();
  const auto bank = make_chirp_bank(a);
  const auto w = WeightVector::uniform(16);
  const auto thetas = angle_axis(1024);
  const double B = 10e6;
  double previous = 1e300;
  std::vector<double> last;
  for (double df : {0.0, 0.1 * B, 0.5 * B, B}) {
    const auto plan = FrequencyPlan::uniform(df);
    const auto curve = fgtb_curve(covariance(a, bank, plan, CovarianceFlavor::FDA), a, plan, w, thetas);
    const double ptm = peak_to_mean_db(curve);
    CHECK(ptm <= previous + 1e-12);
    previous = ptm;
    last = curve;
  }
  const auto [lo, hi] = std::minmax_element(last.begin(), last.end());
  CHECK(10 * std::log10(*hi / *lo) < 1.0);
}

TEST_CASE("equivalence bounds") {
  const auto b = equivalence_fo_bounds(array(), 10e6);
  CHECK(b.upper == 10e9 / 1008.0);
  CHECK(b.lower == 0.0);
  CHECK(equivalence_fo_bounds(array(1), 10e6).upper == doctest::Approx(10e9 / 3.0).epsilon(1e-15));
  CHECK(equivalence_fo_bounds(array(), 1e9).lower == doctest::Approx((16e9 - 10e9) / 32.0).epsilon(1e-15));
}

TEST_CASE("FGTB and co-located MIMO comparison") {
  const auto a = array(40);
  const auto bank = make_chirp_bank(a);
  const auto thetas = angle_axis(512);
  for (const auto& w : {WeightVector::uniform(40), random_phase_weights(40, 7)}) {
    const auto zero = compare_fgtb_mimo(a, FrequencyPlan::uniform(0.0), bank, w, thetas);
    CHECK(zero.max_deviation == 0.0);
    CHECK(zero.fgtb_peak == doctest::Approx(zero.mimo_peak / Tp).epsilon(1e-12));
    for (double df : {1e6, 10e6}) {
      const auto rep = compare_fgtb_mimo(a, FrequencyPlan::uniform(df), bank, w, thetas);
      CHECK(rep.max_deviation < 0.05);
      CHECK(rep.fgtb_normalized.size() == thetas.size());
      CHECK(*std::max_element(rep.mimo_normalized.begin(), rep.mimo_normalized.end()) == doctest::Approx(1.0));
    }
  }
  CHECK_THROWS_AS(compare_fgtb_mimo(a, FrequencyPlan::uniform(0.0), bank, WeightVector::uniform(40), {}), ContractError);
}

TEST_CASE("random phase weights and peak-to-mean") {
  const auto w = random_phase_weights(40, 7);
  CHECK(w.size() == 40);
  for (const auto& x : w.weights) CHECK(std::abs(x) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(random_phase_weights(40, 7).weights == w.weights);
  CHECK(random_phase_weights(40, 8).weights != w.weights);

  CHECK(peak_to_mean_db(std::vector<double>(5, 3.0)) == doctest::Approx(0.0));
  CHECK(peak_to_mean_db(std::vector<double>{1.0, 3.0}) == doctest::Approx(10 * std::log10(1.5)));
  CHECK_THROWS_AS(peak_to_mean_db(std::vector<double>{}), ContractError);
}
