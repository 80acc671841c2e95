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

#include <cmath>

#include "fdabeam/array_model.hpp"
#include "fdabeam/beampattern_instant.hpp"
#include "fdabeam/errors.hpp"
#include "oracles.hpp"

using namespace fdabeam;

namespace {

constexpr double deg = kPi / 180.0;

ArrayConfig fig_array(double d = 0.015) { return ArrayConfig(16, 10e9, d, 5e-6); }

}  // namespace

TEST_CASE("array config rejects nonphysical values") {
  CHECK_THROWS_AS(ArrayConfig(0, 10e9, 0.015, 5e-6), ConfigurationError);
  CHECK_THROWS_AS(ArrayConfig(16, 0.0, 0.015, 5e-6), ConfigurationError);
  CHECK_THROWS_AS(ArrayConfig(16, 10e9, -0.01, 5e-6), ConfigurationError);
  CHECK_THROWS_AS(ArrayConfig(16, 10e9, 0.015, 0.0), ConfigurationError);
  CHECK_THROWS_AS(ArrayConfig(16, 10e9, 0.015, 5e-6, 0.0), ConfigurationError);
  CHECK_THROWS_AS(ArrayConfig(16, std::nan(""), 0.015, 5e-6), ConfigurationError);
}

TEST_CASE("narrowband ratio is M d B / c") {
  const auto a = fig_array();
  CHECK(a.narrowband_ratio(10e6) == doctest::Approx(16 * 0.015 * 10e6 / 3e8).epsilon(1e-14));
  CHECK(a.with_spacing(0.03).spacing() == 0.03);
  CHECK(a.with_spacing(0.03).num_elements() == 16);
}

TEST_CASE("reference wavelength") {
  const auto a = fig_array();
  CHECK(reference_wavelength(a, FrequencyPlan::uniform(0.0)) == doctest::Approx(0.03).epsilon(1e-15));
  const double l200 = reference_wavelength(a, FrequencyPlan::uniform(200e3));
  // 15 * 200 kHz = 3 MHz above the carrier.
  CHECK(l200 == doctest::Approx(3e8 / 1.0003e10).epsilon(1e-15));
  CHECK(l200 == doctest::Approx(0.029991).epsilon(1e-6));
  CHECK(l200 < 0.03);
  const ArrayConfig single(1, 10e9, 0.015, 5e-6);
  CHECK(reference_wavelength(single, FrequencyPlan::uniform(1e6)) == doctest::Approx(0.03).epsilon(1e-15));
  CHECK_THROWS_AS(reference_wavelength(a, FrequencyPlan::tabulated(std::vector<double>(16, 0.0))),
                  UnsupportedPlanError);
}

TEST_CASE("angle steering vector") {
  const auto a = fig_array();
  for (const auto& x : steering_angle(a, 0.0)) CHECK(x == cdouble(1.0, 0.0));

  const ArrayConfig pair(2, 10e9, 0.015, 5e-6);
  const auto v = steering_angle(pair, kPi / 2);
  CHECK(std::abs(v[0] - cdouble(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(v[1] - cdouble(-1.0, 0.0)) < 1e-12);

  const auto v30 = steering_angle(a, 30 * deg);
  CHECK(std::arg(v30[1]) == doctest::Approx(2 * kPi * 0.25).epsilon(1e-12));
}

TEST_CASE("FO-angle steering vector") {
  const auto a = fig_array();
  for (const auto& x : steering_fo_angle(a, FrequencyPlan::uniform(200e3), 0.0)) CHECK(x == cdouble(1.0, 0.0));
  for (const auto& x : steering_fo_angle(a, FrequencyPlan::uniform(0.0), 1.1)) CHECK(x == cdouble(1.0, 0.0));

  const auto v = steering_fo_angle(a, FrequencyPlan::uniform(10e6), kPi / 2);
  const cdouble expected = std::polar(1.0, 2 * kPi * 0.1125);
  CHECK(std::abs(v[15] - expected) < 1e-12);

  // Tabulated plans use df_m * m.
  std::vector<double> offs(16);
  for (std::size_t m = 0; m < 16; ++m) offs[m] = 1e6 * static_cast<double>(m * m);
  const auto t = steering_fo_angle(a, FrequencyPlan::tabulated(offs), 0.3);
  const double ph = 2 * kPi * offs[3] * 3 * 0.015 * std::sin(0.3) / 3e8;
  CHECK(std::abs(t[3] - std::polar(1.0, ph)) < 1e-12);

  const auto tm = FrequencyPlan::time_modulated(16, ModulationForm::Arctangent, 1e3, 1e6);
  CHECK_THROWS_AS(steering_fo_angle(a, tm, 0.1), UnsupportedPlanError);
}

TEST_CASE("time steering vector") {
  const auto a = fig_array();
  for (const auto& x : steering_time(a, FrequencyPlan::uniform(200e3), 0.0)) CHECK(x == cdouble(1.0, 0.0));
  const auto v = steering_time(a, FrequencyPlan::uniform(200e3), 2.5e-6);
  CHECK(std::abs(v[1] - cdouble(-1.0, 0.0)) < 1e-12);
  for (const auto& x : steering_time(a, FrequencyPlan::uniform(1.0 / 5e-6), 5e-6))
    CHECK(std::abs(x - cdouble(1.0, 0.0)) < 1e-9);
  const auto tm = FrequencyPlan::time_modulated(16, ModulationForm::SquareRoot, 1e3, 1e6);
  CHECK_THROWS_AS(steering_time(a, tm, 1e-6), UnsupportedPlanError);
}

TEST_CASE("steering vectors have unit modulus and unit first entry") {
  const auto a = fig_array();
  const auto plan = FrequencyPlan::uniform(37e3);
  for (double th : {-1.5, -0.7, 0.0, 0.2, 1.2}) {
    for (const auto& v : {steering_angle(a, th), steering_fo_angle(a, plan, th), steering_time(a, plan, th * 1e-6)}) {
      CHECK(v[0] == cdouble(1.0, 0.0));
      for (const auto& x : v) CHECK(std::abs(x) == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("steered weights") {
  const auto a = fig_array();
  const auto plan = FrequencyPlan::uniform(40e3);

  const auto w0 = steered_weights(a, plan, 0.0);
  CHECK(w0.origin == WeightOrigin::Steered);
  for (const auto& x : w0.weights) CHECK(x == cdouble(1.0, 0.0));

  const ArrayConfig single(1, 10e9, 0.015, 5e-6);
  const auto w1 = steered_weights(single, plan, 0.7);
  REQUIRE(w1.size() == 1);
  CHECK(w1.weights[0] == cdouble(1.0, 0.0));

  CHECK_THROWS_AS(steered_weights(a, plan, kPi / 2), OutOfSectorError);
  CHECK_THROWS_AS(steered_weights(a, plan, -2.0), OutOfSectorError);

  SUBCASE("w^H (a . a_fo) at theta0 equals M") {
    for (double th0 : {-60.0, -30.0, 0.0, 30.0, 60.0}) {
      const auto w = steered_weights(a, plan, th0 * deg);
      const auto sa = steering_angle(a, th0 * deg);
      const auto sf = steering_fo_angle(a, plan, th0 * deg);
      cdouble s{};
      for (std::size_t m = 0; m < 16; ++m) s += std::conj(w.weights[m]) * sa[m] * sf[m];
      CHECK(s.real() == doctest::Approx(16.0).epsilon(1e-12));
      CHECK(std::abs(s.imag()) < 1e-12);
    }
  }

  SUBCASE("zero-time peak of the exact field sits at theta0") {
    const auto thetas = angle_axis(2048);
    const double step = thetas[1] - thetas[0];
    const std::vector<BasebandWaveform> rect{BasebandWaveform::rect(5e-6)};
    for (double th0 : {-60.0, -30.0, 0.0, 30.0, 60.0}) {
      const auto w = steered_weights(a, plan, th0 * deg);
      double best = -1.0, best_th = 0.0;
      for (double th : thetas) {
        const double v = std::abs(field_exact(a, plan, w, rect, EvalPoint::at(0.0, th)));
        if (v > best) best = v, best_th = th;
      }
      CHECK(std::abs(best_th - th0 * deg) <= step);
    }
  }
}

TEST_CASE("frequency plans") {
  const auto u = FrequencyPlan::uniform(0.0);
  for (double f : u.offsets(16)) CHECK(f == 0.0);
  CHECK(FrequencyPlan::uniform(5.0).offset(3) == 15.0);
  CHECK(FrequencyPlan::uniform(5.0).uniform_step() == 5.0);

  const auto t = FrequencyPlan::tabulated({0.0, 1.0, 4.0});
  CHECK(t.is_tabulated());
  CHECK(t.offset(2) == 4.0);
  CHECK_THROWS_AS(t.uniform_step(), UnsupportedPlanError);
  CHECK_NOTHROW(t.check_compatible(3));
  CHECK_THROWS_AS(t.check_compatible(4), ConfigurationError);
  CHECK_THROWS_AS(FrequencyPlan::tabulated({}), ConfigurationError);

  const auto tm = FrequencyPlan::time_modulated(4, ModulationForm::CubeRoot, 1e3, 1e6);
  CHECK(tm.is_time_modulated());
  CHECK_THROWS_AS(tm.offset(1), UnsupportedPlanError);
  CHECK_THROWS_AS(tm.check_compatible(5), ConfigurationError);
}

TEST_CASE("modulation functions") {
  ModulationFunction f{ModulationForm::SquareRoot, 2.0, 4.0, {}, 0.0};
  CHECK(f(1.0) == doctest::Approx(4.0));
  CHECK(f(-1.0) == doctest::Approx(-4.0));
  f.form = ModulationForm::CubeRoot;
  CHECK(f(2.0) == doctest::Approx(4.0));
  f.form = ModulationForm::Arctangent;
  CHECK(f(0.25) == doctest::Approx(2.0 * std::atan(1.0)));
  f.form = ModulationForm::HyperbolicSine;
  CHECK(f(0.25) == doctest::Approx(2.0 * std::sinh(1.0)));

  const ModulationFunction table{ModulationForm::Sampled, 10.0, 1.0, {0.0, 1.0, 4.0}, 2.0};
  CHECK(table(0.5) == doctest::Approx(5.0));
  CHECK(table(1.5) == doctest::Approx(25.0));
  CHECK(table(-3.0) == doctest::Approx(0.0));
  CHECK(table(9.0) == doctest::Approx(40.0));

  const auto plan = FrequencyPlan::time_modulated(3, ModulationForm::SquareRoot, 100.0, 1.0);
  const auto& chi = std::get<TimeModulatedOffsets>(plan.variant()).chi;
  CHECK(chi[0](4.0) == doctest::Approx(0.0));
  CHECK(chi[2](4.0) == doctest::Approx(400.0));
}

TEST_CASE("evaluation points carry range as metadata") {
  const auto p = EvalPoint::from_absolute(1e-4 + 2e-6, 3e4, 0.1, 3e8);
  CHECK(p.retarded_time == doctest::Approx(2e-6).epsilon(1e-9));
  REQUIRE(p.range.has_value());
  CHECK(p.absolute_time(3e8).value() == doctest::Approx(1e-4 + 2e-6).epsilon(1e-12));
  CHECK_FALSE(EvalPoint::at(0.0, 0.0).absolute_time(3e8).has_value());
}
