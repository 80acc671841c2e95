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

#include "fdabeam/export.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "fdabeam/errors.hpp"

namespace fdabeam {

static_assert(std::endian::native == std::endian::little, "binary grid writer assumes little-endian");

namespace {

constexpr double kRadToDeg = 180.0 / kPi;

std::string fmt(double v, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

template <typename T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T get(std::istream& is) {
  T v{};
  if (!is.read(reinterpret_cast<char*>(&v), sizeof v)) throw ContractError("truncated grid file");
  return v;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  if (n > 1) out.back() = b;
  return out;
}

}  // namespace

void write_grid_csv(const BeampatternGrid& grid, std::ostream& os) {
  os << "t_us";
  for (double th : grid.theta_axis) os << ',' << fmt(th * kRadToDeg, 10);
  os << '\n';
  for (std::size_t i = 0; i < grid.num_times(); ++i) {
    os << fmt(grid.t_axis[i] * 1e6, 10);
    for (double v : grid.row(i)) os << ',' << fmt(v, 8);
    os << '\n';
  }
}

void write_grid_binary(const BeampatternGrid& grid, std::ostream& os) {
  if (grid.t_axis.empty() || grid.theta_axis.empty()) throw ContractError("empty grid");
  os.write(kGridMagic.data(), kGridMagic.size());
  put<std::uint64_t>(os, grid.num_times());
  put<std::uint64_t>(os, grid.num_angles());
  put<double>(os, grid.t_axis.front());
  put<double>(os, grid.t_axis.back());
  put<double>(os, grid.theta_axis.front());
  put<double>(os, grid.theta_axis.back());
  put<std::uint32_t>(os, grid.normalization == Normalization::DbRelPeak ? 1u : 0u);
  put<std::uint32_t>(os, 0u);
  os.write(reinterpret_cast<const char*>(grid.values.data()),
           static_cast<std::streamsize>(grid.values.size() * sizeof(double)));
}

BeampatternGrid read_grid_binary(std::istream& is) {
  std::array<char, 8> magic{};
  if (!is.read(magic.data(), magic.size()) || magic != kGridMagic)
    throw ContractError("not an FDAGRID1 file");
  const auto nt = get<std::uint64_t>(is);
  const auto na = get<std::uint64_t>(is);
  const double t0 = get<double>(is), t1 = get<double>(is);
  const double a0 = get<double>(is), a1 = get<double>(is);
  const auto norm = get<std::uint32_t>(is);
  get<std::uint32_t>(is);
  if (nt == 0 || na == 0 || nt * na > (std::uint64_t{1} << 32)) throw ContractError("bad grid size");
  BeampatternGrid g;
  g.t_axis = linspace(t0, t1, nt);
  g.theta_axis = linspace(a0, a1, na);
  g.normalization = norm == 1 ? Normalization::DbRelPeak : Normalization::LinearMagnitude;
  g.values.resize(nt * na);
  if (!is.read(reinterpret_cast<char*>(g.values.data()),
               static_cast<std::streamsize>(g.values.size() * sizeof(double))))
    throw ContractError("truncated grid file");
  return g;
}

void write_curve_csv(std::span<const double> thetas, std::span<const double> values_db,
                     std::ostream& os) {
  if (thetas.size() != values_db.size()) throw ContractError("curve axes differ in length");
  os << "theta_deg,value_dB\n";
  for (std::size_t i = 0; i < thetas.size(); ++i)
    os << fmt(thetas[i] * kRadToDeg, 10) << ',' << fmt(values_db[i], 10) << '\n';
}

void write_trajectory_csv(std::span<const TrajectoryPoint> trajectory, std::ostream& os) {
  os << "t_us,theta_deg\n";
  for (const auto& p : trajectory)
    if (!p.ambiguous) os << fmt(p.retarded_time * 1e6, 10) << ',' << fmt(p.theta * kRadToDeg, 10) << '\n';
}

void write_covariance_csv(const CovarianceMatrix& R, std::ostream& os) {
  for (Eigen::Index i = 0; i < R.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < R.entries.cols(); ++j) {
      if (j > 0) os << ',';
      os << fmt(R.entries(i, j).real(), 15) << ',' << fmt(R.entries(i, j).imag(), 15);
    }
    os << '\n';
  }
}

std::vector<double> power_db(std::span<const double> values, double floor_db) {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    out[i] = values[i] > 0.0 ? std::max(floor_db, 10.0 * std::log10(values[i])) : floor_db;
  return out;
}

std::vector<double> magnitude_db_rel_peak(std::span<const double> values, double floor_db) {
  std::vector<double> out(values.size(), floor_db);
  if (values.empty()) return out;
  const double peak = *std::max_element(values.begin(), values.end());
  if (!(peak > 0.0)) return out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] > 0.0) out[i] = std::max(floor_db, 20.0 * std::log10(values[i] / peak));
  return out;
}

}  // namespace fdabeam
