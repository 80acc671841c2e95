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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "fdabeam/beampattern_instant.hpp"
#include "fdabeam/beampattern_integral.hpp"
#include "fdabeam/scan_analytics.hpp"

namespace fdabeam {

/// Binary grid layout (little-endian):
///   char[8]  magic "FDAGRID1"
///   uint64   N_t, N_theta
///   float64  t_first, t_last (seconds), theta_first, theta_last (radians)
///   uint32   normalization (0 linear magnitude, 1 dB rel. peak), uint32 reserved
///   float64  values[N_t * N_theta], row-major by time
inline constexpr std::array<char, 8> kGridMagic{'F', 'D', 'A', 'G', 'R', 'I', 'D', '1'};

/// Header row "t_us,<theta_deg...>", then one row per time sample.
void write_grid_csv(const BeampatternGrid& grid, std::ostream& os);

void write_grid_binary(const BeampatternGrid& grid, std::ostream& os);

/// Reads the binary layout back; axes are rebuilt as uniform spacings between
/// the stored end points. Throws ContractError on a bad header.
BeampatternGrid read_grid_binary(std::istream& is);

/// "theta_deg,value_dB" rows.
void write_curve_csv(std::span<const double> thetas, std::span<const double> values_db,
                     std::ostream& os);

/// "t_us,theta_deg" rows for unambiguous trajectory points.
void write_trajectory_csv(std::span<const TrajectoryPoint> trajectory, std::ostream& os);

/// M rows of 2M columns: re(R_m0), im(R_m0), re(R_m1), ...
void write_covariance_csv(const CovarianceMatrix& R, std::ostream& os);

/// 10 log10(v), floored at floor_db. For power-like curves.
std::vector<double> power_db(std::span<const double> values, double floor_db = -300.0);

/// 20 log10(v / max), floored at floor_db. For magnitude curves.
std::vector<double> magnitude_db_rel_peak(std::span<const double> values, double floor_db = -60.0);

}  // namespace fdabeam
