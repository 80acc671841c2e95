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

#include <stdexcept>
#include <string>

namespace fdabeam {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid physical or structural configuration (bad M, mismatched lengths, missing tables).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Operation requested on a frequency plan variant it does not support.
class UnsupportedPlanError : public Error {
 public:
  using Error::Error;
};

/// Angle outside the visible sector or too close to endfire.
class OutOfSectorError : public Error {
 public:
  using Error::Error;
};

/// Quadrature sample count too small for the declared bandwidths.
class SamplingError : public Error {
 public:
  using Error::Error;
};

/// Argument violates an operation contract (wrong covariance flavor, length mismatch).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Structured input failed semantic validation (schedules, scenarios).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace fdabeam
