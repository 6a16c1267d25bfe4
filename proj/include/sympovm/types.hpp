// Copyright 2026 The sympovm developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace sympovm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Default tolerance below zero still accepted as positive semidefinite.
inline constexpr double kDefaultPsdTol = 1e-10;

/// Bloch space of a d-level system has d^2 - 1 real dimensions.
inline Eigen::Index bloch_size(int dim) {
  return static_cast<Eigen::Index>(dim) * dim - 1;
}

/// Inverse of bloch_size; throws std::invalid_argument if `size` is not of
/// the form d^2 - 1 for some integer d >= 2.
int dim_from_bloch_size(Eigen::Index size);

}  // namespace sympovm
