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

#include <vector>

#include "sympovm/rng.hpp"
#include "sympovm/types.hpp"

namespace sympovm {

// N directional vectors in R^{d^2-1} forming a regular (N-1)-simplex centered
// at the origin: common norm sqrt((d-1)/(2d)), pairwise cosine -1/(N-1),
// zero sum.
class DirectionalFrame {
 public:
  // Regular simplex supported on the first N-1 coordinates, built by the
  // recursive vertex construction and rescaled to the directional norm.
  static DirectionalFrame canonical(int dim, int count);

  // Wraps explicit column vectors; invariants are NOT checked here
  // (validate_frame is the checked route).
  static DirectionalFrame from_vectors(int dim, RealMatrix vectors);

  int dim() const { return dim_; }
  int count() const { return static_cast<int>(vectors_.cols()); }

  // Columns are the directional vectors n_i.
  const RealMatrix& vectors() const { return vectors_; }
  RealVector vector(int i) const { return vectors_.col(i); }

 private:
  DirectionalFrame(int dim, RealMatrix vectors)
      : dim_(dim), vectors_(std::move(vectors)) {}

  int dim_;
  RealMatrix vectors_;  // (d^2-1) x N
};

// Rotation of R^{d^2-1} parameterized by the (d^2-1)(d^2-2)/2 independent
// entries of an antisymmetric generator matrix A; the rotation is exp(A).
class Orientation {
 public:
  static Orientation identity(int dim);
  // Independent standard Gaussian coefficients scaled by `scale`.
  static Orientation random(int dim, double scale, Rng& rng);
  static Orientation from_coefficients(int dim, RealVector coefficients);

  int dim() const { return dim_; }
  const RealVector& coefficients() const { return coefficients_; }

  // exp(A) with A_jk = c_m, A_kj = -c_m for j < k in row-major pair order.
  RealMatrix rotation_matrix() const;

  static Eigen::Index coefficient_count(int dim);

 private:
  Orientation(int dim, RealVector coefficients)
      : dim_(dim), coefficients_(std::move(coefficients)) {}

  int dim_;
  RealVector coefficients_;
};

// Applies the orientation's orthogonal map to every frame vector.
DirectionalFrame rotate_frame(const DirectionalFrame& frame, const Orientation& o);

// Applies an explicit rotation matrix (must be (d^2-1) x (d^2-1)).
DirectionalFrame rotate_frame(const DirectionalFrame& frame, const RealMatrix& rotation);

struct FrameValidationReport {
  double norm_deviation = 0.0;     // max | ||n_i|| - sqrt((d-1)/(2d)) |
  double cosine_deviation = 0.0;   // max | cos(n_i, n_j) + 1/(N-1) |
  double sum_norm = 0.0;           // || sum_i n_i ||
  double tol = 0.0;
  bool passed = false;
};

// Rejects impossible vector counts (N < 2 or N > d^2) before checking.
FrameValidationReport validate_frame(const DirectionalFrame& frame, double tol);

// Smallest admissible outcome count at purity kappa:
// 2 if kappa <= 1/sqrt(d-1), else ceil(kappa^2 (d-1)) + 1.
int n_min(double kappa, int dim);

// Probability-simplex vertices t_i = ((N-1)/(d-1)) n_i.
std::vector<RealVector> probability_simplex_vertices(const DirectionalFrame& frame);

}  // namespace sympovm

