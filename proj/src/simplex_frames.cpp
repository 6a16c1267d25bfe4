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

#include "sympovm/simplex_frames.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>
#include <string>

#include "sympovm/bloch.hpp"

namespace sympovm {

namespace {

void check_count_range(int dim, int count) {
  const int max_count = dim * dim;
  if (count < 2 || count > max_count) {
    throw std::invalid_argument("outcome count " + std::to_string(count) +
                                " outside the admissible range [2, " +
                                std::to_string(max_count) + "] for d = " +
                                std::to_string(dim));
  }
}

}  // namespace

DirectionalFrame DirectionalFrame::canonical(int dim, int count) {
  if (dim < 2) {
    throw std::invalid_argument("frames require d >= 2, got d = " + std::to_string(dim));
  }
  check_count_range(dim, count);

  const Eigen::Index ambient = bloch_size(dim);
  RealMatrix vectors = RealMatrix::Zero(ambient, count);
  // Vertex i of the regular simplex in R^{N-1}: coordinate k (1-based) is
  // 1/sqrt(k(k+1)) for k > i, -k/sqrt(k(k+1)) at k = i, zero below. Columns
  // have norm sqrt((N-1)/N) and pairwise dot -1/N before rescaling.
  for (int i = 0; i < count; ++i) {
    for (int k = 1; k < count; ++k) {
      const double unit = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
      if (i < k) {
        vectors(k - 1, i) = unit;
      } else if (i == k) {
        vectors(k - 1, i) = -unit * k;
      }
    }
  }
  const double target_norm = radii(dim).outer;
  const double raw_norm = std::sqrt((count - 1.0) / count);
  vectors *= target_norm / raw_norm;
  return DirectionalFrame(dim, std::move(vectors));
}

DirectionalFrame DirectionalFrame::from_vectors(int dim, RealMatrix vectors) {
  if (dim < 2) {
    throw std::invalid_argument("frames require d >= 2, got d = " + std::to_string(dim));
  }
  if (vectors.rows() != bloch_size(dim)) {
    throw std::invalid_argument("frame vectors have length " + std::to_string(vectors.rows()) +
                                ", expected " + std::to_string(bloch_size(dim)));
  }
  return DirectionalFrame(dim, std::move(vectors));
}

Eigen::Index Orientation::coefficient_count(int dim) {
  const Eigen::Index m = bloch_size(dim);
  return m * (m - 1) / 2;
}

Orientation Orientation::identity(int dim) {
  return Orientation(dim, RealVector::Zero(coefficient_count(dim)));
}

Orientation Orientation::random(int dim, double scale, Rng& rng) {
  RealVector coeffs(coefficient_count(dim));
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs[k] = scale * rng.gaussian();
  }
  return Orientation(dim, std::move(coeffs));
}

Orientation Orientation::from_coefficients(int dim, RealVector coefficients) {
  if (coefficients.size() != coefficient_count(dim)) {
    throw std::invalid_argument("orientation for d = " + std::to_string(dim) + " needs " +
                                std::to_string(coefficient_count(dim)) + " coefficients, got " +
                                std::to_string(coefficients.size()));
  }
  if (!coefficients.allFinite()) {
    throw std::invalid_argument("orientation coefficients must be finite");
  }
  return Orientation(dim, std::move(coefficients));
}

RealMatrix Orientation::rotation_matrix() const {
  const Eigen::Index m = bloch_size(dim_);
  RealMatrix a = RealMatrix::Zero(m, m);
  Eigen::Index idx = 0;
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = j + 1; k < m; ++k) {
      a(j, k) = coefficients_[idx];
      a(k, j) = -coefficients_[idx];
      ++idx;
    }
  }
  return a.exp();
}

DirectionalFrame rotate_frame(const DirectionalFrame& frame, const Orientation& o) {
  if (frame.dim() != o.dim()) {
    throw std::invalid_argument("frame dimension " + std::to_string(frame.dim()) +
                                " does not match orientation dimension " +
                                std::to_string(o.dim()));
  }
  return rotate_frame(frame, o.rotation_matrix());
}

DirectionalFrame rotate_frame(const DirectionalFrame& frame, const RealMatrix& rotation) {
  const Eigen::Index m = bloch_size(frame.dim());
  if (rotation.rows() != m || rotation.cols() != m) {
    throw std::invalid_argument("rotation matrix is " + std::to_string(rotation.rows()) + "x" +
                                std::to_string(rotation.cols()) + ", expected " +
                                std::to_string(m) + "x" + std::to_string(m));
  }
  return DirectionalFrame::from_vectors(frame.dim(), rotation * frame.vectors());
}

FrameValidationReport validate_frame(const DirectionalFrame& frame, double tol) {
  check_count_range(frame.dim(), frame.count());

  const int count = frame.count();
  const double target_norm = radii(frame.dim()).outer;
  const double target_cos = -1.0 / (count - 1.0);

  FrameValidationReport report;
  report.tol = tol;
  for (int i = 0; i < count; ++i) {
    report.norm_deviation =
        std::max(report.norm_deviation, std::abs(frame.vectors().col(i).norm() - target_norm));
  }
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const double cosine = frame.vectors().col(i).dot(frame.vectors().col(j)) /
                            (frame.vectors().col(i).norm() * frame.vectors().col(j).norm());
      report.cosine_deviation =
          std::max(report.cosine_deviation, std::abs(cosine - target_cos));
    }
  }
  report.sum_norm = frame.vectors().rowwise().sum().norm();
  report.passed = report.norm_deviation <= tol && report.cosine_deviation <= tol &&
                  report.sum_norm <= tol;
  return report;
}

int n_min(double kappa, int dim) {
  if (!(kappa > 0.0 && kappa <= 1.0)) {
    throw std::invalid_argument("n_min requires kappa in (0, 1], got " + std::to_string(kappa));
  }
  if (dim < 2) {
    throw std::invalid_argument("n_min requires d >= 2");
  }
  if (kappa <= 1.0 / std::sqrt(static_cast<double>(dim - 1))) {
    return 2;
  }
  return static_cast<int>(std::ceil(kappa * kappa * (dim - 1))) + 1;
}

std::vector<RealVector> probability_simplex_vertices(const DirectionalFrame& frame) {
  const double scale = (frame.count() - 1.0) / (frame.dim() - 1.0);
  std::vector<RealVector> vertices;
  vertices.reserve(static_cast<std::size_t>(frame.count()));
  for (int i = 0; i < frame.count(); ++i) {
    vertices.push_back(scale * frame.vector(i));
  }
  return vertices;
}

}  // namespace sympovm
