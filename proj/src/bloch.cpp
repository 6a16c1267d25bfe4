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

#include "sympovm/bloch.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sympovm {

Radii radii(int dim) {
  if (dim < 2) {
    throw std::invalid_argument("radii require d >= 2, got d = " + std::to_string(dim));
  }
  const double d = static_cast<double>(dim);
  return Radii{std::sqrt((d - 1.0) / (2.0 * d)), 1.0 / std::sqrt(2.0 * d * (d - 1.0))};
}

Matrix density_from_bloch(const RealVector& b, const SuBasis& basis) {
  if (b.size() != static_cast<Eigen::Index>(basis.size())) {
    throw std::invalid_argument("Bloch vector length " + std::to_string(b.size()) +
                                " does not match basis size " + std::to_string(basis.size()));
  }
  Matrix rho = basis.linear_combination(b);
  const double inv_d = 1.0 / basis.dim();
  for (int k = 0; k < basis.dim(); ++k) {
    rho(k, k) += inv_d;
  }
  return rho;
}

RealVector bloch_from_density(const Matrix& rho, const SuBasis& basis, double tol) {
  if (rho.rows() != basis.dim() || rho.cols() != basis.dim()) {
    throw std::invalid_argument("density matrix is " + std::to_string(rho.rows()) + "x" +
                                std::to_string(rho.cols()) + ", expected " +
                                std::to_string(basis.dim()) + "x" + std::to_string(basis.dim()));
  }
  const Complex trace = rho.trace();
  if (std::abs(trace - Complex(1.0, 0.0)) > tol) {
    throw std::invalid_argument("density matrix trace deviates from 1 by " +
                                std::to_string(std::abs(trace - Complex(1.0, 0.0))));
  }
  RealVector b(basis.size());
  const Matrix rho_t = rho.transpose();
  for (int a = 0; a < basis.size(); ++a) {
    // Tr(rho sigma_a) is real for Hermitian rho.
    b[a] = 0.5 * rho_t.cwiseProduct(basis.generator(a)).sum().real();
  }
  return b;
}

PurityDecomposition decompose(const RealVector& b) {
  const int dim = dim_from_bloch_size(b.size());
  const Radii r = radii(dim);
  const double norm = b.norm();
  if (norm > r.outer * (1.0 + 1e-10) + 1e-12) {
    throw std::invalid_argument("vector norm " + std::to_string(norm) +
                                " exceeds the outer radius " + std::to_string(r.outer));
  }
  PurityDecomposition p;
  if (norm < 1e-14) {
    p.kappa = 0.0;
    p.direction = RealVector::Zero(b.size());
    p.direction[0] = r.outer;
    return p;
  }
  p.kappa = std::min(norm / r.outer, 1.0);
  p.direction = b * (r.outer / norm);
  return p;
}

RealVector compose(const PurityDecomposition& p) {
  return p.kappa * p.direction;
}

RealVector hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigenvalue solver failed to converge");
  }
  return solver.eigenvalues();
}

PositivityCheck is_bloch_vector(const RealVector& b, const SuBasis& basis, double tol_psd) {
  const RealVector evals = hermitian_eigenvalues(density_from_bloch(b, basis));
  PositivityCheck check;
  check.min_eigenvalue = evals[0];
  check.valid = evals[0] >= -tol_psd;
  return check;
}

RealVector star_product(const RealVector& b1, const RealVector& b2,
                        const StructureConstants& sc) {
  const Eigen::Index n = bloch_size(sc.dim());
  if (b1.size() != n || b2.size() != n) {
    throw std::invalid_argument("star product operands must have length " + std::to_string(n));
  }
  RealVector out = RealVector::Zero(n);
  // Expand each stored sorted triple over its distinct permutations; d_abc is
  // totally symmetric, so the multiplicity pattern is all that matters.
  for (const auto& e : sc.entries()) {
    if (e.d == 0.0) continue;
    const int a = e.a, b = e.b, c = e.c;
    if (a == b && b == c) {
      out[a] += e.d * b1[a] * b2[a];
    } else if (a == b) {
      out[a] += e.d * (b1[a] * b2[c] + b1[c] * b2[a]);
      out[c] += e.d * b1[a] * b2[a];
    } else if (b == c) {
      out[a] += e.d * b1[b] * b2[b];
      out[b] += e.d * (b1[a] * b2[b] + b1[b] * b2[a]);
    } else {
      out[a] += e.d * (b1[b] * b2[c] + b1[c] * b2[b]);
      out[b] += e.d * (b1[a] * b2[c] + b1[c] * b2[a]);
      out[c] += e.d * (b1[a] * b2[b] + b1[b] * b2[a]);
    }
  }
  return out;
}

bool pure_state_test(const RealVector& b, const StructureConstants& sc, double tol) {
  const int dim = sc.dim();
  const Radii r = radii(dim);
  if (std::abs(b.norm() - r.outer) > tol) {
    throw std::invalid_argument("pure-state test requires an outer-sphere point; norm is " +
                                std::to_string(b.norm()) + ", outer radius " +
                                std::to_string(r.outer));
  }
  const RealVector residual =
      star_product(b, b, sc) - ((dim - 2.0) / dim) * b;
  return residual.norm() <= tol;
}

double state_overlap(const PurityDecomposition& p1, const PurityDecomposition& p2) {
  if (p1.direction.size() != p2.direction.size()) {
    throw std::invalid_argument("overlap requires decompositions of equal dimension");
  }
  const int dim = p1.dim();
  const double norm_sq = (dim - 1.0) / (2.0 * dim);
  const double cos_theta = p1.direction.dot(p2.direction) / norm_sq;
  return (1.0 + (dim - 1.0) * p1.kappa * p2.kappa * cos_theta) / dim;
}

double max_angle(double kappa, int dim) {
  if (!(kappa > 0.0 && kappa <= 1.0)) {
    throw std::invalid_argument("max_angle requires kappa in (0, 1], got " +
                                std::to_string(kappa));
  }
  if (dim < 2) {
    throw std::invalid_argument("max_angle requires d >= 2");
  }
  const double threshold = 1.0 / std::sqrt(static_cast<double>(dim - 1));
  if (kappa <= threshold) {
    return std::numbers::pi;
  }
  return std::acos(-1.0 / (kappa * kappa * (dim - 1)));
}

double kappa_max_along(const RealVector& n, const SuBasis& basis) {
  const int dim = basis.dim();
  const Radii r = radii(dim);
  if (std::abs(n.norm() - r.outer) > 1e-10) {
    throw std::invalid_argument("direction norm " + std::to_string(n.norm()) +
                                " deviates from sqrt((d-1)/(2d)) = " + std::to_string(r.outer));
  }
  const RealVector evals = hermitian_eigenvalues(basis.linear_combination(n));
  // n . sigma is traceless and nonzero, so its minimum eigenvalue is < 0.
  return -1.0 / (dim * evals[0]);
}

Matrix random_pure_state(int dim, Rng& rng) {
  Eigen::VectorXcd psi(dim);
  for (int k = 0; k < dim; ++k) {
    psi[k] = Complex(rng.gaussian(), rng.gaussian());
  }
  psi /= psi.norm();
  return psi * psi.adjoint();
}

Matrix random_density_matrix(int dim, Rng& rng) {
  Matrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      g(r, c) = Complex(rng.gaussian(), rng.gaussian());
    }
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return rho;
}

RealVector random_direction(int dim, Rng& rng) {
  const Eigen::Index n = bloch_size(dim);
  RealVector v(n);
  double norm = 0.0;
  do {
    for (Eigen::Index k = 0; k < n; ++k) {
      v[k] = rng.gaussian();
    }
    norm = v.norm();
  } while (norm < 1e-12);
  return v * (radii(dim).outer / norm);
}

}  // namespace sympovm
