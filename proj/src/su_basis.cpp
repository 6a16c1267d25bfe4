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

#include "sympovm/su_basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace sympovm {

int dim_from_bloch_size(Eigen::Index size) {
  const int dim = static_cast<int>(std::lround(std::sqrt(static_cast<double>(size) + 1.0)));
  if (dim < 2 || bloch_size(dim) != size) {
    throw std::invalid_argument("vector length " + std::to_string(size) +
                                " is not d^2-1 for any dimension d >= 2");
  }
  return dim;
}

SuBasis SuBasis::generate(int dim) {
  if (dim < 2) {
    throw std::invalid_argument("su(d) basis requires d >= 2, got d = " + std::to_string(dim));
  }
  const Complex i_unit(0.0, 1.0);
  std::vector<Matrix> gens;
  gens.reserve(static_cast<std::size_t>(bloch_size(dim)));

  // Symmetric off-diagonal family: E_jk + E_kj.
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      Matrix m = Matrix::Zero(dim, dim);
      m(j, k) = 1.0;
      m(k, j) = 1.0;
      gens.push_back(std::move(m));
    }
  }
  // Antisymmetric off-diagonal family: -i E_jk + i E_kj.
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      Matrix m = Matrix::Zero(dim, dim);
      m(j, k) = -i_unit;
      m(k, j) = i_unit;
      gens.push_back(std::move(m));
    }
  }
  // Diagonal family, scaled so Tr(sigma^2) = 2.
  for (int l = 1; l < dim; ++l) {
    Matrix m = Matrix::Zero(dim, dim);
    const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (int k = 0; k < l; ++k) {
      m(k, k) = scale;
    }
    m(l, l) = -scale * static_cast<double>(l);
    gens.push_back(std::move(m));
  }
  return SuBasis(dim, std::move(gens));
}

SuBasis SuBasis::from_generators(int dim, std::vector<Matrix> generators) {
  if (dim < 2) {
    throw std::invalid_argument("su(d) basis requires d >= 2, got d = " + std::to_string(dim));
  }
  if (generators.size() != static_cast<std::size_t>(bloch_size(dim))) {
    throw std::invalid_argument("expected " + std::to_string(bloch_size(dim)) +
                                " generators, got " + std::to_string(generators.size()));
  }
  for (const Matrix& g : generators) {
    if (g.rows() != dim || g.cols() != dim) {
      throw std::invalid_argument("every generator must be " + std::to_string(dim) + "x" +
                                  std::to_string(dim));
    }
  }
  return SuBasis(dim, std::move(generators));
}

Matrix SuBasis::linear_combination(const RealVector& coeffs) const {
  if (coeffs.size() != static_cast<Eigen::Index>(generators_.size())) {
    throw std::invalid_argument("coefficient vector has length " +
                                std::to_string(coeffs.size()) + ", expected " +
                                std::to_string(generators_.size()));
  }
  Matrix out = Matrix::Zero(dim_, dim_);
  for (Eigen::Index a = 0; a < coeffs.size(); ++a) {
    if (coeffs[a] != 0.0) {
      out += coeffs[a] * generators_[static_cast<std::size_t>(a)];
    }
  }
  return out;
}

std::uint32_t StructureConstants::key(int a, int b, int c) const {
  return static_cast<std::uint32_t>((a * n_ + b) * n_ + c);
}

StructureConstants StructureConstants::compute(const SuBasis& basis, double zero_floor) {
  StructureConstants sc;
  sc.dim_ = basis.dim();
  sc.n_ = basis.size();
  const auto& gens = basis.generators();

  for (int a = 0; a < sc.n_; ++a) {
    for (int b = a; b < sc.n_; ++b) {
      const Matrix ab = gens[static_cast<std::size_t>(a)] * gens[static_cast<std::size_t>(b)];
      // Tr(AB sigma_c) = sum_ij (AB)_ij (sigma_c)_ji
      const Matrix ab_t = ab.transpose();
      for (int c = b; c < sc.n_; ++c) {
        const Complex trace = ab_t.cwiseProduct(gens[static_cast<std::size_t>(c)]).sum();
        double d_val = 0.5 * trace.real();
        double f_val = 0.5 * trace.imag();
        if (a == b || b == c) {
          f_val = 0.0;  // antisymmetry forces it; drop the arithmetic noise
        }
        if (std::abs(d_val) < zero_floor) d_val = 0.0;
        if (std::abs(f_val) < zero_floor) f_val = 0.0;
        if (d_val != 0.0 || f_val != 0.0) {
          sc.index_.emplace(sc.key(a, b, c), sc.entries_.size());
          sc.entries_.push_back({a, b, c, d_val, f_val});
        }
      }
    }
  }
  return sc;
}

namespace {

// Sorts (a,b,c) in place, returning the permutation sign.
int sort3(int& a, int& b, int& c) {
  int sign = 1;
  if (a > b) { std::swap(a, b); sign = -sign; }
  if (b > c) { std::swap(b, c); sign = -sign; }
  if (a > b) { std::swap(a, b); sign = -sign; }
  return sign;
}

}  // namespace

double StructureConstants::d(int a, int b, int c) const {
  sort3(a, b, c);
  const auto it = index_.find(key(a, b, c));
  return it == index_.end() ? 0.0 : entries_[it->second].d;
}

double StructureConstants::f(int a, int b, int c) const {
  const int sign = sort3(a, b, c);
  if (a == b || b == c) {
    return 0.0;
  }
  const auto it = index_.find(key(a, b, c));
  return it == index_.end() ? 0.0 : sign * entries_[it->second].f;
}

BasisRelationsReport verify_basis_relations(const SuBasis& basis,
                                            const StructureConstants& sc, double tol) {
  if (basis.dim() != sc.dim()) {
    throw std::invalid_argument("basis dimension " + std::to_string(basis.dim()) +
                                " does not match structure constants dimension " +
                                std::to_string(sc.dim()));
  }
  const int n = basis.size();
  const int dim = basis.dim();
  const Complex two_i(0.0, 2.0);
  const Matrix identity = Matrix::Identity(dim, dim);

  BasisRelationsReport report;
  report.tol = tol;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Matrix& sa = basis.generator(a);
      const Matrix& sb = basis.generator(b);
      const Matrix prod_ab = sa * sb;
      const Matrix prod_ba = sb * sa;

      Matrix comm = prod_ab - prod_ba;
      Matrix anti = prod_ab + prod_ba;
      if (a == b) {
        anti -= (4.0 / dim) * identity;
      }
      for (int c = 0; c < n; ++c) {
        const double f_abc = sc.f(a, b, c);
        if (f_abc != 0.0) {
          comm -= two_i * f_abc * basis.generator(c);
        }
        const double d_abc = sc.d(a, b, c);
        if (d_abc != 0.0) {
          anti -= 2.0 * d_abc * basis.generator(c);
        }
      }
      report.commutator_residual = std::max(report.commutator_residual, comm.norm());
      report.anticommutator_residual = std::max(report.anticommutator_residual, anti.norm());

      const double gram = std::abs(prod_ab.trace() - Complex(a == b ? 2.0 : 0.0, 0.0));
      report.gram_residual = std::max(report.gram_residual, gram);
    }
  }
  report.passed = report.commutator_residual <= tol &&
                  report.anticommutator_residual <= tol && report.gram_residual <= tol;
  return report;
}

}  // namespace sympovm
