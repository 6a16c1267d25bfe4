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

#include <cstdint>
#include <map>
#include <vector>

#include "sympovm/types.hpp"

namespace sympovm {

/// Orthogonal traceless Hermitian generator basis of su(d), normalized to
/// Tr(sigma_a sigma_b) = 2 delta_ab (generalized Gell-Mann matrices).
///
/// Ordering is fixed: the d(d-1)/2 symmetric off-diagonal generators (index
/// pairs (j,k), j<k, lexicographic), then the d(d-1)/2 antisymmetric
/// off-diagonal generators in the same pair order, then the d-1 diagonal
/// generators. For d=2 this yields the Pauli matrices x, y, z.
class SuBasis {
 public:
  static SuBasis generate(int dim);

  /// Wraps explicit generators, checking shapes only; the algebraic
  /// invariants are NOT enforced here (verify_basis_relations is the checked
  /// route).
  static SuBasis from_generators(int dim, std::vector<Matrix> generators);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(generators_.size()); }
  const Matrix& generator(int a) const { return generators_.at(static_cast<std::size_t>(a)); }
  const std::vector<Matrix>& generators() const { return generators_; }

  /// sum_a coeffs[a] sigma_a; coeffs must have length d^2 - 1.
  Matrix linear_combination(const RealVector& coeffs) const;

 private:
  SuBasis(int dim, std::vector<Matrix> generators)
      : dim_(dim), generators_(std::move(generators)) {}

  int dim_;
  std::vector<Matrix> generators_;
};

/// Sparse symmetric (d_abc) and antisymmetric (f_abc) structure constants,
/// defined through Tr(sigma_a sigma_b sigma_c) = 2 d_abc + 2 i f_abc.
///
/// One entry is stored per sorted index triple a <= b <= c; lookups for other
/// orders resolve the permutation sign. Values with magnitude below the zero
/// floor are stored as exact zeros (i.e. omitted).
class StructureConstants {
 public:
  struct Entry {
    int a, b, c;  // zero-based, a <= b <= c
    double d;     // totally symmetric part
    double f;     // antisymmetric part for the sorted index order
  };

  static StructureConstants compute(const SuBasis& basis, double zero_floor = 1e-13);

  int dim() const { return dim_; }

  /// d_abc for any index order (totally symmetric).
  double d(int a, int b, int c) const;

  /// f_abc for any index order (sign flips under odd permutations).
  double f(int a, int b, int c) const;

  /// All stored nonzero triples, sorted by (a,b,c).
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::uint32_t key(int a, int b, int c) const;

  int dim_ = 0;
  int n_ = 0;  // d^2 - 1
  std::vector<Entry> entries_;
  std::map<std::uint32_t, std::size_t> index_;
};

/// Residuals of the defining su(d) relations.
struct BasisRelationsReport {
  double commutator_residual = 0.0;      // max_F || [s_a,s_b] - 2i f_abc s_c ||
  double anticommutator_residual = 0.0;  // max_F || {s_a,s_b} - (4/d) d_ab I - 2 d_abc s_c ||
  double gram_residual = 0.0;            // max |Tr(s_a s_b) - 2 delta_ab|
  double tol = 0.0;
  bool passed = false;
};

BasisRelationsReport verify_basis_relations(const SuBasis& basis,
                                            const StructureConstants& sc, double tol);

}  // namespace sympovm
