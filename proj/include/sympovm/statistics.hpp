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
#include <vector>

#include "sympovm/povm.hpp"
#include "sympovm/rng.hpp"
#include "sympovm/su_basis.hpp"
#include "sympovm/types.hpp"

namespace sympovm {

// Outcome distribution. Entries may carry tiny negative noise (>= -1e-12);
// clamping to 0 happens only on serialization so the projection identities
// stay exact internally.
struct ProbabilityVector {
  int count = 0;
  RealVector probs;
};

// A probability vector embedded in R^{d^2-1} via the simplex vertices t_i.
struct SimplexPoint {
  int dim = 0;
  RealVector coords;
};

struct OutcomeCounts {
  int count = 0;
  std::vector<std::uint64_t> tallies;
  std::uint64_t shots = 0;
};

// Linear-inversion output. The matrix may leave the state set for noisy
// inputs; it is reported raw with diagnostics, never projected.
struct Reconstruction {
  Matrix rho;
  double min_eigenvalue = 0.0;
  double trace_deviation = 0.0;
  bool physical = false;  // min_eigenvalue >= -tol_psd
};

struct TomographyStats {
  double mean_error = 0.0;  // Frobenius distance, averaged over trials
  double std_error = 0.0;
  std::uint64_t shots = 0;
  int trials = 0;
};

// p_i = (d/N)(1/d + 2 kappa b . n_i), cross-checked against Tr(rho E_i)
// to <= 1e-12 per entry.
ProbabilityVector outcome_probabilities(const Matrix& rho, const SymmetricPovm& povm,
                                        const SuBasis& basis);

// v = sum_i p_i t_i with t_i the probability-simplex vertices.
SimplexPoint embed_point(const ProbabilityVector& p, const SymmetricPovm& povm);

// Orthogonal projection of b onto span{n_i}, computed via an orthonormal
// basis of the span. Rejects frames whose span has rank below N-1.
RealVector project_onto_frame(const RealVector& b, const DirectionalFrame& frame);

// || embed_point(outcome_probabilities(rho)) - kappa * b_parallel ||.
double verify_projection_theorem(const Matrix& rho, const SymmetricPovm& povm,
                                 const SuBasis& basis);

// rho = I/d + ((d+1)/kappa) (sum_i p_i n_i) . sigma. Requires N = d^2
// (informationally complete) and kappa >= 1e-12.
Reconstruction reconstruct_state(const ProbabilityVector& p, const SymmetricPovm& povm,
                                 const SuBasis& basis, double tol_psd = kDefaultPsdTol);

// Multinomial draw by inverse CDF; deterministic given the seed.
OutcomeCounts sample_outcomes(const Matrix& rho, const SymmetricPovm& povm,
                              const SuBasis& basis, std::uint64_t shots, std::uint64_t seed);

// Empirical frequencies tallies / shots.
ProbabilityVector frequencies(const OutcomeCounts& counts);

// Mean and standard deviation over trials of the Frobenius distance between
// rho and its reconstruction from sampled frequencies. Trial t uses the seed
// derived from (seed, t), so results do not depend on execution order.
TomographyStats tomography_error(const Matrix& rho, const SymmetricPovm& povm,
                                 const SuBasis& basis, std::uint64_t shots, int trials,
                                 std::uint64_t seed);

}  // namespace sympovm

