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

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sympovm/simplex_frames.hpp"
#include "sympovm/su_basis.hpp"
#include "sympovm/types.hpp"

namespace sympovm {

// Positivity failure during POVM construction. Carries the worst element's
// index and full spectrum so callers can steer kappa.
class PovmBuildError : public std::runtime_error {
 public:
  PovmBuildError(std::string message, int worst_index, double min_eigenvalue,
                 RealVector worst_spectrum)
      : std::runtime_error(std::move(message)),
        worst_index_(worst_index),
        min_eigenvalue_(min_eigenvalue),
        worst_spectrum_(std::move(worst_spectrum)) {}

  int worst_index() const { return worst_index_; }
  double min_eigenvalue() const { return min_eigenvalue_; }
  const RealVector& worst_spectrum() const { return worst_spectrum_; }

 private:
  int worst_index_;
  double min_eigenvalue_;
  RealVector worst_spectrum_;
};

// Measurement with elements E_i = (d/N)(I/d + kappa n_i . sigma) over a
// regular-simplex directional frame. Pairwise traces are alpha + beta d_ij.
class SymmetricPovm {
 public:
  // Builds and fully checks the elements. Throws PovmBuildError when some
  // element fails positive semidefiniteness; std::invalid_argument on
  // parameter violations (kappa outside (0,1], N below the minimum for
  // kappa, invalid frame).
  static SymmetricPovm build(double kappa, const DirectionalFrame& frame,
                             const SuBasis& basis, double tol_psd = kDefaultPsdTol);

  int dim() const { return frame_.dim(); }
  int count() const { return frame_.count(); }
  double kappa() const { return kappa_; }
  const DirectionalFrame& frame() const { return frame_; }
  const std::vector<Matrix>& elements() const { return elements_; }
  const Matrix& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }

  // Measured pairwise-trace constants, stored at construction.
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  SymmetricPovm(double kappa, DirectionalFrame frame, std::vector<Matrix> elements,
                double alpha, double beta)
      : kappa_(kappa),
        frame_(std::move(frame)),
        elements_(std::move(elements)),
        alpha_(alpha),
        beta_(beta) {}

  double kappa_;
  DirectionalFrame frame_;
  std::vector<Matrix> elements_;
  double alpha_;
  double beta_;
};

struct PovmValidationReport {
  double completeness_residual = 0.0;   // || sum E_i - I ||_F
  double trace_residual = 0.0;          // max | Tr(E_i) - d/N |
  double pair_trace_residual = 0.0;     // max | Tr(E_i E_j) - closed form |
  double min_eigenvalue = 0.0;          // min over elements
  double min_pair_distance = 0.0;       // min Frobenius distance between elements
  double tol = 0.0;
  bool distinct = false;                // all pairwise distances > 1e-8
  bool passed = false;
};

PovmValidationReport validate_povm(const SymmetricPovm& povm, double tol,
                                   double tol_psd = kDefaultPsdTol);

// Same checks on a raw element list (e.g. loaded from a file) against the
// closed forms for the claimed kappa.
PovmValidationReport validate_elements(const std::vector<Matrix>& elements, int dim,
                                       double kappa, double tol,
                                       double tol_psd = kDefaultPsdTol);

// Closed forms beta = d(d-1)/(N(N-1)) kappa^2 and alpha = (d/N - beta)/N.
struct AlphaBeta {
  double alpha = 0.0;
  double beta = 0.0;
};

AlphaBeta alpha_beta(const SymmetricPovm& povm);

// Subset of {von_neumann, informationally_complete, sic, rank_one} that the
// POVM satisfies at tolerance tol.
std::set<std::string> classify(const SymmetricPovm& povm, double tol);

}  // namespace sympovm

