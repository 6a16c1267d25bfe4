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

#include "sympovm/povm.hpp"

#include <cmath>
#include <limits>

#include "sympovm/bloch.hpp"

namespace sympovm {

namespace {

// Frobenius distance below which two elements count as coincident.
constexpr double kDistinctnessFloor = 1e-8;

// Guard on measured-vs-closed-form alpha/beta at construction; a frame with
// the wrong Gram matrix lands far above this.
constexpr double kAlphaBetaGuard = 1e-8;

double real_trace_product(const Matrix& x, const Matrix& y) {
  return x.transpose().cwiseProduct(y).sum().real();
}

AlphaBeta closed_form_alpha_beta(int dim, int count, double kappa) {
  AlphaBeta ab;
  const double d = dim;
  const double n = count;
  ab.beta = d * (d - 1.0) / (n * (n - 1.0)) * kappa * kappa;
  ab.alpha = (d / n - ab.beta) / n;
  return ab;
}

AlphaBeta measured_alpha_beta(const std::vector<Matrix>& elements) {
  const int count = static_cast<int>(elements.size());
  double off_sum = 0.0;
  double diag_sum = 0.0;
  for (int i = 0; i < count; ++i) {
    diag_sum += real_trace_product(elements[static_cast<std::size_t>(i)],
                                   elements[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < count; ++j) {
      off_sum += real_trace_product(elements[static_cast<std::size_t>(i)],
                                    elements[static_cast<std::size_t>(j)]);
    }
  }
  AlphaBeta ab;
  ab.alpha = off_sum / (count * (count - 1.0) / 2.0);
  ab.beta = diag_sum / count - ab.alpha;
  return ab;
}

}  // namespace

SymmetricPovm SymmetricPovm::build(double kappa, const DirectionalFrame& frame,
                                   const SuBasis& basis, double tol_psd) {
  if (!(kappa > 0.0 && kappa <= 1.0)) {
    throw std::invalid_argument("kappa must lie in (0, 1], got " + std::to_string(kappa));
  }
  if (frame.dim() != basis.dim()) {
    throw std::invalid_argument("frame dimension " + std::to_string(frame.dim()) +
                                " does not match basis dimension " +
                                std::to_string(basis.dim()));
  }
  const FrameValidationReport frame_report = validate_frame(frame, 1e-10);
  if (!frame_report.passed) {
    throw std::invalid_argument(
        "frame fails the regular-simplex invariants: norm deviation " +
        std::to_string(frame_report.norm_deviation) + ", cosine deviation " +
        std::to_string(frame_report.cosine_deviation) + ", sum norm " +
        std::to_string(frame_report.sum_norm));
  }
  const int dim = frame.dim();
  const int count = frame.count();
  const int min_count = n_min(kappa, dim);
  if (count < min_count) {
    throw std::invalid_argument("kappa = " + std::to_string(kappa) + " requires at least " +
                                std::to_string(min_count) + " outcomes, got " +
                                std::to_string(count));
  }

  const double weight = static_cast<double>(dim) / count;
  std::vector<Matrix> elements;
  elements.reserve(static_cast<std::size_t>(count));
  int worst_index = -1;
  double worst_eig = std::numeric_limits<double>::infinity();
  RealVector worst_spectrum;
  for (int i = 0; i < count; ++i) {
    Matrix e = weight * density_from_bloch(kappa * frame.vector(i), basis);
    const RealVector evals = hermitian_eigenvalues(e);
    if (evals[0] < worst_eig) {
      worst_eig = evals[0];
      worst_index = i;
      worst_spectrum = evals;
    }
    elements.push_back(std::move(e));
  }
  if (worst_eig < -tol_psd) {
    throw PovmBuildError("element " + std::to_string(worst_index) +
                             " is not positive semidefinite: min eigenvalue " +
                             std::to_string(worst_eig) +
                             " (kappa too large for this orientation)",
                         worst_index, worst_eig, std::move(worst_spectrum));
  }

  const AlphaBeta measured = measured_alpha_beta(elements);
  const AlphaBeta closed = closed_form_alpha_beta(dim, count, kappa);
  if (std::abs(measured.alpha - closed.alpha) > kAlphaBetaGuard ||
      std::abs(measured.beta - closed.beta) > kAlphaBetaGuard) {
    throw std::invalid_argument(
        "measured pairwise-trace constants deviate from their closed forms: alpha " +
        std::to_string(measured.alpha) + " vs " + std::to_string(closed.alpha) + ", beta " +
        std::to_string(measured.beta) + " vs " + std::to_string(closed.beta));
  }

  return SymmetricPovm(kappa, frame, std::move(elements), measured.alpha, measured.beta);
}

PovmValidationReport validate_povm(const SymmetricPovm& povm, double tol, double tol_psd) {
  return validate_elements(povm.elements(), povm.dim(), povm.kappa(), tol, tol_psd);
}

PovmValidationReport validate_elements(const std::vector<Matrix>& elements, int dim,
                                       double kappa, double tol, double tol_psd) {
  const int count = static_cast<int>(elements.size());
  if (count < 2) {
    throw std::invalid_argument("a POVM needs at least two elements");
  }
  const AlphaBeta closed = closed_form_alpha_beta(dim, count, kappa);

  PovmValidationReport report;
  report.tol = tol;
  report.min_eigenvalue = std::numeric_limits<double>::infinity();
  report.min_pair_distance = std::numeric_limits<double>::infinity();

  Matrix sum = Matrix::Zero(dim, dim);
  for (int i = 0; i < count; ++i) {
    const Matrix& e = elements[static_cast<std::size_t>(i)];
    sum += e;
    report.trace_residual =
        std::max(report.trace_residual,
                 std::abs(e.trace() - Complex(static_cast<double>(dim) / count, 0.0)));
    report.min_eigenvalue = std::min(report.min_eigenvalue, hermitian_eigenvalues(e)[0]);
    for (int j = 0; j < count; ++j) {
      const double expected = closed.alpha + (i == j ? closed.beta : 0.0);
      const double measured = real_trace_product(e, elements[static_cast<std::size_t>(j)]);
      report.pair_trace_residual =
          std::max(report.pair_trace_residual, std::abs(measured - expected));
      if (j > i) {
        report.min_pair_distance =
            std::min(report.min_pair_distance,
                     (e - elements[static_cast<std::size_t>(j)]).norm());
      }
    }
  }
  report.completeness_residual = (sum - Matrix::Identity(dim, dim)).norm();
  report.distinct = report.min_pair_distance > kDistinctnessFloor;
  report.passed = report.completeness_residual <= tol && report.trace_residual <= tol &&
                  report.pair_trace_residual <= tol &&
                  report.min_eigenvalue >= -tol_psd && report.distinct;
  return report;
}

AlphaBeta alpha_beta(const SymmetricPovm& povm) {
  const AlphaBeta closed = closed_form_alpha_beta(povm.dim(), povm.count(), povm.kappa());
  const AlphaBeta measured = measured_alpha_beta(povm.elements());
  if (std::abs(measured.alpha - closed.alpha) > 1e-10 ||
      std::abs(measured.beta - closed.beta) > 1e-10) {
    throw std::runtime_error("pairwise-trace constants drifted from their closed forms");
  }
  return closed;
}

std::set<std::string> classify(const SymmetricPovm& povm, double tol) {
  const int dim = povm.dim();
  const int count = povm.count();
  std::set<std::string> labels;

  const bool unit_kappa = std::abs(povm.kappa() - 1.0) <= tol;

  if (unit_kappa) {
    // kappa = 1 makes every element proportional to a pure state; confirm by
    // spectrum: all but the largest eigenvalue vanish.
    bool rank_one = true;
    for (int i = 0; i < count && rank_one; ++i) {
      const RealVector evals = hermitian_eigenvalues(povm.element(i));
      for (Eigen::Index k = 0; k + 1 < evals.size(); ++k) {
        if (std::abs(evals[k]) > tol) {
          rank_one = false;
          break;
        }
      }
    }
    if (rank_one) {
      labels.insert("rank_one");
    }
  }

  if (count == dim * dim) {
    labels.insert("informationally_complete");
    if (unit_kappa && labels.count("rank_one") != 0) {
      labels.insert("sic");
    }
  }

  if (count == dim && unit_kappa) {
    bool orthogonal = true;
    for (int i = 0; i < count && orthogonal; ++i) {
      for (int j = 0; j < count; ++j) {
        const double expected = i == j ? 1.0 : 0.0;
        if (std::abs(real_trace_product(povm.element(i), povm.element(j)) - expected) > tol) {
          orthogonal = false;
          break;
        }
      }
    }
    if (orthogonal && labels.count("rank_one") != 0) {
      labels.insert("von_neumann");
    }
  }

  return labels;
}

}  // namespace sympovm
