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

#include "sympovm/statistics.hpp"

#include <Eigen/QR>

#include <cmath>
#include <stdexcept>
#include <string>

#include "sympovm/bloch.hpp"

namespace sympovm {

ProbabilityVector outcome_probabilities(const Matrix& rho, const SymmetricPovm& povm,
                                        const SuBasis& basis) {
  if (rho.rows() != povm.dim() || rho.cols() != povm.dim()) {
    throw std::invalid_argument("state is " + std::to_string(rho.rows()) + "x" +
                                std::to_string(rho.cols()) + ", POVM dimension is " +
                                std::to_string(povm.dim()));
  }
  const int dim = povm.dim();
  const int count = povm.count();
  const RealVector b = bloch_from_density(rho, basis);
  const double weight = static_cast<double>(dim) / count;

  ProbabilityVector p;
  p.count = count;
  p.probs.resize(count);
  for (int i = 0; i < count; ++i) {
    p.probs[i] =
        weight * (1.0 / dim + 2.0 * povm.kappa() * b.dot(povm.frame().vector(i)));
    const double born =
        povm.element(i).transpose().cwiseProduct(rho).sum().real();
    if (std::abs(p.probs[i] - born) > 1e-12) {
      throw std::runtime_error("probability " + std::to_string(i) +
                               " disagrees between the Bloch form and Tr(rho E_i) by " +
                               std::to_string(std::abs(p.probs[i] - born)));
    }
  }
  if (std::abs(p.probs.sum() - 1.0) > 1e-12) {
    throw std::runtime_error("probabilities sum to " + std::to_string(p.probs.sum()));
  }
  return p;
}

SimplexPoint embed_point(const ProbabilityVector& p, const SymmetricPovm& povm) {
  if (p.count != povm.count()) {
    throw std::invalid_argument("probability vector has " + std::to_string(p.count) +
                                " entries, POVM has " + std::to_string(povm.count()));
  }
  const double scale = (povm.count() - 1.0) / (povm.dim() - 1.0);
  SimplexPoint v;
  v.dim = povm.dim();
  v.coords = scale * (povm.frame().vectors() * p.probs);
  return v;
}

RealVector project_onto_frame(const RealVector& b, const DirectionalFrame& frame) {
  if (b.size() != frame.vectors().rows()) {
    throw std::invalid_argument("vector length " + std::to_string(b.size()) +
                                " does not match the frame's ambient dimension " +
                                std::to_string(frame.vectors().rows()));
  }
  // Rank-revealing QR gives an orthonormal span basis; a valid N-vector frame
  // spans exactly N-1 dimensions.
  Eigen::ColPivHouseholderQR<RealMatrix> qr(frame.vectors());
  qr.setThreshold(1e-9);
  const Eigen::Index rank = qr.rank();
  if (rank < frame.count() - 1) {
    throw std::invalid_argument("frame span has rank " + std::to_string(rank) +
                                ", expected " + std::to_string(frame.count() - 1));
  }
  const RealMatrix q =
      qr.householderQ() * RealMatrix::Identity(frame.vectors().rows(), rank);
  return q * (q.transpose() * b);
}

double verify_projection_theorem(const Matrix& rho, const SymmetricPovm& povm,
                                 const SuBasis& basis) {
  const ProbabilityVector p = outcome_probabilities(rho, povm, basis);
  const SimplexPoint v = embed_point(p, povm);
  const RealVector b = bloch_from_density(rho, basis);
  const RealVector b_parallel = project_onto_frame(b, povm.frame());
  return (v.coords - povm.kappa() * b_parallel).norm();
}

Reconstruction reconstruct_state(const ProbabilityVector& p, const SymmetricPovm& povm,
                                 const SuBasis& basis, double tol_psd) {
  const int dim = povm.dim();
  if (povm.count() != dim * dim) {
    throw std::invalid_argument(
        "reconstruction requires an informationally complete POVM (N = d^2); N = " +
        std::to_string(povm.count()) + " recovers only the in-span component");
  }
  if (p.count != povm.count()) {
    throw std::invalid_argument("probability vector has " + std::to_string(p.count) +
                                " entries, POVM has " + std::to_string(povm.count()));
  }
  if (povm.kappa() < 1e-12) {
    throw std::invalid_argument("kappa below 1e-12 makes the inversion ill-posed");
  }
  const RealVector b =
      ((dim + 1.0) / povm.kappa()) * (povm.frame().vectors() * p.probs);

  Reconstruction rec;
  rec.rho = density_from_bloch(b, basis);
  const RealVector evals = hermitian_eigenvalues(rec.rho);
  rec.min_eigenvalue = evals[0];
  rec.trace_deviation = std::abs(rec.rho.trace() - Complex(1.0, 0.0));
  rec.physical = rec.min_eigenvalue >= -tol_psd;
  return rec;
}

OutcomeCounts sample_outcomes(const Matrix& rho, const SymmetricPovm& povm,
                              const SuBasis& basis, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("shots must be >= 1");
  }
  const ProbabilityVector p = outcome_probabilities(rho, povm, basis);
  const int count = p.count;
  RealVector cdf(count);
  double acc = 0.0;
  for (int i = 0; i < count; ++i) {
    acc += std::max(p.probs[i], 0.0);
    cdf[i] = acc;
  }
  cdf[count - 1] = 1.0;  // absorb rounding so the last bin is always reachable

  OutcomeCounts counts;
  counts.count = count;
  counts.tallies.assign(static_cast<std::size_t>(count), 0);
  counts.shots = shots;
  Rng rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform();
    int i = 0;
    while (i < count - 1 && u >= cdf[i]) {
      ++i;
    }
    ++counts.tallies[static_cast<std::size_t>(i)];
  }
  return counts;
}

ProbabilityVector frequencies(const OutcomeCounts& counts) {
  ProbabilityVector p;
  p.count = counts.count;
  p.probs.resize(counts.count);
  for (int i = 0; i < counts.count; ++i) {
    p.probs[i] = static_cast<double>(counts.tallies[static_cast<std::size_t>(i)]) /
                 static_cast<double>(counts.shots);
  }
  return p;
}

TomographyStats tomography_error(const Matrix& rho, const SymmetricPovm& povm,
                                 const SuBasis& basis, std::uint64_t shots, int trials,
                                 std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("trials must be >= 1");
  }
  if (povm.count() != povm.dim() * povm.dim()) {
    throw std::invalid_argument("tomography requires an informationally complete POVM");
  }
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    const OutcomeCounts counts =
        sample_outcomes(rho, povm, basis, shots, derive_seed(seed, static_cast<std::uint64_t>(t)));
    const Reconstruction rec = reconstruct_state(frequencies(counts), povm, basis);
    const double err = (rec.rho - rho).norm();
    sum += err;
    sum_sq += err * err;
  }
  TomographyStats stats;
  stats.shots = shots;
  stats.trials = trials;
  stats.mean_error = sum / trials;
  const double variance = std::max(sum_sq / trials - stats.mean_error * stats.mean_error, 0.0);
  stats.std_error = std::sqrt(variance);
  return stats;
}

}  // namespace sympovm
