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

#include "sympovm/kappa_search.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sympovm/bloch.hpp"
#include "sympovm/povm.hpp"

namespace sympovm {

namespace {

constexpr int kRejectionStreak = 50;

struct RestartOutcome {
  double best_kappa = 0.0;
  RealMatrix best_vectors;
  std::uint64_t iterations = 0;
  bool converged = false;
};

RestartOutcome run_restart(const SearchConfig& config, const SuBasis& basis,
                           const DirectionalFrame& canonical, std::uint64_t seed) {
  Rng rng(seed);
  DirectionalFrame incumbent =
      rotate_frame(canonical, Orientation::random(config.dim, 1.0, rng));
  RestartOutcome outcome;
  outcome.best_kappa = kappa_max_for_frame(incumbent, basis);
  outcome.best_vectors = incumbent.vectors();

  double step = config.initial_step;
  int rejections = 0;
  for (int iter = 0; iter < config.max_iterations; ++iter) {
    if (outcome.best_kappa >= 1.0) {
      outcome.converged = true;  // objective ceiling; no strict improvement left
      break;
    }
    if (step < config.convergence_tol) {
      outcome.converged = true;
      break;
    }
    ++outcome.iterations;
    const DirectionalFrame candidate =
        rotate_frame(incumbent, Orientation::random(config.dim, step, rng));
    const double kappa = kappa_max_for_frame(candidate, basis);
    if (kappa > outcome.best_kappa) {
      outcome.best_kappa = kappa;
      outcome.best_vectors = candidate.vectors();
      incumbent = candidate;
      rejections = 0;
    } else {
      ++rejections;
      if (rejections >= kRejectionStreak) {
        step *= config.step_decay;
        rejections = 0;
      }
    }
  }
  return outcome;
}

}  // namespace

double kappa_max_for_frame(const DirectionalFrame& frame, const SuBasis& basis) {
  const FrameValidationReport report = validate_frame(frame, 1e-9);
  if (!report.passed) {
    throw std::invalid_argument(
        "frame fails the regular-simplex invariants: norm deviation " +
        std::to_string(report.norm_deviation) + ", cosine deviation " +
        std::to_string(report.cosine_deviation) + ", sum norm " +
        std::to_string(report.sum_norm));
  }
  double best = 1.0;
  for (int i = 0; i < frame.count(); ++i) {
    best = std::min(best, kappa_max_along(frame.vector(i), basis));
  }
  return best;
}

SearchResult optimize_orientation(const SearchConfig& config, const SuBasis& basis) {
  if (config.dim < 2 || config.count < 2 || config.count > config.dim * config.dim) {
    throw std::invalid_argument("search requires d >= 2 and 2 <= N <= d^2");
  }
  if (config.dim != basis.dim()) {
    throw std::invalid_argument("config dimension " + std::to_string(config.dim) +
                                " does not match basis dimension " +
                                std::to_string(basis.dim()));
  }
  if (config.restarts < 1 || config.max_iterations < 1) {
    throw std::invalid_argument("restarts and max_iterations must be >= 1");
  }
  if (!(config.step_decay > 0.0 && config.step_decay < 1.0)) {
    throw std::invalid_argument("step_decay must lie in (0, 1)");
  }
  if (!(config.initial_step > 0.0) || !(config.convergence_tol > 0.0)) {
    throw std::invalid_argument("initial_step and convergence_tol must be positive");
  }

  const DirectionalFrame canonical = DirectionalFrame::canonical(config.dim, config.count);

  SearchResult result;
  result.per_restart_bests.reserve(static_cast<std::size_t>(config.restarts));
  for (int r = 0; r < config.restarts; ++r) {
    const RestartOutcome outcome = run_restart(
        config, basis, canonical, derive_seed(config.master_seed, static_cast<std::uint64_t>(r)));
    result.per_restart_bests.push_back(outcome.best_kappa);
    result.iterations_used += outcome.iterations;
    // Strict comparison keeps the winner the lowest-index restart on ties,
    // independent of execution order.
    if (outcome.best_kappa > result.best_kappa || !result.best_frame.has_value()) {
      result.best_kappa = outcome.best_kappa;
      result.best_frame = DirectionalFrame::from_vectors(config.dim, outcome.best_vectors);
      result.converged = outcome.converged;
    }
  }

  const double floor = 1.0 / (config.dim - 1.0);
  if (result.best_kappa < floor - 1e-12) {
    throw std::logic_error("search returned kappa " + std::to_string(result.best_kappa) +
                           " below the universal floor " + std::to_string(floor));
  }
  return result;
}

bool certify(const DirectionalFrame& frame, double kappa, const SuBasis& basis,
             double margin) {
  const double probe = kappa - margin;
  if (!(probe > 0.0 && probe <= 1.0)) {
    return false;
  }
  try {
    const SymmetricPovm povm = SymmetricPovm::build(probe, frame, basis);
    return validate_povm(povm, 1e-9).passed;
  } catch (const std::exception&) {
    return false;
  }
}

bool certify(const SearchResult& result, const SuBasis& basis, double margin) {
  if (!result.best_frame.has_value()) {
    return false;
  }
  return certify(*result.best_frame, result.best_kappa, basis, margin);
}

}  // namespace sympovm
