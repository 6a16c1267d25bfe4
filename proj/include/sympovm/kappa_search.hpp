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
#include <optional>
#include <vector>

#include "sympovm/simplex_frames.hpp"
#include "sympovm/su_basis.hpp"

namespace sympovm {

struct SearchConfig {
  int dim = 2;
  int count = 4;
  int restarts = 20;
  int max_iterations = 5000;       // per restart
  double initial_step = 0.3;
  double step_decay = 0.9;         // applied per 50-rejection streak
  double convergence_tol = 1e-8;   // stop a restart when step falls below
  std::uint64_t master_seed = 0;
};

struct SearchResult {
  double best_kappa = 0.0;
  std::optional<DirectionalFrame> best_frame;
  std::vector<double> per_restart_bests;
  std::uint64_t iterations_used = 0;  // summed over restarts
  bool converged = false;  // best restart stopped before exhausting iterations
};

// min over i of the spectral bound -1/(d lambda_min(n_i . sigma)), clipped
// at 1.0: the largest kappa for which every element stays positive
// semidefinite with this frame.
double kappa_max_for_frame(const DirectionalFrame& frame, const SuBasis& basis);

// Multi-restart stochastic hill climbing over simplex orientations. Each
// restart owns the generator seeded from (master_seed, restart index), so
// the result is independent of restart execution order. Proposals compose a
// small random rotation with the incumbent frame and are accepted on strict
// improvement; the step shrinks by step_decay after each streak of 50
// rejections and the restart stops when it falls below convergence_tol.
SearchResult optimize_orientation(const SearchConfig& config, const SuBasis& basis);

// True iff a POVM built at kappa - margin from the frame passes validation
// at 1e-9.
bool certify(const DirectionalFrame& frame, double kappa, const SuBasis& basis,
             double margin);

// Same check applied to the best frame of a search result.
bool certify(const SearchResult& result, const SuBasis& basis, double margin);

}  // namespace sympovm

