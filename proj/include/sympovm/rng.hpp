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
#include <random>

namespace sympovm {

/// Derives an independent stream seed from a master seed and a stream index
/// (splitmix64 finalizer). Used so that restarts and Monte Carlo trials get
/// per-index generators whose output does not depend on execution order.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream_index);

/// Seeded random source with fully pinned output.
///
/// The engine is std::mt19937_64, which the standard specifies bit-exactly.
/// Doubles are produced as (x >> 11) * 2^-53 and Gaussians by Box-Muller
/// rather than through std::*_distribution, whose algorithms are
/// implementation-defined. Identical seeds therefore give identical streams
/// on every platform with the same libm.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform();

  /// Standard normal.
  double gaussian();

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace sympovm
