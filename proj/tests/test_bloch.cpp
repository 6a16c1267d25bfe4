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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sympovm/bloch.hpp"

using namespace sympovm;

TEST_CASE("radii match the closed forms") {
  CHECK(radii(2).outer == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(radii(2).inner == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(radii(3).outer == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(radii(3).inner == doctest::Approx(1.0 / std::sqrt(12.0)).epsilon(1e-14));
  CHECK(radii(4).outer == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-14));
  CHECK(radii(4).inner == doctest::Approx(1.0 / std::sqrt(24.0)).epsilon(1e-14));
  CHECK_THROWS_AS(radii(1), std::invalid_argument);
}

TEST_CASE("zero Bloch vector gives the maximally mixed state") {
  for (int dim : {2, 3, 4}) {
    const SuBasis basis = SuBasis::generate(dim);
    const Matrix rho = density_from_bloch(RealVector::Zero(bloch_size(dim)), basis);
    CHECK((rho - Matrix::Identity(dim, dim) / dim).norm() <= 1e-15);
  }
}

TEST_CASE("qubit z-axis Bloch vector gives the |0> projector") {
  const SuBasis basis = SuBasis::generate(2);
  RealVector b(3);
  b << 0.0, 0.0, 0.5;
  Matrix expected(2, 2);
  expected << 1, 0, 0, 0;
  CHECK((density_from_bloch(b, basis) - expected).norm() <= 1e-15);
  CHECK((bloch_from_density(expected, basis) - b).norm() <= 1e-15);
}

TEST_CASE("density and Bloch conversions round trip") {
  for (int dim : {2, 3, 4}) {
    const SuBasis basis = SuBasis::generate(dim);
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix rho = random_density_matrix(dim, rng);
      const RealVector b = bloch_from_density(rho, basis);
      CHECK((density_from_bloch(b, basis) - rho).norm() <= 1e-12);

      const RealVector dir = 0.1 * random_direction(dim, rng) / radii(dim).outer;
      const RealVector readback = bloch_from_density(density_from_bloch(dir, basis), basis);
      CHECK((readback - dir).norm() <= 1e-12);
    }
  }
}

TEST_CASE("bloch_from_density rejects non-unit trace") {
  const SuBasis basis = SuBasis::generate(2);
  CHECK_THROWS_AS(bloch_from_density(Matrix::Identity(2, 2), basis), std::invalid_argument);
}

TEST_CASE("decompose factors norm and direction") {
  {
    RealVector b(3);
    b << 0.0, 0.0, 0.5;
    const PurityDecomposition p = decompose(b);
    CHECK(p.kappa == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((p.direction - b).norm() <= 1e-14);
    CHECK((compose(p) - b).norm() <= 1e-14);
  }
  {
    const PurityDecomposition p = decompose(RealVector::Zero(8));
    CHECK(p.kappa == 0.0);
    CHECK(p.direction[0] == doctest::Approx(radii(3).outer).epsilon(1e-14));
    CHECK(p.direction.tail(7).norm() == 0.0);
  }
  {
    RealVector b = RealVector::Zero(8);
    b[3] = 1.0 / std::sqrt(12.0);
    CHECK(decompose(b).kappa == doctest::Approx(0.5).epsilon(1e-13));
  }
  {
    RealVector b = RealVector::Zero(8);
    b[0] = 1.0;  // beyond the outer radius 1/sqrt(3)
    CHECK_THROWS_AS(decompose(b), std::invalid_argument);
  }
}

TEST_CASE("inner-ball points are always valid states") {
  for (int dim : {2, 3, 4, 5}) {
    const SuBasis basis = SuBasis::generate(dim);
    Rng rng(9);
    const double kappa_floor = 1.0 / (dim - 1.0);
    for (int trial = 0; trial < 50; ++trial) {
      const RealVector n = random_direction(dim, rng);
      const PositivityCheck check = is_bloch_vector(kappa_floor * n, basis);
      CHECK(check.valid);
    }
  }
}

TEST_CASE("every qubit outer-sphere point is a state") {
  const SuBasis basis = SuBasis::generate(2);
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const RealVector n = random_direction(2, rng);
    const PositivityCheck check = is_bloch_vector(n, basis);
    CHECK(check.valid);
    CHECK(check.min_eigenvalue >= -1e-12);
  }
}

TEST_CASE("star product vanishes identically for qubits") {
  const SuBasis basis = SuBasis::generate(2);
  const StructureConstants sc = StructureConstants::compute(basis);
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const RealVector b = random_direction(2, rng);
    CHECK(star_product(b, b, sc).norm() == 0.0);
  }
}

TEST_CASE("pure qutrit satisfies the star condition, boundary mixtures fail it") {
  const SuBasis basis = SuBasis::generate(3);
  const StructureConstants sc = StructureConstants::compute(basis);

  Matrix pure = Matrix::Zero(3, 3);
  pure(0, 0) = 1.0;
  const RealVector b = bloch_from_density(pure, basis);
  CHECK(b.norm() == doctest::Approx(radii(3).outer).epsilon(1e-13));
  CHECK((star_product(b, b, sc) - b / 3.0).norm() <= 1e-13);
  CHECK(pure_state_test(b, sc, 1e-9));

  // (|0><0| + |1><1|)/2 sits inside; pushed onto the outer sphere it leaves
  // the state set and violates the condition.
  Matrix half = Matrix::Zero(3, 3);
  half(0, 0) = 0.5;
  half(1, 1) = 0.5;
  const RealVector inner = bloch_from_density(half, basis);
  const RealVector outer = inner * (radii(3).outer / inner.norm());
  CHECK_FALSE(is_bloch_vector(outer, basis).valid);
  CHECK((star_product(outer, outer, sc) - outer / 3.0).norm() > 0.01);
  CHECK_FALSE(pure_state_test(outer, sc, 1e-9));

  // The negative of a pure direction also fails.
  CHECK_FALSE(is_bloch_vector(-b, basis).valid);
  CHECK_FALSE(pure_state_test(-b, sc, 1e-9));
}

TEST_CASE("Haar-random pure states pass the star condition") {
  for (int dim : {2, 3, 4, 5}) {
    const SuBasis basis = SuBasis::generate(dim);
    const StructureConstants sc = StructureConstants::compute(basis);
    Rng rng(19);
    for (int trial = 0; trial < 25; ++trial) {
      const RealVector b = bloch_from_density(random_pure_state(dim, rng), basis);
      CHECK(pure_state_test(b, sc, 1e-9));
      CHECK(is_bloch_vector(b, basis).valid);
    }
  }
}

TEST_CASE("pure_state_test rejects points off the outer sphere") {
  const SuBasis basis = SuBasis::generate(3);
  const StructureConstants sc = StructureConstants::compute(basis);
  RealVector b = RealVector::Zero(8);
  b[0] = 0.1;
  CHECK_THROWS_AS(pure_state_test(b, sc, 1e-9), std::invalid_argument);
}

TEST_CASE("state overlap reproduces matrix traces") {
  {
    PurityDecomposition p;
    p.kappa = 0.0;
    p.direction = RealVector::Zero(8);
    p.direction[0] = radii(3).outer;
    CHECK(state_overlap(p, p) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  }
  {
    const SuBasis basis = SuBasis::generate(2);
    Rng rng(23);
    const Matrix rho = random_pure_state(2, rng);
    const PurityDecomposition p = decompose(bloch_from_density(rho, basis));
    CHECK(p.kappa == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(state_overlap(p, p) == doctest::Approx(1.0).epsilon(1e-12));

    PurityDecomposition q = p;
    q.direction = -p.direction;  // antipodal qubit state is orthogonal
    CHECK(std::abs(state_overlap(p, q)) <= 1e-12);
    const Matrix sigma = density_from_bloch(compose(q), basis);
    CHECK(std::abs((rho * sigma).trace().real()) <= 1e-12);
  }
  for (int dim : {2, 3, 4}) {
    const SuBasis basis = SuBasis::generate(dim);
    Rng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix r1 = random_density_matrix(dim, rng);
      const Matrix r2 = random_density_matrix(dim, rng);
      const PurityDecomposition p1 = decompose(bloch_from_density(r1, basis));
      const PurityDecomposition p2 = decompose(bloch_from_density(r2, basis));
      const double trace = (r1 * r2).trace().real();
      CHECK(state_overlap(p1, p2) == doctest::Approx(trace).epsilon(1e-12));
      // Purity identity at kappa1 = kappa2.
      CHECK(state_overlap(p1, p1) ==
            doctest::Approx((1.0 + (dim - 1.0) * p1.kappa * p1.kappa) / dim).epsilon(1e-12));
    }
  }
}

TEST_CASE("max separation angle follows the two-branch formula") {
  CHECK(max_angle(1.0, 2) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
  CHECK(max_angle(1.0, 3) == doctest::Approx(2.0 * std::numbers::pi / 3.0).epsilon(1e-14));
  CHECK(max_angle(0.4, 5) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
  CHECK(max_angle(0.9, 3) ==
        doctest::Approx(std::acos(-1.0 / (0.81 * 2.0))).epsilon(1e-14));
  CHECK_THROWS_AS(max_angle(0.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(max_angle(1.5, 3), std::invalid_argument);
}

TEST_CASE("angles between valid equal-purity states respect the bound") {
  for (int dim : {2, 3, 4}) {
    const SuBasis basis = SuBasis::generate(dim);
    Rng rng(31);
    const double norm_sq = (dim - 1.0) / (2.0 * dim);
    for (int trial = 0; trial < 100; ++trial) {
      const RealVector n1 = random_direction(dim, rng);
      const RealVector n2 = random_direction(dim, rng);
      const double kappa =
          std::min({kappa_max_along(n1, basis), kappa_max_along(n2, basis), 1.0});
      const double cos_theta = n1.dot(n2) / norm_sq;
      // Both kappa n1 and kappa n2 are states, so their angle obeys the bound.
      CHECK(kappa * kappa * cos_theta >= -1.0 / (dim - 1.0) - 1e-12);
      const double theta = std::acos(std::clamp(cos_theta, -1.0, 1.0));
      CHECK(theta <= max_angle(kappa, dim) + 1e-9);
    }
  }
}

TEST_CASE("kappa_max_along matches the spectral oracle") {
  {
    // Pure directions admit kappa = 1.
    for (int dim : {2, 3, 4}) {
      const SuBasis basis = SuBasis::generate(dim);
      Rng rng(37);
      for (int trial = 0; trial < 10; ++trial) {
        const PurityDecomposition p =
            decompose(bloch_from_density(random_pure_state(dim, rng), basis));
        CHECK(kappa_max_along(p.direction, basis) == doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }
  {
    // Rank-deficient boundary direction of (|0><0| + |1><1|)/2 stops at 1/2.
    const SuBasis basis = SuBasis::generate(3);
    Matrix half = Matrix::Zero(3, 3);
    half(0, 0) = 0.5;
    half(1, 1) = 0.5;
    const PurityDecomposition p = decompose(bloch_from_density(half, basis));
    CHECK(kappa_max_along(p.direction, basis) == doctest::Approx(0.5).epsilon(1e-12));
  }
  {
    // Universal floor 1/(d-1) and ceiling 1 on random directions.
    for (int dim : {2, 3, 4, 5}) {
      const SuBasis basis = SuBasis::generate(dim);
      Rng rng(41);
      for (int trial = 0; trial < 50; ++trial) {
        const double k = kappa_max_along(random_direction(dim, rng), basis);
        CHECK(k >= 1.0 / (dim - 1.0) - 1e-12);
        CHECK(k <= 1.0 + 1e-12);
      }
    }
  }
  {
    const SuBasis basis = SuBasis::generate(3);
    CHECK_THROWS_AS(kappa_max_along(RealVector::Zero(8), basis), std::invalid_argument);
  }
}

TEST_CASE("hermitian_eigenvalues sorts ascending") {
  Matrix m(2, 2);
  m << 2.0, Complex(0.0, -1.0), Complex(0.0, 1.0), -1.0;
  const RealVector evals = hermitian_eigenvalues(m);
  // Eigenvalues of [[2, -i], [i, -1]] are (1 +- sqrt(13))/2.
  CHECK(evals[0] == doctest::Approx((1.0 - std::sqrt(13.0)) / 2.0).epsilon(1e-13));
  CHECK(evals[1] == doctest::Approx((1.0 + std::sqrt(13.0)) / 2.0).epsilon(1e-13));
}

TEST_CASE("random state generators emit valid states deterministically") {
  for (int dim : {2, 3, 4}) {
    Rng rng1(43);
    Rng rng2(43);
    const Matrix a = random_density_matrix(dim, rng1);
    const Matrix b = random_density_matrix(dim, rng2);
    CHECK((a - b).norm() == 0.0);
    CHECK(std::abs(a.trace() - Complex(1.0, 0.0)) <= 1e-14);
    CHECK((a - a.adjoint()).norm() <= 1e-14);
    CHECK(hermitian_eigenvalues(a)[0] >= -1e-14);

    const Matrix psi = random_pure_state(dim, rng1);
    CHECK(std::abs((psi * psi - psi).norm()) <= 1e-13);  // projector
    CHECK(std::abs(psi.trace() - Complex(1.0, 0.0)) <= 1e-13);
  }
}
