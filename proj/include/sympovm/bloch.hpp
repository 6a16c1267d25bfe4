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

#include "sympovm/rng.hpp"
#include "sympovm/su_basis.hpp"
#include "sympovm/types.hpp"

namespace sympovm {

// Radii of the smallest circumscribed and largest inscribed spheres of the
// Bloch-vector body in R^{d^2-1}.
struct Radii {
  double outer = 0.0;  // sqrt((d-1)/(2d))
  double inner = 0.0;  // 1/sqrt(2d(d-1))
};

Radii radii(int dim);

// Spherical factorization b = kappa * n with ||n|| = sqrt((d-1)/(2d)) and
// kappa in [0, 1].
struct PurityDecomposition {
  double kappa = 0.0;
  RealVector direction;  // length d^2-1, norm sqrt((d-1)/(2d))

  int dim() const { return dim_from_bloch_size(direction.size()); }
};

// Result of the positive-semidefiniteness test on a candidate Bloch vector.
struct PositivityCheck {
  bool valid = false;
  double min_eigenvalue = 0.0;
};

// rho(b) = I/d + sum_a b_a sigma_a. Hermitian with unit trace by
// construction; positivity is NOT asserted here (use is_bloch_vector).
Matrix density_from_bloch(const RealVector& b, const SuBasis& basis);

// b_a = Tr(rho sigma_a) / 2. Inverse of density_from_bloch on its image.
// Rejects matrices whose trace deviates from 1 beyond tol.
RealVector bloch_from_density(const Matrix& rho, const SuBasis& basis,
                              double tol = 1e-10);

// Factors b into (kappa, n). At ||b|| < 1e-14 returns kappa = 0 with the
// first-axis direction by convention. Rejects ||b|| beyond the outer radius.
PurityDecomposition decompose(const RealVector& b);

// Reassembles b = kappa * n.
RealVector compose(const PurityDecomposition& p);

// True iff the minimum eigenvalue of rho(b) is >= -tol_psd.
PositivityCheck is_bloch_vector(const RealVector& b, const SuBasis& basis,
                                double tol_psd = kDefaultPsdTol);

// (b1 * b2)_a = sum_{b,c} d_abc b1_b b2_c.
RealVector star_product(const RealVector& b1, const RealVector& b2,
                        const StructureConstants& sc);

// For outer-sphere points: true iff ||b*b - ((d-2)/d) b|| <= tol. Rejects
// points whose norm is not within tol of the outer radius.
bool pure_state_test(const RealVector& b, const StructureConstants& sc,
                     double tol);

// Tr(rho1 rho2) = (1 + (d-1) kappa1 kappa2 cos theta) / d.
double state_overlap(const PurityDecomposition& p1,
                     const PurityDecomposition& p2);

// Largest angle separating two Bloch directions at common purity kappa:
// pi if kappa <= 1/sqrt(d-1), else arccos(-1/(kappa^2 (d-1))).
double max_angle(double kappa, int dim);

// Largest kappa with rho(kappa * n) positive semidefinite:
// -1/(d * lambda_min(n . sigma)). Always >= 1/(d-1). Not clipped at 1.
double kappa_max_along(const RealVector& n, const SuBasis& basis);

// Ascending eigenvalues of a Hermitian matrix.
RealVector hermitian_eigenvalues(const Matrix& m);

// Haar-random pure state as a normalized vector of independent standard
// complex Gaussians.
Matrix random_pure_state(int dim, Rng& rng);

// Random full-rank density matrix: G G^dagger / Tr(G G^dagger) with G a
// complex Ginibre matrix.
Matrix random_density_matrix(int dim, Rng& rng);

// Uniformly random direction vector of norm sqrt((d-1)/(2d)) in R^{d^2-1}.
RealVector random_direction(int dim, Rng& rng);

}  // namespace sympovm

