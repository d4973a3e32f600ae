// Copyright 2026 The ptent Authors
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

// Seeded random draws used by the self-test and by the test suites.

#include <random>

#include "ptent/linalg.hpp"

namespace ptent::sampling {

using Rng = std::mt19937_64;

linalg::ComplexVector random_vector(Rng& rng, int dim);
/// Haar-like unitary from the QR factorization of a complex Gaussian matrix.
linalg::ComplexMatrix random_unitary(Rng& rng, int dim);
/// G G† / tr(G G†) for a complex Gaussian G; full rank almost surely.
linalg::ComplexMatrix random_density_matrix(Rng& rng, int dim);

struct HamiltonianParams {
  double r;
  double s;
  double theta;
};

/// Parameters with unbroken symmetry, |α| <= max_alpha, |s| in [0.25, 2] of
/// either sign and |sin θ| >= 0.1.
HamiltonianParams random_hamiltonian_params(Rng& rng, double max_alpha = 1.4);

double uniform(Rng& rng, double lo, double hi);

}  // namespace ptent::sampling
