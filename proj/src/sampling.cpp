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

#include "ptent/sampling.hpp"

#include <cmath>

namespace ptent::sampling {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

linalg::ComplexVector random_vector(Rng& rng, int dim) {
  std::normal_distribution<double> normal;
  linalg::ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = {normal(rng), normal(rng)};
  return v;
}

linalg::ComplexMatrix random_unitary(Rng& rng, int dim) {
  std::normal_distribution<double> normal;
  linalg::ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = {normal(rng), normal(rng)};
  Eigen::HouseholderQR<linalg::ComplexMatrix> qr(g);
  return qr.householderQ() * linalg::identity(dim);
}

linalg::ComplexMatrix random_density_matrix(Rng& rng, int dim) {
  std::normal_distribution<double> normal;
  linalg::ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = {normal(rng), normal(rng)};
  linalg::ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

HamiltonianParams random_hamiltonian_params(Rng& rng, double max_alpha) {
  const double alpha = uniform(rng, -max_alpha, max_alpha);
  double s = uniform(rng, 0.25, 2.0);
  if (uniform(rng, 0.0, 1.0) < 0.3) s = -s;
  double theta = uniform(rng, -M_PI, M_PI);
  while (std::abs(std::sin(theta)) < 0.1) theta = uniform(rng, -M_PI, M_PI);
  return {s * std::sin(alpha) / std::sin(theta), s, theta};
}

}  // namespace ptent::sampling
