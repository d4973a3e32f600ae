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

#include "ptent/composite.hpp"

#include <cmath>
#include <sstream>

namespace ptent::composite {

std::string_view to_string(World world) {
  return world == World::Conventional ? "conventional" : "cpt_alice";
}

BipartiteState::BipartiteState(ComplexVector amplitudes, std::string label_a,
                               std::string label_b)
    : amplitudes_(std::move(amplitudes)),
      label_a_(std::move(label_a)),
      label_b_(std::move(label_b)) {
  if (amplitudes_.size() != 4)
    throw Error(ErrorKind::DimensionMismatch, "bipartite state must have dim 4");
  norm_ = amplitudes_.norm();
  if (norm_ == 0.0)
    throw Error(ErrorKind::ZeroVector, "bipartite state is the zero vector");
}

BipartiteState BipartiteState::product(const ComplexVector& alice,
                                       const ComplexVector& bob) {
  if (alice.size() != 2 || bob.size() != 2)
    throw Error(ErrorKind::DimensionMismatch, "product factors must have dim 2");
  return BipartiteState(linalg::tensor(alice, bob));
}

BipartiteState BipartiteState::bell_phi_plus() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return BipartiteState(v);
}

BipartiteState BipartiteState::singlet() {
  ComplexVector v = ComplexVector::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  return BipartiteState(v);
}

ComplexMatrix BipartiteState::coefficient_matrix() const {
  ComplexMatrix m(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) m(a, b) = amplitudes_(2 * a + b);
  return m;
}

EntanglementReport make_report(const ComplexMatrix& reduced_state, World world,
                               double log_base) {
  if (reduced_state.rows() != 2 || reduced_state.cols() != 2)
    throw Error(ErrorKind::DimensionMismatch, "reduced state must be 2x2");
  linalg::require_density_matrix(reduced_state, "reduced state");

  EntanglementReport report;
  report.reduced_state = reduced_state;
  report.world = world;
  const std::vector<double> spectrum = linalg::eigenvalues_hermitian(reduced_state);
  report.eigenvalues = {spectrum[0], spectrum[1]};
  report.entropy_bits = linalg::spectrum_entropy(spectrum, log_base);
  report.trace_distance_to_mixed =
      linalg::trace_distance(reduced_state, linalg::maximally_mixed(2));

  const double sum = spectrum[0] + spectrum[1];
  const double max_entropy = std::log(2.0) / std::log(log_base);
  if (std::abs(sum - 1.0) > tol::kPrecondition ||
      report.entropy_bits < -tol::kIdentity ||
      report.entropy_bits > max_entropy + tol::kIdentity) {
    std::ostringstream msg;
    msg << "report spectrum sums to " << sum << " with entropy "
        << report.entropy_bits;
    throw Error(ErrorKind::InvariantViolation, msg.str());
  }
  return report;
}

Complex joint_cpt_inner(const BipartiteState& psi, const BipartiteState& phi,
                        const ptcore::CPTMetric& metric_a,
                        const ptcore::CPTMetric& metric_b) {
  const ComplexMatrix joint = linalg::tensor(metric_a.eta(), metric_b.eta());
  return psi.amplitudes().dot(joint * phi.amplitudes());
}

ComplexMatrix partial_trace_conventional(const ComplexMatrix& rho_ab,
                                         Subsystem traced, int dim_a,
                                         int dim_b) {
  if (rho_ab.rows() != dim_a * dim_b)
    throw Error(ErrorKind::DimensionMismatch, "joint state dimension is not dim_a*dim_b");
  linalg::require_density_matrix(rho_ab, "joint state");

  const int traced_dim = traced == Subsystem::A ? dim_a : dim_b;
  const int kept_dim = traced == Subsystem::A ? dim_b : dim_a;
  ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
  for (int i = 0; i < traced_dim; ++i) {
    const ComplexMatrix bra = linalg::basis_vector(traced_dim, i).adjoint();
    const ComplexMatrix kraus = traced == Subsystem::A
                                    ? linalg::tensor(bra, linalg::identity(dim_b))
                                    : linalg::tensor(linalg::identity(dim_a), bra);
    out += kraus * rho_ab * kraus.adjoint();
  }
  return out;
}

ComplexMatrix partial_trace_conventional(const ComplexMatrix& rho_ab,
                                         Subsystem traced) {
  return partial_trace_conventional(rho_ab, traced, 2, 2);
}

ComplexMatrix partial_trace_cpt(const BipartiteState& psi,
                                const ptcore::CPTMetric& metric_a,
                                const std::array<ComplexVector, 2>& basis_a) {
  for (const ComplexVector& u : basis_a)
    if (u.size() != 2)
      throw Error(ErrorKind::DimensionMismatch, "Alice basis vectors must have dim 2");

  ComplexMatrix basis(2, 2);
  basis.col(0) = basis_a[0];
  basis.col(1) = basis_a[1];
  const double scale = basis_a[0].norm() * basis_a[1].norm();
  if (scale == 0.0 || std::abs(basis.determinant()) < tol::kPrecondition * scale)
    throw Error(ErrorKind::IncompleteBasis, "Alice basis does not span C^2");

  // Row i holds Bob's (unnormalized) partner βᵢ of the Alice vector uᵢ.
  const ComplexMatrix partners = basis.partialPivLu().solve(psi.coefficient_matrix());

  ComplexMatrix gram(2, 2);  // gram(j, i) = ⟨uⱼ|uᵢ⟩_CPT
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i)
      gram(j, i) = ptcore::cpt_inner(basis_a[j], basis_a[i], metric_a);

  const ComplexMatrix rho =
      partners.transpose() * gram.transpose() * partners.conjugate();
  const double trace = rho.trace().real();
  if (!(trace > 0.0))
    throw Error(ErrorKind::InvariantViolation, "CPT-traced state has non-positive trace");
  return rho / trace;
}

EntanglementReport entanglement_entropy(const BipartiteState& psi,
                                        double log_base) {
  const ComplexMatrix rho = linalg::projector(psi.normalized());
  const ComplexMatrix rho_b = partial_trace_conventional(rho, Subsystem::A);
  const ComplexMatrix rho_a = partial_trace_conventional(rho, Subsystem::B);

  EntanglementReport report = make_report(rho_b, World::Conventional, log_base);
  const double entropy_a = linalg::von_neumann_entropy(rho_a, log_base);
  if (std::abs(entropy_a - report.entropy_bits) > tol::kOracle) {
    std::ostringstream msg;
    msg << "entropies of the two marginals differ: " << entropy_a << " vs "
        << report.entropy_bits;
    throw Error(ErrorKind::InvariantViolation, msg.str());
  }
  return report;
}

double cut_entropy(const ComplexVector& amplitudes, int dim_a, int dim_b,
                   double log_base) {
  const double norm = amplitudes.norm();
  if (norm == 0.0) throw Error(ErrorKind::ZeroVector, "cut_entropy of the zero vector");
  const ComplexMatrix rho = linalg::projector(amplitudes / norm);
  return linalg::von_neumann_entropy(
      partial_trace_conventional(rho, Subsystem::A, dim_a, dim_b), log_base);
}

}  // namespace ptent::composite
