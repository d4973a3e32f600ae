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

// Bipartite 2⊗2 pure states and their reduced states.
//
// Index convention, used everywhere: Alice is the major index, so the
// amplitude of |a⟩_A|b⟩_B sits at position 2·a + b.

#include <array>
#include <string>

#include "ptent/linalg.hpp"
#include "ptent/ptcore.hpp"

namespace ptent::composite {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ComplexVector;

enum class Subsystem { A, B };

/// How Alice's half is contracted when Bob's reduced state is formed.
enum class World { Conventional, CptAlice };

std::string_view to_string(World world);

class BipartiteState {
 public:
  /// Throws DimensionMismatch unless dim 4, ZeroVector on the zero vector.
  explicit BipartiteState(ComplexVector amplitudes, std::string label_a = "A",
                          std::string label_b = "B");

  static BipartiteState product(const ComplexVector& alice,
                                const ComplexVector& bob);
  /// (|00⟩ + |11⟩)/√2
  static BipartiteState bell_phi_plus();
  /// (|01⟩ - |10⟩)/√2
  static BipartiteState singlet();

  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  const std::string& label_a() const noexcept { return label_a_; }
  const std::string& label_b() const noexcept { return label_b_; }
  double conventional_norm() const noexcept { return norm_; }

  ComplexVector normalized() const { return amplitudes_ / norm_; }
  /// Amplitudes reshaped to M(a, b).
  ComplexMatrix coefficient_matrix() const;

 private:
  ComplexVector amplitudes_;
  std::string label_a_;
  std::string label_b_;
  double norm_;
};

struct EntanglementReport {
  ComplexMatrix reduced_state;
  /// λ₊ >= λ₋.
  std::array<double, 2> eigenvalues{};
  double entropy_bits = 0.0;
  double trace_distance_to_mixed = 0.0;
  World world = World::Conventional;
};

/// Diagonalizes a 2x2 reduced state and fills in entropy and distance to I/2.
/// Throws NotDensityMatrix, or InvariantViolation if the spectrum does not sum
/// to one or the entropy leaves its admissible range.
EntanglementReport make_report(const ComplexMatrix& reduced_state, World world,
                               double log_base = 2.0);

/// ψ† (η_A ⊗ η_B) φ.
Complex joint_cpt_inner(const BipartiteState& psi, const BipartiteState& phi,
                        const ptcore::CPTMetric& metric_a,
                        const ptcore::CPTMetric& metric_b);

/// Kraus-sum partial trace Σᵢ Eᵢ ρ Eᵢ† with Eᵢ = ⟨i|⊗I (traced = A) or
/// I⊗⟨i| (traced = B) over the computational basis of the traced factor.
/// Throws NotDensityMatrix.
ComplexMatrix partial_trace_conventional(const ComplexMatrix& rho_ab,
                                         Subsystem traced);
ComplexMatrix partial_trace_conventional(const ComplexMatrix& rho_ab,
                                         Subsystem traced, int dim_a,
                                         int dim_b);

/// Bob's state when Alice's overlaps are CPT inner products and Bob's are
/// conventional: expand ψ = Σᵢ uᵢ ⊗ βᵢ over basis_a, then
/// ρ_B ∝ Σᵢⱼ ⟨uⱼ|uᵢ⟩_CPT |βᵢ⟩⟨βⱼ|, rescaled to unit trace.
/// Throws IncompleteBasis if basis_a does not span, MetricSingular via the
/// metric.
ComplexMatrix partial_trace_cpt(const BipartiteState& psi,
                                const ptcore::CPTMetric& metric_a,
                                const std::array<ComplexVector, 2>& basis_a);

/// Conventional entanglement entropy of a pure state, from tr_A; tr_B is
/// computed as well and must agree to 1e-10.
EntanglementReport entanglement_entropy(const BipartiteState& psi,
                                        double log_base = 2.0);

/// Entropy of tr_A |ψ⟩⟨ψ| for a pure state on C^{dim_a} ⊗ C^{dim_b}.
double cut_entropy(const ComplexVector& amplitudes, int dim_a, int dim_b,
                   double log_base = 2.0);

}  // namespace ptent::composite
