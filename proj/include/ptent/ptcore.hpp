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

// PT-symmetric two-level systems.
//
// The Hamiltonian family is H = [[r e^{iθ}, s], [s, r e^{-iθ}]] with real
// parameters, restricted to equal off-diagonal couplings. Its symmetry is
// unbroken when s² > r² sin²θ; the non-Hermiticity angle α is then
// arcsin(r sin θ / s) on the principal branch.
//
// The CPT inner product is realized by a metric η = (C·P)ᵀ:
//   ⟨ψ|φ⟩_CPT = [(CPT)ψ]ᵀ φ = ψ† η φ,
// with T entrywise conjugation and P the swap. This convention gives
// ⟨0|1⟩_CPT = -i tan α and reproduces the CPT bra coefficients
// ⟨ψ₊|0⟩ = e^{iα/2}/√(2cos α) used by the Bell-state evolution.

#include <string_view>

#include "ptent/linalg.hpp"

namespace ptent::ptcore {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ComplexVector;

class CPTMetric {
 public:
  /// Throws MetricSingular unless cos α >= 1e-12.
  explicit CPTMetric(double alpha);

  double alpha() const noexcept { return alpha_; }
  const ComplexMatrix& eta() const noexcept { return eta_; }

 private:
  double alpha_;
  ComplexMatrix eta_;
};

class PTHamiltonian {
 public:
  double r() const noexcept { return r_; }
  double s() const noexcept { return s_; }
  double theta() const noexcept { return theta_; }
  double alpha() const noexcept { return alpha_; }
  double e_plus() const noexcept { return e_plus_; }
  double e_minus() const noexcept { return e_minus_; }
  /// E₊ - E₋, strictly positive.
  double gap() const noexcept { return e_plus_ - e_minus_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  /// CPT-normalized eigenvectors for E₊ and E₋.
  const ComplexVector& psi_plus() const noexcept { return psi_plus_; }
  const ComplexVector& psi_minus() const noexcept { return psi_minus_; }
  CPTMetric metric() const { return CPTMetric(alpha_); }

 private:
  friend PTHamiltonian make_hamiltonian(double r, double s, double theta);
  PTHamiltonian() = default;

  double r_ = 0.0;
  double s_ = 0.0;
  double theta_ = 0.0;
  double alpha_ = 0.0;
  double e_plus_ = 0.0;
  double e_minus_ = 0.0;
  ComplexMatrix matrix_;
  ComplexVector psi_plus_;
  ComplexVector psi_minus_;
};

/// Validates unbroken symmetry and derives α, E± and ψ±.
/// Throws BrokenPTSymmetry when s² <= r² sin²θ (including s = 0) and
/// DegenerateGap when E₊ - E₋ < 1e-12.
PTHamiltonian make_hamiltonian(double r, double s, double theta);

/// The two formula eigenvectors (e^{iα/2}, e^{-iα/2})/√(2cos α) and
/// (e^{-iα/2}, -e^{iα/2})/√(2cos α), in that order.
ComplexVector upper_eigenvector(double alpha);
ComplexVector lower_eigenvector(double alpha);

/// (1/cos α)·[[i sin α, 1], [1, -i sin α]]. Throws MetricSingular.
ComplexMatrix c_operator(double alpha);
/// The parity swap [[0, 1], [1, 0]].
ComplexMatrix p_operator();
/// Time reversal on a finite vector: entrywise complex conjugation.
ComplexVector t_conjugate(const ComplexVector& v);

CPTMetric cpt_metric(double alpha);

/// ψ† η φ. Throws DimensionMismatch unless both vectors have dim 2.
Complex cpt_inner(const ComplexVector& psi, const ComplexVector& phi,
                  const CPTMetric& metric);

/// √⟨ψ|ψ⟩_CPT. Throws ZeroVector.
double cpt_norm(const ComplexVector& psi, const CPTMetric& metric);

/// Vector d with d† v = ⟨psi|v⟩_CPT for every v, i.e. the CPT bra of psi
/// written as a conventional ket.
ComplexVector cpt_dual(const ComplexVector& psi, const CPTMetric& metric);

/// |⟨ψ|ψₙ⟩|² / (‖ψ‖² ‖ψₙ‖²) in the CPT geometry. Throws ZeroVector.
double measure_probability(const ComplexVector& psi,
                           const ComplexVector& eigenstate,
                           const CPTMetric& metric);

/// Eigensystem of h with conventionally normalized vectors plus the CPT
/// duals that make the pair biorthonormal.
struct BiorthogonalSystem {
  linalg::EigenSystem eigen;
  std::vector<ComplexVector> duals;
};
BiorthogonalSystem biorthogonal_system(const PTHamiltonian& h);

/// exp(-iHt) assembled from the biorthogonal resolution of identity.
ComplexMatrix evolution_operator(const PTHamiltonian& h, double t);

/// exp(-iHt)·state. Preserves the CPT norm.
ComplexVector pt_evolve(const PTHamiltonian& h, double t,
                        const ComplexVector& state);

enum class QubitBasis { Computational, PTEigen };

/// A PTqubit. In the PTEigen basis the amplitudes are coefficients over
/// {ψ₊, ψ₋} of a particular Hamiltonian.
class PTQubitState {
 public:
  PTQubitState(ComplexVector amplitudes, QubitBasis basis);

  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  QubitBasis basis() const noexcept { return basis_; }

  /// Computational-basis vector; PTEigen amplitudes are expanded over h's ψ±.
  ComplexVector to_computational(const PTHamiltonian& h) const;

 private:
  ComplexVector amplitudes_;
  QubitBasis basis_;
};

}  // namespace ptent::ptcore
