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

// Dense complex linear algebra for the 2- and 4-dimensional objects used
// throughout ptent. Matrices are Eigen dynamic-size complex types; index
// conventions are row-major in the semantic sense (m(i, j) is row i, col j).

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ptent/errors.hpp"

namespace ptent::linalg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

struct EigenSystem {
  std::vector<Complex> values;
  std::vector<ComplexVector> right_vectors;
};

/// Kronecker product with `a` as the major (slow) index:
/// (a⊗b)(i·nb + k, j·nb + l) = a(i, j)·b(k, l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);

/// Entrywise |a - b| <= tolerance. Shapes must agree.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tolerance);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& m, double tolerance = tol::kPrecondition);

/// Rotates `v` so its first nonzero component is real and positive.
ComplexVector fix_phase(const ComplexVector& v);

/// Closed-form eigensystem of a general 2x2 matrix via trace and determinant.
/// Values are sorted by descending real part (ties: descending imaginary
/// part); vectors have unit conventional norm and fixed phase.
/// Throws DegenerateSpectrum when the two roots coincide to 1e-12.
EigenSystem eig_general_2x2(const ComplexMatrix& m);

/// Hermitian eigensystem; values are real (stored with zero imaginary part),
/// descending, with orthonormal vectors. Throws NotHermitian.
EigenSystem eig_hermitian(const ComplexMatrix& m);
std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m);

/// exp(-i h t) as Σ e^{-iλₙt} |vₙ⟩⟨dualₙ|, where the duals are biorthonormal
/// to the right eigenvectors: dualₙ† vₘ = δₙₘ. Throws IncompleteBasis when
/// the eigensystem is not complete or the pairing is not the identity.
ComplexMatrix matexp_unitary(const ComplexMatrix& h,
                             const EigenSystem& eigensystem,
                             const std::vector<ComplexVector>& dual_vectors,
                             double t);

/// Checks Hermiticity, unit trace and eigenvalues >= -1e-10.
/// Throws NotDensityMatrix with `what` in the message.
void require_density_matrix(const ComplexMatrix& rho, const char* what);

/// -Σ λ log λ with 0·log 0 = 0. Throws NotDensityMatrix.
double von_neumann_entropy(const ComplexMatrix& rho, double log_base = 2.0);

/// Entropy of an explicit probability spectrum, same conventions as above.
double spectrum_entropy(const std::vector<double>& spectrum,
                        double log_base = 2.0);

/// ½ Σ |eig(rho - sigma)|. Throws NotDensityMatrix.
double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);

ComplexMatrix identity(int dim);
ComplexMatrix maximally_mixed(int dim);
ComplexMatrix projector(const ComplexVector& v);
ComplexVector basis_vector(int dim, int index);

}  // namespace ptent::linalg
