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

#include "ptent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ptent {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::IncompleteBasis: return "IncompleteBasis";
    case ErrorKind::NotDensityMatrix: return "NotDensityMatrix";
    case ErrorKind::BrokenPTSymmetry: return "BrokenPTSymmetry";
    case ErrorKind::DegenerateGap: return "DegenerateGap";
    case ErrorKind::MetricSingular: return "MetricSingular";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace ptent

namespace ptent::linalg {

namespace {

bool descending(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream msg;
    msg << what << " must be square and nonempty, got " << m.rows() << "x"
        << m.cols();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
}

}  // namespace

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index nb_rows = b.rows();
  const Eigen::Index nb_cols = b.cols();
  ComplexMatrix out(a.rows() * nb_rows, a.cols() * nb_cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * nb_rows, j * nb_cols, nb_rows, nb_cols) = a(i, j) * b;
  return out;
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "max_abs_diff operands differ in shape");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(a, b) <= tolerance;
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return approx_equal(m, m.adjoint(), tolerance);
}

ComplexVector fix_phase(const ComplexVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > tol::kIdentity) return v * (std::conj(v(i)) / mag);
  }
  return v;
}

EigenSystem eig_general_2x2(const ComplexMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2)
    throw Error(ErrorKind::DimensionMismatch, "eig_general_2x2 needs a 2x2 matrix");

  const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const Complex half_trace = 0.5 * (a + d);
  const Complex half_diff = 0.5 * (a - d);
  const Complex root = std::sqrt(half_diff * half_diff + b * c);

  std::vector<Complex> values{half_trace + root, half_trace - root};
  std::sort(values.begin(), values.end(), descending);
  if (std::abs(values[0] - values[1]) < tol::kDegenerate) {
    throw Error(ErrorKind::DegenerateSpectrum,
                "eigenvalues coincide; eigenvectors are not unique");
  }

  EigenSystem out;
  out.values = values;
  for (const Complex& lambda : values) {
    // Either row of (m - λ) annihilates its orthogonal complement; take the
    // better-conditioned of the two candidates.
    ComplexVector from_row0(2), from_row1(2);
    from_row0 << b, lambda - a;
    from_row1 << lambda - d, c;
    ComplexVector v =
        from_row0.norm() >= from_row1.norm() ? from_row0 : from_row1;
    out.right_vectors.push_back(fix_phase(v.normalized()));
  }
  return out;
}

EigenSystem eig_hermitian(const ComplexMatrix& m) {
  require_square(m, "eig_hermitian input");
  if (!is_hermitian(m, tol::kPrecondition))
    throw Error(ErrorKind::NotHermitian, "eig_hermitian input is not Hermitian");

  // Solve on the exactly Hermitian part so the solver sees a clean input.
  const ComplexMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::NotHermitian, "Hermitian eigensolver did not converge");

  EigenSystem out;
  const Eigen::Index n = herm.rows();
  // Eigen returns ascending order.
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    out.values.emplace_back(solver.eigenvalues()(k), 0.0);
    out.right_vectors.push_back(fix_phase(solver.eigenvectors().col(k)));
  }
  return out;
}

std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m) {
  const EigenSystem es = eig_hermitian(m);
  std::vector<double> out;
  out.reserve(es.values.size());
  for (const Complex& v : es.values) out.push_back(v.real());
  return out;
}

ComplexMatrix matexp_unitary(const ComplexMatrix& h,
                             const EigenSystem& eigensystem,
                             const std::vector<ComplexVector>& dual_vectors,
                             double t) {
  require_square(h, "matexp_unitary generator");
  const auto n = static_cast<std::size_t>(h.rows());
  if (eigensystem.values.size() != n || eigensystem.right_vectors.size() != n ||
      dual_vectors.size() != n) {
    throw Error(ErrorKind::IncompleteBasis,
                "eigensystem and duals must each hold dim entries");
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (eigensystem.right_vectors[k].size() != h.rows() ||
        dual_vectors[k].size() != h.rows()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "eigenvector dimension differs from generator");
    }
    const ComplexVector residual =
        h * eigensystem.right_vectors[k] -
        eigensystem.values[k] * eigensystem.right_vectors[k];
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if (residual.norm() > tol::kPrecondition * scale)
      throw Error(ErrorKind::IncompleteBasis, "eigensystem does not diagonalize h");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex pairing = dual_vectors[i].dot(eigensystem.right_vectors[j]);
      const Complex expected = (i == j) ? Complex{1.0} : Complex{0.0};
      if (std::abs(pairing - expected) > tol::kPrecondition) {
        std::ostringstream msg;
        msg << "dual/right pairing (" << i << "," << j << ") = " << pairing
            << " is not biorthonormal";
        throw Error(ErrorKind::IncompleteBasis, msg.str());
      }
    }
  }

  ComplexMatrix u = ComplexMatrix::Zero(h.rows(), h.cols());
  for (std::size_t k = 0; k < n; ++k) {
    const Complex phase = std::exp(-kI * eigensystem.values[k] * t);
    u += phase * eigensystem.right_vectors[k] * dual_vectors[k].adjoint();
  }
  return u;
}

void require_density_matrix(const ComplexMatrix& rho, const char* what) {
  if (rho.rows() != rho.cols() || rho.rows() == 0)
    throw Error(ErrorKind::NotDensityMatrix, std::string(what) + " is not square");
  if (!is_hermitian(rho, tol::kPrecondition))
    throw Error(ErrorKind::NotDensityMatrix, std::string(what) + " is not Hermitian");
  if (std::abs(rho.trace() - Complex{1.0}) > tol::kPrecondition)
    throw Error(ErrorKind::NotDensityMatrix, std::string(what) + " does not have unit trace");
  const std::vector<double> spectrum = eigenvalues_hermitian(rho);
  if (spectrum.back() < -tol::kPrecondition)
    throw Error(ErrorKind::NotDensityMatrix, std::string(what) + " has a negative eigenvalue");
}

double spectrum_entropy(const std::vector<double>& spectrum, double log_base) {
  const double log_scale = std::log(log_base);
  double entropy = 0.0;
  for (double p : spectrum) {
    if (p <= 0.0) continue;  // 0·log 0 = 0; tiny negatives are roundoff
    entropy -= p * std::log(p) / log_scale;
  }
  return entropy;
}

double von_neumann_entropy(const ComplexMatrix& rho, double log_base) {
  require_density_matrix(rho, "entropy argument");
  return spectrum_entropy(eigenvalues_hermitian(rho), log_base);
}

double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  require_density_matrix(rho, "trace_distance first argument");
  require_density_matrix(sigma, "trace_distance second argument");
  if (rho.rows() != sigma.rows())
    throw Error(ErrorKind::NotDensityMatrix, "trace_distance operands differ in dimension");
  double sum = 0.0;
  for (double lambda : eigenvalues_hermitian(rho - sigma)) sum += std::abs(lambda);
  return 0.5 * sum;
}

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix maximally_mixed(int dim) { return identity(dim) / double(dim); }

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

ComplexVector basis_vector(int dim, int index) {
  ComplexVector e = ComplexVector::Zero(dim);
  e(index) = 1.0;
  return e;
}

}  // namespace ptent::linalg
