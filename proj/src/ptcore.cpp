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

#include "ptent/ptcore.hpp"

#include <cmath>
#include <sstream>

namespace ptent::ptcore {

using linalg::kI;

namespace {

double checked_cos(double alpha) {
  const double c = std::cos(alpha);
  if (!(c >= tol::kDegenerate) || std::abs(alpha) >= M_PI_2) {
    std::ostringstream msg;
    msg << "cos(alpha) = " << c << " for alpha = " << alpha
        << "; the CPT metric needs |alpha| < pi/2";
    throw Error(ErrorKind::MetricSingular, msg.str());
  }
  return c;
}

void require_qubit(const ComplexVector& v, const char* what) {
  if (v.size() != 2)
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must have dim 2");
}

void require_nonzero(const ComplexVector& v, const char* what) {
  if (v.squaredNorm() == 0.0)
    throw Error(ErrorKind::ZeroVector, std::string(what) + " is the zero vector");
}

}  // namespace

CPTMetric::CPTMetric(double alpha) : alpha_(alpha) {
  eta_ = (c_operator(alpha) * p_operator()).transpose();
}

ComplexVector upper_eigenvector(double alpha) {
  const double norm = 1.0 / std::sqrt(2.0 * checked_cos(alpha));
  ComplexVector v(2);
  v << std::exp(kI * (alpha / 2)), std::exp(-kI * (alpha / 2));
  return norm * v;
}

ComplexVector lower_eigenvector(double alpha) {
  const double norm = 1.0 / std::sqrt(2.0 * checked_cos(alpha));
  ComplexVector v(2);
  v << std::exp(-kI * (alpha / 2)), -std::exp(kI * (alpha / 2));
  return norm * v;
}

PTHamiltonian make_hamiltonian(double r, double s, double theta) {
  const double sin_theta = std::sin(theta);
  const double discriminant = s * s - r * r * sin_theta * sin_theta;
  if (!(discriminant > 0.0)) {
    std::ostringstream msg;
    msg << "s^2 - r^2 sin^2(theta) = " << discriminant << " for (r=" << r
        << ", s=" << s << ", theta=" << theta << ")";
    throw Error(ErrorKind::BrokenPTSymmetry, msg.str());
  }
  const double root = std::sqrt(discriminant);
  if (2.0 * root < tol::kDegenerate)
    throw Error(ErrorKind::DegenerateGap, "E+ - E- is below 1e-12");

  PTHamiltonian h;
  h.r_ = r;
  h.s_ = s;
  h.theta_ = theta;
  h.alpha_ = std::asin(r * sin_theta / s);
  checked_cos(h.alpha_);
  h.e_plus_ = r * std::cos(theta) + root;
  h.e_minus_ = r * std::cos(theta) - root;

  h.matrix_.resize(2, 2);
  h.matrix_ << r * std::exp(kI * theta), s, s, r * std::exp(-kI * theta);

  // The upper vector has eigenvalue r cos θ + s cos α, which is E₊ only when
  // the coupling is positive.
  if (s > 0) {
    h.psi_plus_ = upper_eigenvector(h.alpha_);
    h.psi_minus_ = lower_eigenvector(h.alpha_);
  } else {
    h.psi_plus_ = lower_eigenvector(h.alpha_);
    h.psi_minus_ = upper_eigenvector(h.alpha_);
  }
  return h;
}

ComplexMatrix c_operator(double alpha) {
  const double c = checked_cos(alpha);
  const double s = std::sin(alpha);
  ComplexMatrix m(2, 2);
  m << kI * s, 1.0, 1.0, -kI * s;
  return m / c;
}

ComplexMatrix p_operator() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexVector t_conjugate(const ComplexVector& v) { return v.conjugate(); }

CPTMetric cpt_metric(double alpha) { return CPTMetric(alpha); }

Complex cpt_inner(const ComplexVector& psi, const ComplexVector& phi,
                  const CPTMetric& metric) {
  require_qubit(psi, "cpt_inner bra");
  require_qubit(phi, "cpt_inner ket");
  return psi.dot(metric.eta() * phi);
}

double cpt_norm(const ComplexVector& psi, const CPTMetric& metric) {
  require_nonzero(psi, "cpt_norm argument");
  return std::sqrt(cpt_inner(psi, psi, metric).real());
}

ComplexVector cpt_dual(const ComplexVector& psi, const CPTMetric& metric) {
  require_qubit(psi, "cpt_dual argument");
  return metric.eta().adjoint() * psi;
}

double measure_probability(const ComplexVector& psi,
                           const ComplexVector& eigenstate,
                           const CPTMetric& metric) {
  require_nonzero(psi, "measured state");
  require_nonzero(eigenstate, "measurement eigenstate");
  const double overlap = std::norm(cpt_inner(psi, eigenstate, metric));
  const double psi_sq = cpt_inner(psi, psi, metric).real();
  const double eig_sq = cpt_inner(eigenstate, eigenstate, metric).real();
  return overlap / (psi_sq * eig_sq);
}

BiorthogonalSystem biorthogonal_system(const PTHamiltonian& h) {
  BiorthogonalSystem out;
  out.eigen = linalg::eig_general_2x2(h.matrix());
  const CPTMetric metric = h.metric();
  for (const ComplexVector& v : out.eigen.right_vectors) {
    const double weight = cpt_inner(v, v, metric).real();
    out.duals.push_back(cpt_dual(v, metric) / weight);
  }
  return out;
}

ComplexMatrix evolution_operator(const PTHamiltonian& h, double t) {
  const BiorthogonalSystem system = biorthogonal_system(h);
  return linalg::matexp_unitary(h.matrix(), system.eigen, system.duals, t);
}

ComplexVector pt_evolve(const PTHamiltonian& h, double t,
                        const ComplexVector& state) {
  require_qubit(state, "evolved state");
  require_nonzero(state, "evolved state");
  return evolution_operator(h, t) * state;
}

PTQubitState::PTQubitState(ComplexVector amplitudes, QubitBasis basis)
    : amplitudes_(std::move(amplitudes)), basis_(basis) {
  require_qubit(amplitudes_, "PTqubit amplitudes");
  require_nonzero(amplitudes_, "PTqubit amplitudes");
}

ComplexVector PTQubitState::to_computational(const PTHamiltonian& h) const {
  if (basis_ == QubitBasis::Computational) return amplitudes_;
  return amplitudes_(0) * h.psi_plus() + amplitudes_(1) * h.psi_minus();
}

}  // namespace ptent::ptcore
