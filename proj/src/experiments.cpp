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

#include "ptent/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ptent::experiments {

using composite::BipartiteState;
using composite::Subsystem;
using composite::World;
using linalg::kI;

std::string_view to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::BellEvolution: return "bell_evolution";
    case Scenario::PiHalf: return "pi_half";
    case Scenario::SingletMismatch: return "singlet_mismatch";
    case Scenario::Signaling: return "signaling";
  }
  return "unknown";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
  if (name == "bell" || name == "bell_evolution") return Scenario::BellEvolution;
  if (name == "pihalf" || name == "pi_half") return Scenario::PiHalf;
  if (name == "singlet" || name == "singlet_mismatch") return Scenario::SingletMismatch;
  if (name == "signal" || name == "signaling") return Scenario::Signaling;
  return std::nullopt;
}

void validate(const SweepSpec& spec) {
  if (spec.alpha_values.empty())
    throw std::invalid_argument("alpha_values: grid is empty");
  if (spec.et_values.empty())
    throw std::invalid_argument("et_values: grid is empty");
  for (double alpha : spec.alpha_values) {
    if (!(std::abs(alpha) < kAlphaLimit)) {
      std::ostringstream msg;
      msg << "alpha_values: " << alpha << " is outside |alpha| < pi/2 - 1e-6";
      throw std::invalid_argument(msg.str());
    }
  }
  for (double et : spec.et_values) {
    if (!std::isfinite(et))
      throw std::invalid_argument("et_values: non-finite entry");
  }
}

bool k_consistent(const ScenarioResult& result, double tolerance) {
  if (!result.k_closed_form || !result.k_numeric) return true;
  return std::abs(std::abs(*result.k_closed_form) - *result.k_numeric) < tolerance;
}

ptcore::PTHamiltonian hamiltonian_for_alpha(double alpha, double s,
                                            double theta0) {
  const double r = s * std::sin(alpha) / std::sin(theta0);
  return ptcore::make_hamiltonian(r, s, theta0);
}

std::array<Complex, 4> cpt_bra_coefficients(const ptcore::PTHamiltonian& h) {
  const ptcore::CPTMetric metric = h.metric();
  const ComplexVector zero = linalg::basis_vector(2, 0);
  const ComplexVector one = linalg::basis_vector(2, 1);
  return {ptcore::cpt_inner(h.psi_plus(), zero, metric),
          ptcore::cpt_inner(h.psi_plus(), one, metric),
          ptcore::cpt_inner(h.psi_minus(), zero, metric),
          ptcore::cpt_inner(h.psi_minus(), one, metric)};
}

namespace {

// The coefficients reduce to c = e^{iα/2}/√(2cos α): the upper eigenvector
// pairs to (c, c*) and the lower one to (c*, -c).
void check_bra_coefficients(const ptcore::PTHamiltonian& h,
                            const std::array<Complex, 4>& coeffs) {
  const double alpha = h.alpha();
  const Complex c = std::exp(kI * (alpha / 2)) / std::sqrt(2.0 * std::cos(alpha));
  const std::array<Complex, 2> upper{c, std::conj(c)};
  const std::array<Complex, 2> lower{std::conj(c), -c};
  const auto& plus = h.s() > 0 ? upper : lower;
  const auto& minus = h.s() > 0 ? lower : upper;
  const std::array<Complex, 4> expected{plus[0], plus[1], minus[0], minus[1]};
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::abs(coeffs[k] - expected[k]) > tol::kIdentity) {
      std::ostringstream msg;
      msg << "CPT bra coefficient " << k << " = " << coeffs[k] << ", expected "
          << expected[k];
      throw Error(ErrorKind::InvariantViolation, msg.str());
    }
  }
}

}  // namespace

ComplexVector evolved_bell_state(const ptcore::PTHamiltonian& h, double et) {
  const double t = et / h.gap();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  ComplexVector direct = ComplexVector::Zero(4);
  for (int k = 0; k < 2; ++k) {
    const ComplexVector ket = linalg::basis_vector(2, k);
    direct += inv_sqrt2 * linalg::tensor(ptcore::pt_evolve(h, t, ket), ket);
  }

  const std::array<Complex, 4> c = cpt_bra_coefficients(h);
  check_bra_coefficients(h, c);
  ComplexVector phi_plus(2), phi_minus(2);
  phi_plus << c[0], c[1];
  phi_minus << c[2], c[3];
  const ComplexVector expanded =
      inv_sqrt2 *
      (std::exp(-kI * (h.e_plus() * t)) * linalg::tensor(h.psi_plus(), phi_plus) +
       std::exp(-kI * (h.e_minus() * t)) * linalg::tensor(h.psi_minus(), phi_minus));

  const double mismatch = (direct - expanded).cwiseAbs().maxCoeff();
  if (mismatch > tol::kOracle) {
    std::ostringstream msg;
    msg << "evolved Bell state differs from its CPT-bra expansion by " << mismatch;
    throw Error(ErrorKind::InvariantViolation, msg.str());
  }
  return direct;
}

ComplexMatrix bob_state_after_local_pt(const ptcore::PTHamiltonian& h,
                                       double et) {
  const BipartiteState evolved(evolved_bell_state(h, et));
  const ComplexMatrix rho = linalg::projector(evolved.normalized());
  return composite::partial_trace_conventional(rho, Subsystem::A);
}

ScenarioResult evolve_bell_local_pt(const ptcore::PTHamiltonian& h, double et,
                                    double log_base) {
  ScenarioResult result;
  result.alpha = h.alpha();
  result.et = et;
  result.report =
      composite::make_report(bob_state_after_local_pt(h, et), World::CptAlice, log_base);
  result.k_numeric =
      0.5 * (result.report.eigenvalues[0] - result.report.eigenvalues[1]);
  try {
    result.k_closed_form = k_of_t(h.alpha(), et);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DenominatorVanishes) throw;
  }
  return result;
}

double k_of_t(double alpha, double et) {
  const double sin_a = std::sin(alpha);
  const double cos_et = std::cos(et);
  const double sin_et = std::sin(et);
  const double denominator = 4.0 * (1.0 - cos_et * sin_a * sin_a);
  if (!(denominator > tol::kDegenerate)) {
    std::ostringstream msg;
    msg << "4(1 - cos Et sin^2 alpha) = " << denominator << " at alpha=" << alpha
        << ", Et=" << et;
    throw Error(ErrorKind::DenominatorVanishes, msg.str());
  }
  // The radicand equals 4(1 - cos Et)(2 - sin²α(1 + cos Et)) >= 0; clip the
  // roundoff below zero near Et = 0.
  const double radicand = 7.0 - 8.0 * cos_et + std::cos(2.0 * et) +
                          2.0 * std::cos(2.0 * alpha) * sin_et * sin_et;
  return std::sqrt(std::max(radicand, 0.0)) * sin_a / denominator;
}

ComplexMatrix rho_b_pi_half_closed_form(double alpha) {
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  ComplexMatrix m(2, 2);
  m << 1.0 + s * c, kI * s, -kI * s, 1.0 - s * c;
  return 0.5 * m;
}

ScenarioResult rho_b_pi_half(double alpha, double log_base) {
  ptcore::cpt_metric(alpha);  // MetricSingular outside |α| < π/2
  const ComplexMatrix closed = rho_b_pi_half_closed_form(alpha);
  const ScenarioResult pipeline =
      evolve_bell_local_pt(hamiltonian_for_alpha(alpha), M_PI_2, log_base);

  const double diff = linalg::max_abs_diff(closed, pipeline.report.reduced_state);
  if (diff > tol::kOracle) {
    std::ostringstream msg;
    msg << "Et = pi/2 closed form differs from the pipeline by " << diff;
    throw Error(ErrorKind::InvariantViolation, msg.str());
  }

  ScenarioResult result;
  result.alpha = alpha;
  result.et = M_PI_2;
  result.report = composite::make_report(closed, World::CptAlice, log_base);
  result.k_closed_form = k_of_t(alpha, M_PI_2);
  result.k_numeric = pipeline.k_numeric;
  return result;
}

ComplexMatrix singlet_closed_form(double alpha) {
  const double s = std::sin(alpha);
  ComplexMatrix m(2, 2);
  m << 1.0, kI * s, -kI * s, 1.0;
  return 0.5 * m;
}

ScenarioResult singlet_mismatch(double alpha, double log_base) {
  const ptcore::CPTMetric metric = ptcore::cpt_metric(alpha);
  const ComplexMatrix rho_b = composite::partial_trace_cpt(
      BipartiteState::singlet(), metric,
      {linalg::basis_vector(2, 0), linalg::basis_vector(2, 1)});

  ScenarioResult result;
  result.alpha = alpha;
  result.et = 0.0;
  result.report = composite::make_report(rho_b, World::CptAlice, log_base);

  const double half_sin = 0.5 * std::abs(std::sin(alpha));
  const double err = std::max(std::abs(result.report.eigenvalues[0] - (0.5 + half_sin)),
                              std::abs(result.report.eigenvalues[1] - (0.5 - half_sin)));
  if (err > tol::kOracle) {
    std::ostringstream msg;
    msg << "singlet spectrum deviates from (1 +- sin alpha)/2 by " << err;
    throw Error(ErrorKind::InvariantViolation, msg.str());
  }
  return result;
}

double signaling_demo(double alpha, double et) {
  const ComplexMatrix rho_b = bob_state_after_local_pt(hamiltonian_for_alpha(alpha), et);
  return linalg::trace_distance(linalg::maximally_mixed(2), rho_b);
}

double signaling_control(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2 ||
      !linalg::approx_equal(u.adjoint() * u, linalg::identity(2), tol::kPrecondition))
    throw Error(ErrorKind::InvariantViolation, "control arm needs a 2x2 unitary");
  const ComplexVector evolved =
      linalg::tensor(u, linalg::identity(2)) * BipartiteState::bell_phi_plus().amplitudes();
  const ComplexMatrix rho_b = composite::partial_trace_conventional(
      linalg::projector(BipartiteState(evolved).normalized()), Subsystem::A);
  return linalg::trace_distance(linalg::maximally_mixed(2), rho_b);
}

SweepOutput run_sweep(const SweepSpec& spec, double log_base,
                      double k_tolerance) {
  validate(spec);
  SweepOutput out;

  auto keep = [&](ScenarioResult row) {
    if (!k_consistent(row, k_tolerance)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "K closed form " << *row.k_closed_form << " vs numeric "
          << *row.k_numeric << " at alpha=" << row.alpha << ", Et=" << row.et;
      throw Error(ErrorKind::InvariantViolation, msg.str());
    }
    out.rows.push_back(std::move(row));
  };

  for (double alpha : spec.alpha_values) {
    switch (spec.scenario) {
      case Scenario::PiHalf:
        keep(rho_b_pi_half(alpha, log_base));
        break;
      case Scenario::SingletMismatch:
        keep(singlet_mismatch(alpha, log_base));
        break;
      case Scenario::BellEvolution:
      case Scenario::Signaling: {
        const ptcore::PTHamiltonian h = hamiltonian_for_alpha(alpha);
        for (double et : spec.et_values) {
          ScenarioResult row = evolve_bell_local_pt(h, et, log_base);
          if (!row.k_closed_form) {
            out.skipped.emplace_back(alpha, et);
            continue;
          }
          if (spec.scenario == Scenario::Signaling) {
            const double distance = signaling_demo(alpha, et);
            if (std::abs(distance - row.report.trace_distance_to_mixed) > tol::kIdentity)
              throw Error(ErrorKind::InvariantViolation,
                          "signaling distance disagrees with the report");
          }
          keep(std::move(row));
        }
        break;
      }
    }
  }

  std::sort(out.rows.begin(), out.rows.end(),
            [](const ScenarioResult& a, const ScenarioResult& b) {
              return std::pair(a.alpha, a.et) < std::pair(b.alpha, b.et);
            });
  return out;
}

}  // namespace ptent::experiments
