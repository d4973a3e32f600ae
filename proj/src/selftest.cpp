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

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>

#include "ptent/cli.hpp"
#include "ptent/composite.hpp"
#include "ptent/sampling.hpp"

namespace ptent::cli {

namespace {

using composite::BipartiteState;
using composite::Subsystem;
using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ComplexVector;
using sampling::Rng;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  double error;      // measured deviation; boolean checks report 0 or 1
  double tolerance;  // pass iff error <= tolerance
};

Outcome holds(bool ok) { return {ok ? 0.0 : 1.0, 0.0}; }

ptcore::PTHamiltonian random_hamiltonian(Rng& rng) {
  const auto p = sampling::random_hamiltonian_params(rng);
  return ptcore::make_hamiltonian(p.r, p.s, p.theta);
}

ComplexMatrix index_sum_trace_a(const ComplexMatrix& rho) {
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  for (int b = 0; b < 2; ++b)
    for (int bp = 0; bp < 2; ++bp)
      for (int a = 0; a < 2; ++a) out(b, bp) += rho(2 * a + b, 2 * a + bp);
  return out;
}

// ---- linalg -------------------------------------------------------------

Outcome tensor_associativity(const Tolerances& t) {
  Rng rng(11);
  double err = 0.0;
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = sampling::random_unitary(rng, 2);
    const ComplexMatrix b = sampling::random_density_matrix(rng, 2);
    const ComplexMatrix c = sampling::random_unitary(rng, 2);
    err = std::max(err, linalg::max_abs_diff(linalg::tensor(linalg::tensor(a, b), c),
                                             linalg::tensor(a, linalg::tensor(b, c))));
  }
  return {err, t.identity};
}

Outcome eig_general_reconstruction(const Tolerances& t) {
  Rng rng(12);
  double err = 0.0;
  for (int k = 0; k < 50; ++k) {
    ComplexMatrix m(2, 2);
    for (int i = 0; i < 4; ++i) m(i / 2, i % 2) = {sampling::uniform(rng, -2, 2),
                                                   sampling::uniform(rng, -2, 2)};
    const auto es = linalg::eig_general_2x2(m);
    ComplexMatrix v(2, 2), d = ComplexMatrix::Zero(2, 2);
    for (int i = 0; i < 2; ++i) {
      v.col(i) = es.right_vectors[i];
      d(i, i) = es.values[i];
    }
    err = std::max(err, linalg::max_abs_diff(v * d * v.inverse(), m));
  }
  return {err, t.oracle};
}

Outcome eig_hermitian_structure(const Tolerances& t) {
  Rng rng(13);
  double err = 0.0;
  for (int k = 0; k < 50; ++k) {
    const ComplexMatrix rho = sampling::random_density_matrix(rng, 2);
    const auto es = linalg::eig_hermitian(rho);
    ComplexMatrix v(2, 2);
    v.col(0) = es.right_vectors[0];
    v.col(1) = es.right_vectors[1];
    err = std::max(err, linalg::max_abs_diff(v.adjoint() * v, linalg::identity(2)));
    const double a = rho(0, 0).real(), d = rho(1, 1).real();
    const double root = std::sqrt((a - d) * (a - d) + 4.0 * std::norm(rho(0, 1)));
    err = std::max(err, std::abs(es.values[0].real() - 0.5 * (a + d + root)));
    err = std::max(err, std::abs(es.values[1].real() - 0.5 * (a + d - root)));
  }
  return {err, t.oracle};
}

Outcome entropy_unitary_invariance(const Tolerances& t) {
  Rng rng(14);
  double err = 0.0;
  for (int dim : {2, 4}) {
    for (int k = 0; k < 25; ++k) {
      const ComplexMatrix rho = sampling::random_density_matrix(rng, dim);
      const ComplexMatrix u = sampling::random_unitary(rng, dim);
      err = std::max(err, std::abs(linalg::von_neumann_entropy(rho) -
                                   linalg::von_neumann_entropy(u * rho * u.adjoint())));
    }
  }
  return {err, t.oracle};
}

Outcome trace_distance_metric(const Tolerances& t) {
  Rng rng(15);
  double asymmetry = 0.0, triangle = 0.0;
  for (int k = 0; k < 100; ++k) {
    const ComplexMatrix a = sampling::random_density_matrix(rng, 2);
    const ComplexMatrix b = sampling::random_density_matrix(rng, 2);
    const ComplexMatrix c = sampling::random_density_matrix(rng, 2);
    const double ab = linalg::trace_distance(a, b);
    asymmetry = std::max(asymmetry, std::abs(ab - linalg::trace_distance(b, a)));
    triangle = std::max(triangle, ab - linalg::trace_distance(a, c) -
                                      linalg::trace_distance(c, b));
  }
  if (asymmetry != 0.0) return {asymmetry, 0.0};
  return {std::max(triangle, 0.0), t.identity};
}

// ---- ptcore -------------------------------------------------------------

Outcome cpt_orthonormality(const Tolerances& t) {
  Rng rng(21);
  double err = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto h = random_hamiltonian(rng);
    const auto m = h.metric();
    err = std::max({err, std::abs(ptcore::cpt_inner(h.psi_plus(), h.psi_plus(), m) - 1.0),
                    std::abs(ptcore::cpt_inner(h.psi_minus(), h.psi_minus(), m) - 1.0),
                    std::abs(ptcore::cpt_inner(h.psi_plus(), h.psi_minus(), m)),
                    std::abs(ptcore::cpt_inner(h.psi_minus(), h.psi_plus(), m))});
  }
  return {err, t.oracle};
}

Outcome c_operator_algebra(const Tolerances& t) {
  Rng rng(22);
  double err = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto h = random_hamiltonian(rng);
    const ComplexMatrix c = ptcore::c_operator(h.alpha());
    err = std::max(err, linalg::max_abs_diff(c * c, linalg::identity(2)));
    err = std::max(err, linalg::max_abs_diff(c * h.matrix(), h.matrix() * c));
  }
  return {err, t.oracle};
}

Outcome eigenpairs(const Tolerances& t) {
  Rng rng(23);
  double err = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto h = random_hamiltonian(rng);
    err = std::max(err, (h.matrix() * h.psi_plus() - h.e_plus() * h.psi_plus()).cwiseAbs().maxCoeff());
    err = std::max(err, (h.matrix() * h.psi_minus() - h.e_minus() * h.psi_minus()).cwiseAbs().maxCoeff());
  }
  return {err, t.oracle};
}

Outcome resolution_of_identity(const Tolerances& t) {
  Rng rng(24);
  double err = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto h = random_hamiltonian(rng);
    const auto m = h.metric();
    const ComplexMatrix sum =
        h.psi_plus() * ptcore::cpt_dual(h.psi_plus(), m).adjoint() +
        h.psi_minus() * ptcore::cpt_dual(h.psi_minus(), m).adjoint();
    err = std::max(err, linalg::max_abs_diff(sum, linalg::identity(2)));
  }
  return {err, t.identity};
}

Outcome metric_positive_definite(const Tolerances&) {
  double smallest = kInf;
  for (double alpha = -(M_PI_2 - 0.01); alpha <= M_PI_2 - 0.01; alpha += 0.01)
    smallest = std::min(smallest, linalg::eigenvalues_hermitian(ptcore::cpt_metric(alpha).eta()).back());
  return holds(smallest > 0.0);
}

Outcome hermitian_limit(const Tolerances& t) {
  Rng rng(25);
  double err = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double r = sampling::uniform(rng, -2, 2);
    const double s = sampling::uniform(rng, 0.25, 2);
    const auto h = ptcore::make_hamiltonian(r, s, 0.0);
    const auto m = h.metric();
    err = std::max(err, linalg::max_abs_diff(m.eta(), linalg::identity(2)));
    const ComplexVector a = sampling::random_vector(rng, 2);
    const ComplexVector b = sampling::random_vector(rng, 2);
    err = std::max(err, std::abs(ptcore::cpt_inner(a, b, m) - a.dot(b)));
    const double time = sampling::uniform(rng, -5, 5);
    const auto es = linalg::eig_hermitian(h.matrix());
    ComplexMatrix u = ComplexMatrix::Zero(2, 2);
    for (int i = 0; i < 2; ++i)
      u += std::exp(-linalg::kI * es.values[i] * time) * es.right_vectors[i] *
           es.right_vectors[i].adjoint();
    err = std::max(err, (ptcore::pt_evolve(h, time, a) - u * a).cwiseAbs().maxCoeff());
  }
  return {err, t.identity};
}

Outcome cpt_unitarity(const Tolerances& t) {
  Rng rng(26);
  double err = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto h = random_hamiltonian(rng);
    const ComplexVector psi = sampling::random_vector(rng, 2);
    const double time = sampling::uniform(rng, -10, 10);
    const auto m = h.metric();
    const double before = ptcore::cpt_norm(psi, m);
    err = std::max(err, std::abs(ptcore::cpt_norm(ptcore::pt_evolve(h, time, psi), m) - before) / before);
  }
  return {err, t.oracle};
}

Outcome conventional_norm_not_preserved(const Tolerances&) {
  const auto h = experiments::hamiltonian_for_alpha(M_PI / 6);
  const ComplexVector zero = linalg::basis_vector(2, 0);
  const double after = ptcore::pt_evolve(h, M_PI_2 / h.gap(), zero).norm();
  return holds(std::abs(after - 1.0) > 1e-3);
}

Outcome probability_completeness(const Tolerances& t) {
  Rng rng(27);
  double err = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto h = random_hamiltonian(rng);
    const ptcore::PTQubitState state(sampling::random_vector(rng, 2),
                                     ptcore::QubitBasis::PTEigen);
    const ComplexVector psi = state.to_computational(h);
    const auto m = h.metric();
    const double total = ptcore::measure_probability(psi, h.psi_plus(), m) +
                         ptcore::measure_probability(psi, h.psi_minus(), m);
    err = std::max(err, std::abs(total - 1.0));
  }
  return {err, t.identity};
}

// ---- composite ----------------------------------------------------------

Outcome local_unitary_invariance(const Tolerances& t) {
  Rng rng(31);
  double err = 0.0;
  for (int k = 0; k < 50; ++k) {
    const BipartiteState psi(sampling::random_vector(rng, 4));
    const ComplexMatrix uv = linalg::tensor(sampling::random_unitary(rng, 2),
                                            sampling::random_unitary(rng, 2));
    err = std::max(err, std::abs(composite::entanglement_entropy(psi).entropy_bits -
                                 composite::entanglement_entropy(BipartiteState(uv * psi.amplitudes())).entropy_bits));
  }
  return {err, t.oracle};
}

Outcome additivity(const Tolerances& t) {
  Rng rng(32);
  double err = 0.0;
  for (int k = 0; k < 10; ++k) {
    const ComplexVector psi = sampling::random_vector(rng, 4).normalized();
    const ComplexVector two = linalg::tensor(psi, psi);  // order a1 b1 a2 b2
    ComplexVector regrouped(16);                         // order a1 a2 b1 b2
    for (int a1 = 0; a1 < 2; ++a1)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int a2 = 0; a2 < 2; ++a2)
          for (int b2 = 0; b2 < 2; ++b2)
            regrouped(8 * a1 + 4 * a2 + 2 * b1 + b2) = two(8 * a1 + 4 * b1 + 2 * a2 + b2);
    const double single = composite::entanglement_entropy(BipartiteState(psi)).entropy_bits;
    err = std::max(err, std::abs(composite::cut_entropy(regrouped, 4, 4) - 2.0 * single));
  }
  return {err, t.oracle};
}

Outcome partial_trace_oracle(const Tolerances& t) {
  Rng rng(33);
  double err = 0.0;
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix rho = sampling::random_density_matrix(rng, 4);
    const ComplexMatrix reduced = composite::partial_trace_conventional(rho, Subsystem::A);
    err = std::max(err, linalg::max_abs_diff(reduced, index_sum_trace_a(rho)));
    err = std::max(err, std::abs(reduced.trace() - 1.0));
    err = std::max(err, std::max(0.0, -linalg::eigenvalues_hermitian(reduced).back() - t.oracle));
  }
  return {err, t.identity};
}

Outcome cpt_trace_hermitian_limit(const Tolerances& t) {
  Rng rng(34);
  double err = 0.0;
  const auto metric = ptcore::cpt_metric(0.0);
  for (int k = 0; k < 50; ++k) {
    const BipartiteState psi(sampling::random_vector(rng, 4));
    const ComplexMatrix cpt = composite::partial_trace_cpt(
        psi, metric, {linalg::basis_vector(2, 0), linalg::basis_vector(2, 1)});
    const ComplexMatrix conv = composite::partial_trace_conventional(
        linalg::projector(psi.normalized()), Subsystem::A);
    err = std::max(err, linalg::max_abs_diff(cpt, conv));
  }
  return {err, t.identity};
}

Outcome cpt_trace_basis_independence(const Tolerances& t) {
  Rng rng(35);
  double err = 0.0;
  for (int k = 0; k < 20; ++k) {
    const auto h = random_hamiltonian(rng);
    const BipartiteState psi(sampling::random_vector(rng, 4));
    const auto m = h.metric();
    err = std::max(err, linalg::max_abs_diff(
        composite::partial_trace_cpt(psi, m, {linalg::basis_vector(2, 0), linalg::basis_vector(2, 1)}),
        composite::partial_trace_cpt(psi, m, {h.psi_plus(), h.psi_minus()})));
  }
  return {err, t.oracle};
}

Outcome local_operation_no_signaling(const Tolerances& t) {
  Rng rng(36);
  double err = 0.0;
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix rho = sampling::random_density_matrix(rng, 4);
    const ComplexMatrix u = linalg::tensor(sampling::random_unitary(rng, 2), linalg::identity(2));
    err = std::max(err, linalg::max_abs_diff(
        composite::partial_trace_conventional(u * rho * u.adjoint(), Subsystem::A),
        composite::partial_trace_conventional(rho, Subsystem::A)));
  }
  return {err, t.identity};
}

// ---- experiments and acceptance grid -----------------------------------

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(n == 1 ? lo : lo + (hi - lo) * k / (n - 1));
  return out;
}

Outcome k_grid_agreement(const Tolerances& t) {
  double err = 0.0;
  for (double alpha : linspace(0.0, 1.4, 15))
    for (double et : linspace(0.0, 2 * M_PI, 15)) {
      const auto row = experiments::evolve_bell_local_pt(experiments::hamiltonian_for_alpha(alpha), et);
      if (!row.k_closed_form) continue;
      err = std::max(err, std::abs(*row.k_closed_form - *row.k_numeric));
    }
  return {err, t.oracle};
}

Outcome non_invariance_witness(const Tolerances&) {
  double lowest = kInf;
  for (double alpha : linspace(0.0, 1.4, 15))
    for (double et : linspace(0.0, 2 * M_PI, 15))
      lowest = std::min(lowest, experiments::evolve_bell_local_pt(
                                    experiments::hamiltonian_for_alpha(alpha), et)
                                    .report.entropy_bits);
  return holds(lowest < 1.0 - 1e-3);
}

Outcome signaling_equals_half_gap(const Tolerances& t) {
  double err = 0.0;
  for (double alpha : linspace(0.0, 1.4, 8))
    for (double et : linspace(0.0, 2 * M_PI, 8)) {
      const auto row = experiments::evolve_bell_local_pt(experiments::hamiltonian_for_alpha(alpha), et);
      err = std::max(err, std::abs(experiments::signaling_demo(alpha, et) - *row.k_numeric));
    }
  return {err, t.identity};
}

Outcome k_matches_pi_half(const Tolerances& t) {
  double err = 0.0;
  for (double alpha : linspace(-1.4, 1.4, 29)) {
    const double c2 = std::cos(alpha) * std::cos(alpha);
    err = std::max(err, std::abs(std::abs(experiments::k_of_t(alpha, M_PI_2)) -
                                 0.5 * std::sqrt(1.0 - c2 * c2)));
  }
  return {err, t.identity};
}

Outcome bell_hermitian_limit(const Tolerances& t) {
  const auto h = experiments::hamiltonian_for_alpha(0.0);
  double err = 0.0;
  for (double et : linspace(0.0, 2 * M_PI, 25))
    err = std::max(err, std::abs(experiments::evolve_bell_local_pt(h, et).report.entropy_bits - 1.0));
  return {err, t.identity};
}

Outcome pi_half_spectrum(const Tolerances& t) {
  double err = 0.0;
  for (double alpha : linspace(0.0, 1.4, 20)) {
    const auto row = experiments::rho_b_pi_half(alpha);
    const double c2 = std::cos(alpha) * std::cos(alpha);
    const double half_gap = 0.5 * std::sqrt(1.0 - c2 * c2);
    err = std::max({err, std::abs(row.report.eigenvalues[0] - (0.5 + half_gap)),
                    std::abs(row.report.eigenvalues[1] - (0.5 - half_gap))});
  }
  return {err, t.oracle};
}

Outcome pi_sixth_entropy_drop(const Tolerances&) {
  const auto row = experiments::evolve_bell_local_pt(
      experiments::hamiltonian_for_alpha(M_PI / 6), M_PI_2);
  return holds(1.0 - row.report.entropy_bits > 0.3);
}

Outcome singlet_spectrum(const Tolerances& t) {
  double err = 0.0;
  for (double alpha : linspace(0.0, 1.4, 20)) {
    const auto row = experiments::singlet_mismatch(alpha);
    const double s = std::sin(alpha);
    const double lp = 0.5 * (1 + s), lm = 0.5 * (1 - s);
    double expected = -lp * std::log2(lp);
    if (lm > 0) expected -= lm * std::log2(lm);
    err = std::max({err, std::abs(row.report.eigenvalues[0] - lp),
                    std::abs(row.report.eigenvalues[1] - lm),
                    std::abs(row.report.entropy_bits - expected)});
  }
  return {err, t.oracle};
}

Outcome signaling_witness(const Tolerances& t) {
  if (!(experiments::signaling_demo(M_PI / 6, M_PI_2) > 0.3)) return holds(false);
  Rng rng(41);
  double err = 0.0;
  for (int k = 0; k < 50; ++k)
    err = std::max(err, experiments::signaling_control(sampling::random_unitary(rng, 2)));
  return {err, t.identity};
}

struct NamedCheck {
  const char* name;
  std::function<Outcome(const Tolerances&)> run;
};

const std::vector<NamedCheck>& checks() {
  static const std::vector<NamedCheck> all{
      {"linalg.tensor_associativity", tensor_associativity},
      {"linalg.eig_general_reconstruction", eig_general_reconstruction},
      {"linalg.eig_hermitian_structure", eig_hermitian_structure},
      {"linalg.entropy_unitary_invariance", entropy_unitary_invariance},
      {"linalg.trace_distance_metric", trace_distance_metric},
      {"ptcore.cpt_orthonormality", cpt_orthonormality},
      {"ptcore.c_operator_algebra", c_operator_algebra},
      {"ptcore.eigenpairs", eigenpairs},
      {"ptcore.resolution_of_identity", resolution_of_identity},
      {"ptcore.metric_positive_definite", metric_positive_definite},
      {"ptcore.hermitian_limit", hermitian_limit},
      {"ptcore.cpt_unitarity", cpt_unitarity},
      {"ptcore.conventional_norm_not_preserved", conventional_norm_not_preserved},
      {"ptcore.probability_completeness", probability_completeness},
      {"composite.local_unitary_invariance", local_unitary_invariance},
      {"composite.additivity_n2", additivity},
      {"composite.partial_trace_oracle", partial_trace_oracle},
      {"composite.cpt_trace_hermitian_limit", cpt_trace_hermitian_limit},
      {"composite.cpt_trace_basis_independence", cpt_trace_basis_independence},
      {"composite.local_operation_no_signaling", local_operation_no_signaling},
      {"experiments.k_grid_agreement", k_grid_agreement},
      {"experiments.non_invariance_witness", non_invariance_witness},
      {"experiments.signaling_equals_half_gap", signaling_equals_half_gap},
      {"experiments.k_matches_pi_half", k_matches_pi_half},
      {"acceptance.bell_hermitian_limit", bell_hermitian_limit},
      {"acceptance.pi_half_spectrum", pi_half_spectrum},
      {"acceptance.pi_sixth_entropy_drop", pi_sixth_entropy_drop},
      {"acceptance.singlet_spectrum", singlet_spectrum},
      {"acceptance.signaling_witness", signaling_witness},
  };
  return all;
}

}  // namespace

int selftest(const Tolerances& tolerances, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const char* first_failure = nullptr;
  std::size_t failures = 0;

  for (const NamedCheck& check : checks()) {
    std::ostringstream line;
    line << std::setprecision(3);
    bool passed = false;
    try {
      const Outcome outcome = check.run(tolerances);
      passed = outcome.error <= outcome.tolerance;
      line << (passed ? "PASS " : "FAIL ") << check.name << "  error=" << outcome.error
           << " tol=" << outcome.tolerance;
    } catch (const std::exception& e) {
      line << "FAIL " << check.name << "  threw: " << e.what();
    }
    out << line.str() << '\n';
    if (!passed) {
      ++failures;
      if (!first_failure) first_failure = check.name;
    }
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << "selftest: " << checks().size() - failures << "/" << checks().size()
      << " passed in " << std::fixed << std::setprecision(3) << seconds << " s\n";
  if (first_failure) {
    out << "first failing check: " << first_failure << '\n';
    return kExitInvariant;
  }
  return kExitOk;
}

}  // namespace ptent::cli
