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

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "ptent/experiments.hpp"
#include "ptent/sampling.hpp"

using namespace ptent;
using namespace ptent::experiments;
using linalg::kI;
using linalg::max_abs_diff;

namespace {

void check_throws_kind(auto&& fn, ErrorKind kind) {
  try {
    fn();
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.kind() == kind);
  }
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return v;
}

double spectrum_half_gap(const ComplexMatrix& rho) {
  const auto roots = oracle::hermitian_2x2_roots(rho);
  return 0.5 * (roots[0] - roots[1]);
}

}  // namespace

TEST_CASE("hamiltonian_for_alpha realizes the requested α") {
  for (double alpha : {-1.2, -0.3, 0.0, 0.5, 1.4}) {
    const auto h = hamiltonian_for_alpha(alpha);
    CHECK(std::abs(h.alpha() - alpha) < 1e-14);
    CHECK(h.s() == 1.0);
    CHECK(h.theta() == M_PI_2);
    CHECK(std::abs(h.gap() - 2.0 * std::cos(alpha)) < 1e-12);
  }
  const auto h = hamiltonian_for_alpha(0.4, 2.0, 1.0);
  CHECK(std::abs(h.alpha() - 0.4) < 1e-14);
  CHECK(std::abs(h.r() - 2.0 * std::sin(0.4) / std::sin(1.0)) < 1e-14);
}

TEST_CASE("CPT bra coefficients reduce to c and c*") {
  for (double alpha : linspace(-1.4, 1.4, 29)) {
    const auto h = hamiltonian_for_alpha(alpha);
    const Complex c = std::exp(kI * (alpha / 2)) / std::sqrt(2.0 * std::cos(alpha));
    const auto coeffs = cpt_bra_coefficients(h);
    CHECK(std::abs(coeffs[0] - c) <= 1e-12);
    CHECK(std::abs(coeffs[1] - std::conj(c)) <= 1e-12);
    CHECK(std::abs(coeffs[2] - std::conj(c)) <= 1e-12);
    CHECK(std::abs(coeffs[3] + c) <= 1e-12);
  }
}

TEST_CASE("evolved Bell state matches exp(-iHt)⊗I applied to |Φ+⟩") {
  const ComplexVector bell = composite::BipartiteState::bell_phi_plus().amplitudes();
  for (double alpha : {-0.9, 0.0, 0.3, 1.1, 1.4}) {
    const auto h = hamiltonian_for_alpha(alpha);
    for (double et : linspace(0.0, 2 * M_PI, 9)) {
      const ComplexMatrix u = oracle::exp_scaled(h.matrix(), et / h.gap());
      const ComplexVector expected = oracle::kron(u, ComplexMatrix::Identity(2, 2)) * bell;
      CHECK((evolved_bell_state(h, et) - expected).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("Bob's state agrees with the closed form on a grid") {
  for (double alpha : linspace(-1.4, 1.4, 15))
    for (double et : linspace(0.0, 2 * M_PI, 15)) {
      const auto h = hamiltonian_for_alpha(alpha);
      CHECK(oracle::max_abs(bob_state_after_local_pt(h, et),
                            oracle::bob_state_closed_form(alpha, et)) <= 1e-10);
    }
}

TEST_CASE("evolve_bell_local_pt examples") {
  for (double et : linspace(0.0, 2 * M_PI, 25)) {
    const auto r = evolve_bell_local_pt(hamiltonian_for_alpha(0.0), et);
    CHECK(std::abs(r.report.entropy_bits - 1.0) <= 1e-12);
  }
  for (double alpha : {0.2, 0.9, 1.3}) {
    const auto r = evolve_bell_local_pt(hamiltonian_for_alpha(alpha), 0.0);
    CHECK(max_abs_diff(r.report.reduced_state, linalg::maximally_mixed(2)) <= 1e-12);
    CHECK(std::abs(r.report.entropy_bits - 1.0) <= 1e-12);
  }
  const auto r = evolve_bell_local_pt(hamiltonian_for_alpha(M_PI / 6), M_PI_2);
  CHECK(std::abs(r.report.eigenvalues[0] - 0.830718913883073824) <= 1e-10);
  CHECK(std::abs(r.report.eigenvalues[1] - 0.169281086116926176) <= 1e-10);
  CHECK(std::abs(r.report.entropy_bits - 0.656057562972714689) <= 1e-10);
  CHECK(r.report.world == composite::World::CptAlice);
  REQUIRE(r.k_closed_form);
  REQUIRE(r.k_numeric);
  CHECK(std::abs(*r.k_numeric - std::sqrt(7.0) / 8) <= 1e-10);
}

TEST_CASE("evolution is independent of the realizing Hamiltonian") {
  const double alpha = 0.7, et = 2.3;
  const ComplexMatrix reference = bob_state_after_local_pt(hamiltonian_for_alpha(alpha), et);
  for (auto [s, theta] : {std::pair{0.5, 1.0}, {2.0, 0.4}, {1.3, 2.5}}) {
    const auto h = hamiltonian_for_alpha(alpha, s, theta);
    CHECK(max_abs_diff(bob_state_after_local_pt(h, et), reference) <= 1e-10);
  }
}

TEST_CASE("k_of_t examples") {
  for (double alpha : {-1.0, 0.3, 1.4}) CHECK(std::abs(k_of_t(alpha, 0.0)) <= 1e-12);
  for (double et : linspace(0.0, 2 * M_PI, 11)) CHECK(k_of_t(0.0, et) == 0.0);
  CHECK(std::abs(k_of_t(M_PI / 6, M_PI_2) - std::sqrt(7.0) / 8) <= 1e-12);
  for (double alpha : linspace(0.0, 1.4, 20))
    CHECK(std::abs(k_of_t(alpha, M_PI_2) -
                   0.5 * std::sqrt(1.0 - std::pow(std::cos(alpha), 4))) <= 1e-12);
  CHECK(k_of_t(-0.5, 1.0) < 0.0);
  check_throws_kind([] { k_of_t(M_PI_2, 0.0); }, ErrorKind::DenominatorVanishes);
}

TEST_CASE("K closed form equals the pipeline half-gap on a 15x15 grid") {
  int compared = 0;
  for (double alpha : linspace(0.0, 1.4, 15))
    for (double et : linspace(0.0, 2 * M_PI, 15)) {
      const auto r = evolve_bell_local_pt(hamiltonian_for_alpha(alpha), et);
      REQUIRE(r.k_closed_form);
      CHECK(std::abs(*r.k_closed_form - *r.k_numeric) < 1e-10);
      CHECK(std::abs(*r.k_numeric - spectrum_half_gap(r.report.reduced_state)) < 1e-12);
      CHECK(k_consistent(r, 1e-10));
      ++compared;
    }
  CHECK(compared == 225);
}

TEST_CASE("non-invariance witness exists on the grid") {
  double lowest = 1.0;
  for (double alpha : linspace(0.0, 1.4, 15))
    for (double et : linspace(0.0, 2 * M_PI, 15))
      lowest = std::min(lowest, evolve_bell_local_pt(hamiltonian_for_alpha(alpha), et).report.entropy_bits);
  CHECK(lowest < 1.0 - 1e-3);
}

TEST_CASE("rho_b_pi_half") {
  CHECK(max_abs_diff(rho_b_pi_half_closed_form(0.0), linalg::maximally_mixed(2)) == 0.0);
  for (double alpha : linspace(-1.4, 1.4, 20)) {
    const auto r = rho_b_pi_half(alpha);
    const double root = std::sqrt(1.0 - std::pow(std::cos(alpha), 4));
    CHECK(std::abs(r.report.eigenvalues[0] - 0.5 * (1 + root)) <= 1e-10);
    CHECK(std::abs(r.report.eigenvalues[1] - 0.5 * (1 - root)) <= 1e-10);
    const auto h = hamiltonian_for_alpha(alpha);
    CHECK(max_abs_diff(bob_state_after_local_pt(h, M_PI_2), rho_b_pi_half_closed_form(alpha)) <= 1e-10);
    CHECK(r.et == M_PI_2);
  }
  const double s = std::sin(0.8), c = std::cos(0.8);
  const ComplexMatrix m = rho_b_pi_half_closed_form(0.8);
  CHECK(std::abs(m(0, 0) - 0.5 * (1 + s * c)) < 1e-15);
  CHECK(std::abs(m(0, 1) - 0.5 * kI * s) < 1e-15);
  CHECK(std::abs(rho_b_pi_half(M_PI / 6).report.entropy_bits - 0.656057562972714689) <= 1e-10);
}

TEST_CASE("singlet_mismatch") {
  const auto zero = singlet_mismatch(0.0);
  CHECK(zero.report.entropy_bits == doctest::Approx(1.0).epsilon(1e-15));
  const auto r = singlet_mismatch(M_PI / 6);
  CHECK(std::abs(r.report.eigenvalues[0] - 0.75) <= 1e-12);
  CHECK(std::abs(r.report.eigenvalues[1] - 0.25) <= 1e-12);
  CHECK(std::abs(r.report.entropy_bits - 0.811278124459132864) <= 1e-12);
  CHECK(r.et == 0.0);
  CHECK_FALSE(r.k_closed_form);

  for (double alpha : linspace(-1.4, 1.4, 20)) {
    const auto row = singlet_mismatch(alpha);
    const double sa = std::abs(std::sin(alpha));
    CHECK(std::abs(row.report.eigenvalues[0] - 0.5 * (1 + sa)) <= 1e-10);
    CHECK(std::abs(row.report.eigenvalues[1] - 0.5 * (1 - sa)) <= 1e-10);
    const double p = 0.5 * (1 + std::sin(alpha)), q = 0.5 * (1 - std::sin(alpha));
    CHECK(std::abs(row.report.entropy_bits - (-p * std::log2(p) - q * std::log2(q))) <= 1e-10);
    CHECK(max_abs_diff(row.report.reduced_state, singlet_closed_form(alpha)) <= 1e-12);
  }

  double previous = 2.0;
  for (double alpha : linspace(0.0, 1.4, 15)) {
    const double e = singlet_mismatch(alpha).report.entropy_bits;
    CHECK(e < previous);
    previous = e;
  }
}

TEST_CASE("signaling_demo") {
  for (double et : linspace(0.0, 2 * M_PI, 13)) CHECK(signaling_demo(0.0, et) <= 1e-12);
  CHECK(std::abs(signaling_demo(M_PI / 6, M_PI_2) - std::sqrt(7.0) / 8) <= 1e-12);
  for (double alpha : linspace(-1.3, 1.3, 9))
    for (double et : linspace(0.0, 2 * M_PI, 9)) {
      const auto r = evolve_bell_local_pt(hamiltonian_for_alpha(alpha), et);
      CHECK(std::abs(signaling_demo(alpha, et) -
                     0.5 * std::abs(r.report.eigenvalues[0] - r.report.eigenvalues[1])) <= 1e-12);
    }
}

TEST_CASE("conventional control arm never signals") {
  sampling::Rng rng(401);
  for (int k = 0; k < 50; ++k) CHECK(signaling_control(sampling::random_unitary(rng, 2)) <= 1e-12);
  check_throws_kind([] { signaling_control(2.0 * linalg::identity(2)); }, ErrorKind::InvariantViolation);
}

TEST_CASE("local conventional unitaries on A leave Bob's state unchanged") {
  sampling::Rng rng(402);
  for (int k = 0; k < 50; ++k) {
    const ComplexMatrix rho = sampling::random_density_matrix(rng, 4);
    const ComplexMatrix u = linalg::tensor(sampling::random_unitary(rng, 2), linalg::identity(2));
    CHECK(max_abs_diff(composite::partial_trace_conventional(u * rho * u.adjoint(), composite::Subsystem::A),
                       composite::partial_trace_conventional(rho, composite::Subsystem::A)) <= 1e-12);
  }
}

TEST_CASE("scenario names") {
  CHECK(parse_scenario("bell") == Scenario::BellEvolution);
  CHECK(parse_scenario("bell_evolution") == Scenario::BellEvolution);
  CHECK(parse_scenario("pihalf") == Scenario::PiHalf);
  CHECK(parse_scenario("pi_half") == Scenario::PiHalf);
  CHECK(parse_scenario("singlet") == Scenario::SingletMismatch);
  CHECK(parse_scenario("signal") == Scenario::Signaling);
  CHECK(parse_scenario("signaling") == Scenario::Signaling);
  CHECK_FALSE(parse_scenario("Bell"));
  CHECK_FALSE(parse_scenario(""));
  for (auto s : {Scenario::BellEvolution, Scenario::PiHalf, Scenario::SingletMismatch, Scenario::Signaling})
    CHECK(parse_scenario(to_string(s)) == s);
}

TEST_CASE("SweepSpec validation names the field") {
  auto message = [](const SweepSpec& spec) -> std::string {
    try {
      validate(spec);
    } catch (const std::invalid_argument& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message({{0.1}, {0.0}, Scenario::BellEvolution}).empty());
  CHECK(message({{}, {0.0}, Scenario::BellEvolution}).find("alpha_values") != std::string::npos);
  CHECK(message({{0.1}, {}, Scenario::BellEvolution}).find("et_values") != std::string::npos);
  CHECK(message({{1.5708}, {0.0}, Scenario::BellEvolution}).find("alpha_values") != std::string::npos);
  CHECK(message({{-1.5708}, {0.0}, Scenario::SingletMismatch}).find("alpha_values") != std::string::npos);
  CHECK(message({{0.1}, {NAN}, Scenario::BellEvolution}).find("et_values") != std::string::npos);
}

TEST_CASE("run_sweep output is sorted and complete") {
  const SweepSpec spec{{0.9, 0.0, 0.4}, {3.0, 0.0, 1.5}, Scenario::BellEvolution};
  const auto out = run_sweep(spec);
  REQUIRE(out.rows.size() == 9);
  CHECK(out.skipped.empty());
  for (size_t i = 1; i < out.rows.size(); ++i)
    CHECK(std::pair(out.rows[i - 1].alpha, out.rows[i - 1].et) < std::pair(out.rows[i].alpha, out.rows[i].et));

  const auto singlet = run_sweep({{0.2, 0.1}, {0.0, 1.0}, Scenario::SingletMismatch});
  CHECK(singlet.rows.size() == 2);
  CHECK(singlet.rows[0].alpha == 0.1);

  const auto signal = run_sweep({{M_PI / 6}, {M_PI_2}, Scenario::Signaling});
  REQUIRE(signal.rows.size() == 1);
  CHECK(std::abs(signal.rows[0].report.trace_distance_to_mixed - std::sqrt(7.0) / 8) <= 1e-12);

  CHECK_THROWS_AS(run_sweep({{}, {0.0}, Scenario::PiHalf}), std::invalid_argument);
  // an impossible tolerance turns the K comparison into an invariant violation
  check_throws_kind([] { run_sweep({{1.0}, {1.0}, Scenario::BellEvolution}, 2.0, -1.0); },
                    ErrorKind::InvariantViolation);
}

TEST_CASE("negative α mirrors positive α") {
  for (double et : linspace(0.0, 2 * M_PI, 7)) {
    const auto a = evolve_bell_local_pt(hamiltonian_for_alpha(0.6), et);
    const auto b = evolve_bell_local_pt(hamiltonian_for_alpha(-0.6), et);
    CHECK(std::abs(a.report.entropy_bits - b.report.entropy_bits) <= 1e-12);
    CHECK(std::abs(*b.k_closed_form + *a.k_closed_form) <= 1e-12);
    CHECK(k_consistent(b, 1e-10));
  }
}
