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

// Acceptance gate: one PASS/FAIL line per criterion.
//
//   acceptance <path to ptent> <scratch dir>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "oracles.hpp"
#include "ptent/composite.hpp"
#include "ptent/experiments.hpp"
#include "ptent/ptcore.hpp"
#include "ptent/sampling.hpp"

using namespace ptent;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using linalg::ComplexMatrix;
using linalg::ComplexVector;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return v;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int run_command(const std::string& command) {
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome ac1() {
  const auto start = Clock::now();
  const auto h = experiments::hamiltonian_for_alpha(0.0);
  double worst = 0.0;
  for (double et : linspace(0.0, 2 * M_PI, 25))
    worst = std::max(worst, std::abs(experiments::evolve_bell_local_pt(h, et).report.entropy_bits - 1.0));
  const double elapsed = seconds_since(start);
  return {worst <= 1e-12 && elapsed < 1.0,
          "max|S-1|=" + sci(worst) + " tol=1e-12 time=" + sci(elapsed) + "s limit=1s"};
}

Outcome ac2() {
  const auto start = Clock::now();
  double worst = 0.0;
  int points = 0;
  for (double alpha : linspace(0.0, 1.4, 15)) {
    const auto h = experiments::hamiltonian_for_alpha(alpha);
    for (double et : linspace(0.0, 2 * M_PI, 15)) {
      const ComplexMatrix rho = experiments::bob_state_after_local_pt(h, et);
      double k;
      try {
        k = experiments::k_of_t(alpha, et);
      } catch (const Error&) {
        continue;
      }
      const auto roots = oracle::hermitian_2x2_roots(rho);
      worst = std::max(worst, std::abs(k - 0.5 * (roots[0] - roots[1])));
      ++points;
    }
  }
  const double elapsed = seconds_since(start);
  return {worst < 1e-10 && points == 225 && elapsed < 5.0,
          "points=" + std::to_string(points) + " max|K-gap/2|=" + sci(worst) + " tol=1e-10 time=" + sci(elapsed) +
              "s limit=5s"};
}

Outcome ac3() {
  double spectrum = 0.0, entries = 0.0;
  for (double alpha : linspace(0.0, 1.4, 20)) {
    const auto h = experiments::hamiltonian_for_alpha(alpha);
    const ComplexMatrix rho = experiments::bob_state_after_local_pt(h, M_PI_2);
    const double root = std::sqrt(1.0 - std::pow(std::cos(alpha), 4));
    const auto eig = composite::make_report(rho, composite::World::CptAlice).eigenvalues;
    spectrum = std::max({spectrum, std::abs(eig[0] - 0.5 * (1 + root)), std::abs(eig[1] - 0.5 * (1 - root))});
    const double s = std::sin(alpha), c = std::cos(alpha);
    ComplexMatrix closed(2, 2);
    closed << 0.5 * (1 + s * c), 0.5 * linalg::kI * s, -0.5 * linalg::kI * s, 0.5 * (1 - s * c);
    entries = std::max(entries, oracle::max_abs(rho, closed));
  }
  return {spectrum <= 1e-10 && entries <= 1e-10,
          "max|λ-λ_closed|=" + sci(spectrum) + " max|ρ-ρ_closed|=" + sci(entries) + " tol=1e-10"};
}

Outcome ac4() {
  const auto h = experiments::hamiltonian_for_alpha(M_PI / 6);
  const double entropy = experiments::evolve_bell_local_pt(h, M_PI_2).report.entropy_bits;
  const double expected = 0.656057562972714689;
  return {1.0 - entropy > 0.3 && std::abs(entropy - expected) <= 1e-10,
          "S=" + std::to_string(entropy) + " 1-S=" + std::to_string(1.0 - entropy) + " required>0.3"};
}

Outcome ac5() {
  double spectrum = 0.0, entropy = 0.0;
  for (double alpha : linspace(0.0, 1.4, 20)) {
    const auto r = experiments::singlet_mismatch(alpha);
    const double s = std::sin(alpha);
    spectrum = std::max({spectrum, std::abs(r.report.eigenvalues[0] - 0.5 * (1 + s)),
                         std::abs(r.report.eigenvalues[1] - 0.5 * (1 - s))});
    const double p = 0.5 * (1 + s), q = 0.5 * (1 - s);
    const double stated = -p * std::log2(p) - (q > 0 ? q * std::log2(q) : 0.0);
    entropy = std::max(entropy, std::abs(r.report.entropy_bits - stated));
  }
  const double at_zero = experiments::singlet_mismatch(0.0).report.entropy_bits;
  return {spectrum <= 1e-10 && entropy <= 1e-10 && std::abs(at_zero - 1.0) <= 1e-15,
          "max|λ-½(1±sinα)|=" + sci(spectrum) + " max|S-S_stated|=" + sci(entropy) +
              " tol=1e-10 |S(0)-1|=" + sci(std::abs(at_zero - 1.0))};
}

Outcome ac6() {
  const double distance = experiments::signaling_demo(M_PI / 6, M_PI_2);
  sampling::Rng rng(6);
  double control = 0.0;
  for (int k = 0; k < 50; ++k)
    control = std::max(control, experiments::signaling_control(sampling::random_unitary(rng, 2)));
  return {distance > 0.3 && std::abs(distance - std::sqrt(7.0) / 8) <= 1e-12 && control <= 1e-12,
          "D=" + std::to_string(distance) + " required>0.3 control_max=" + sci(control) + " tol=1e-12"};
}

Outcome ac7() {
  sampling::Rng rng(7);
  double worst = 0.0;
  const ComplexMatrix id = linalg::identity(2);
  for (int k = 0; k < 50; ++k) {
    const auto p = sampling::random_hamiltonian_params(rng);
    const auto h = ptcore::make_hamiltonian(p.r, p.s, p.theta);
    const auto m = h.metric();
    const ComplexMatrix c = ptcore::c_operator(h.alpha());
    const ComplexVector& up = h.psi_plus();
    const ComplexVector& dn = h.psi_minus();
    const ComplexMatrix resolution =
        up * ptcore::cpt_dual(up, m).adjoint() + dn * ptcore::cpt_dual(dn, m).adjoint();
    const ComplexVector psi = sampling::random_vector(rng, 2);
    const double t = sampling::uniform(rng, -10, 10);
    const double norm0 = ptcore::cpt_norm(psi, m);
    worst = std::max({worst,
                      std::abs(ptcore::cpt_inner(up, up, m) - 1.0),
                      std::abs(ptcore::cpt_inner(dn, dn, m) - 1.0),
                      std::abs(ptcore::cpt_inner(up, dn, m)),
                      std::abs(ptcore::cpt_inner(dn, up, m)),
                      oracle::max_abs(c * c, id),
                      oracle::max_abs(c * h.matrix() - h.matrix() * c, ComplexMatrix::Zero(2, 2)),
                      oracle::max_abs(resolution, id),
                      std::abs(ptcore::cpt_norm(ptcore::pt_evolve(h, t, psi), m) - norm0) / norm0});
  }
  return {worst <= 1e-10, "cases=50 max_err=" + sci(worst) + " tol=1e-10"};
}

Outcome ac8() {
  sampling::Rng rng(8);
  double local = 0.0, trace = 0.0, additive = 0.0;
  for (int k = 0; k < 50; ++k) {
    const composite::BipartiteState psi(sampling::random_vector(rng, 4));
    const ComplexMatrix u = oracle::kron(sampling::random_unitary(rng, 2), sampling::random_unitary(rng, 2));
    const composite::BipartiteState moved(u * psi.amplitudes());
    local = std::max(local, std::abs(composite::entanglement_entropy(psi).entropy_bits -
                                     composite::entanglement_entropy(moved).entropy_bits));
  }
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix rho = sampling::random_density_matrix(rng, 4);
    trace = std::max({trace,
                      oracle::max_abs(composite::partial_trace_conventional(rho, composite::Subsystem::A),
                                      oracle::trace_out_a(rho, 2, 2)),
                      oracle::max_abs(composite::partial_trace_conventional(rho, composite::Subsystem::B),
                                      oracle::trace_out_b(rho, 2, 2))});
  }
  for (int k = 0; k < 20; ++k) {
    const ComplexVector p1 = sampling::random_vector(rng, 4).normalized();
    const ComplexVector p2 = sampling::random_vector(rng, 4).normalized();
    ComplexVector joint(16);
    for (int a = 0; a < 2; ++a)
      for (int ap = 0; ap < 2; ++ap)
        for (int b = 0; b < 2; ++b)
          for (int bp = 0; bp < 2; ++bp) joint(8 * a + 4 * ap + 2 * b + bp) = p1(2 * a + b) * p2(2 * ap + bp);
    const double sum = composite::entanglement_entropy(composite::BipartiteState(p1)).entropy_bits +
                       composite::entanglement_entropy(composite::BipartiteState(p2)).entropy_bits;
    additive = std::max(additive, std::abs(composite::cut_entropy(joint, 4, 4) - sum));
  }
  return {local <= 1e-10 && trace <= 1e-12 && additive <= 1e-10,
          "local_unitary=" + sci(local) + " (1e-10) partial_trace=" + sci(trace) + " (1e-12) additivity=" +
              sci(additive) + " (1e-10)"};
}

Outcome ac9() {
  sampling::Rng rng(9);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto p = sampling::random_hamiltonian_params(rng);
    const auto h = ptcore::make_hamiltonian(p.r, p.s, p.theta);
    const ptcore::PTQubitState state(sampling::random_vector(rng, 2), ptcore::QubitBasis::PTEigen);
    const ComplexVector psi = state.to_computational(h);
    const double total = ptcore::measure_probability(psi, h.psi_plus(), h.metric()) +
                         ptcore::measure_probability(psi, h.psi_minus(), h.metric());
    worst = std::max(worst, std::abs(total - 1.0));
  }
  return {worst <= 1e-12, "states=50 max|p+ + p- - 1|=" + sci(worst) + " tol=1e-12"};
}

Outcome ac10(const std::string& bin, const fs::path& scratch) {
  fs::remove_all(scratch);
  fs::create_directories(scratch);
  const std::string quoted = "'" + bin + "'";
  bool identical = true;
  for (const char* scenario : {"bell", "pihalf", "singlet", "signal"}) {
    std::string csv[2];
    for (int k = 0; k < 2; ++k) {
      const fs::path dir = scratch / (std::string(scenario) + std::to_string(k));
      const int code = run_command(quoted + " --scenario " + scenario + " --out '" + dir.string() + "' >/dev/null");
      if (code != 0) return {false, std::string("ptent --scenario ") + scenario + " exited " + std::to_string(code)};
      for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".csv") csv[k] = slurp(entry.path());
    }
    identical = identical && !csv[0].empty() && csv[0] == csv[1];
  }
  const auto start = Clock::now();
  const int selftest = run_command(quoted + " --selftest > '" + (scratch / "selftest.txt").string() + "'");
  const double elapsed = seconds_since(start);
  return {identical && selftest == 0 && elapsed < 10.0,
          std::string("csv_identical=") + (identical ? "yes" : "no") + " selftest_exit=" + std::to_string(selftest) +
              " time=" + sci(elapsed) + "s limit=10s"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: %s <ptent binary> <scratch dir>\n", argv[0]);
    return 2;
  }
  const std::string bin = argv[1];
  const fs::path scratch = argv[2];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 hermitian_limit_invariance", ac1},
      {"AC2 k_closed_form_vs_pipeline", ac2},
      {"AC3 pi_half_spectrum", ac3},
      {"AC4 non_invariance_witness", ac4},
      {"AC5 singlet_mismatch", ac5},
      {"AC6 signaling", ac6},
      {"AC7 cpt_structure", ac7},
      {"AC8 conventional_baseline", ac8},
      {"AC9 probability_completeness", ac9},
      {"AC10 cli_determinism_and_selftest", [&] { return ac10(bin, scratch); }},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failed += !outcome.pass;
    std::printf("%s %s %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str());
  }
  std::printf("acceptance: %zu/%zu passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
