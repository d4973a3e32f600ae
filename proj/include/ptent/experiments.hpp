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

// End-to-end scenarios: a Bell pair with a PT-symmetric unitary on Alice's
// side, the Et = π/2 snapshot, the singlet seen through Alice's CPT inner
// product, and the resulting signaling distance at Bob.
//
// Sweeps are parameterized by α and the dimensionless phase Et = (E₊ - E₋)t.

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ptent/composite.hpp"
#include "ptent/ptcore.hpp"

namespace ptent::experiments {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ComplexVector;

enum class Scenario { BellEvolution, PiHalf, SingletMismatch, Signaling };

std::string_view to_string(Scenario scenario);
/// Accepts the long tags (bell_evolution, pi_half, singlet_mismatch,
/// signaling) and the short CLI names (bell, pihalf, singlet, signal).
std::optional<Scenario> parse_scenario(std::string_view name);

/// Largest admissible |α|: π/2 - 1e-6.
inline constexpr double kAlphaLimit = M_PI_2 - 1e-6;

struct SweepSpec {
  std::vector<double> alpha_values;
  std::vector<double> et_values;
  Scenario scenario = Scenario::BellEvolution;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const SweepSpec& spec);

struct ScenarioResult {
  double alpha = 0.0;
  double et = 0.0;
  composite::EntanglementReport report;
  std::optional<double> k_closed_form;
  std::optional<double> k_numeric;
};

/// The closed form carries the sign of sin α while the numeric half-gap is
/// non-negative, so agreement is |K_closed| vs K_numeric.
bool k_consistent(const ScenarioResult& result, double tolerance);

/// s = 1, θ₀ = π/2 and r = s·sin α / sin θ₀ unless overridden.
ptcore::PTHamiltonian hamiltonian_for_alpha(double alpha, double s = 1.0,
                                            double theta0 = M_PI_2);

/// CPT bra coefficients ⟨ψₙ|k⟩_CPT ordered {c₊⁽⁰⁾, c₊⁽¹⁾, c₋⁽⁰⁾, c₋⁽¹⁾}.
std::array<Complex, 4> cpt_bra_coefficients(const ptcore::PTHamiltonian& h);

/// (U(t)⊗I)|Φ⁺⟩ with t = et/(E₊ - E₋). Built twice, once from pt_evolve on
/// each of Alice's basis states and once from the CPT-bra expansion
/// Σₙ e^{-iEₙt} ψₙ⊗φₙ; throws InvariantViolation if they disagree.
ComplexVector evolved_bell_state(const ptcore::PTHamiltonian& h, double et);

/// Bob's conventional reduced state of the evolved Bell pair, unit trace.
ComplexMatrix bob_state_after_local_pt(const ptcore::PTHamiltonian& h,
                                       double et);

ScenarioResult evolve_bell_local_pt(const ptcore::PTHamiltonian& h, double et,
                                    double log_base = 2.0);

/// Closed-form half-gap of Bob's spectrum:
///   K = √(7 - 8cos Et + cos 2Et + 2cos 2α sin²Et)·sin α / (4(1 - cos Et sin²α)).
/// Throws DenominatorVanishes when the denominator is <= 1e-12.
double k_of_t(double alpha, double et);

/// ½[[1 + sin α cos α, i sin α], [-i sin α, 1 - sin α cos α]].
ComplexMatrix rho_b_pi_half_closed_form(double alpha);

/// Closed-form Et = π/2 state, checked entrywise against the pipeline.
ScenarioResult rho_b_pi_half(double alpha, double log_base = 2.0);

/// ½[[1, i sin α], [-i sin α, 1]] in this library's metric convention.
ComplexMatrix singlet_closed_form(double alpha);

/// Singlet traced over Alice with her CPT inner product; the spectrum is
/// checked against ½(1 ± sin α).
ScenarioResult singlet_mismatch(double alpha, double log_base = 2.0);

/// Trace distance between I/2 (Alice idle) and Bob's state after Alice's
/// local PT unitary.
double signaling_demo(double alpha, double et);

/// Same protocol with an ordinary unitary on Alice. Throws
/// InvariantViolation if `u` is not unitary.
double signaling_control(const ComplexMatrix& u);

struct SweepOutput {
  std::vector<ScenarioResult> rows;
  /// (α, Et) points skipped because the closed-form denominator vanished.
  std::vector<std::pair<double, double>> skipped;
};

/// Runs every grid point, sorted by (α, Et). Throws InvariantViolation when a
/// row's K values disagree beyond `k_tolerance`.
SweepOutput run_sweep(const SweepSpec& spec, double log_base = 2.0,
                      double k_tolerance = tol::kOracle);

}  // namespace ptent::experiments
