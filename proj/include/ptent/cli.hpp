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

// Sweep driver behind the `ptent` command: grid configuration, CSV and SVG
// emission, and the self-test.

#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ptent/experiments.hpp"

namespace ptent::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvariant = 1,
  kExitInvalidConfig = 2,
  kExitIo = 3,
};

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int count = 1;

  /// count == 1 yields {min}; otherwise count evenly spaced points from min
  /// to max inclusive.
  std::vector<double> values() const;
};

/// Thresholds used by the self-test checks and the per-row K agreement.
struct Tolerances {
  double oracle = tol::kOracle;
  double identity = tol::kIdentity;
};

struct RunConfig {
  experiments::Scenario scenario = experiments::Scenario::BellEvolution;
  GridSpec alpha_grid{0.0, 1.4, 15};
  GridSpec et_grid{0.0, 2.0 * M_PI, 25};
  std::filesystem::path output_dir = "ptent_out";
  bool emit_svg = false;
  double log_base = 2.0;
  /// Keys: "oracle", "identity".
  std::map<std::string, double> tolerance_overrides;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const RunConfig& config);
Tolerances resolve_tolerances(const std::map<std::string, double>& overrides);

/// Locale-independent scientific notation with 12 significant digits.
std::string format_number(double value);

inline constexpr const char* kCsvHeader =
    "alpha,et,lambda_plus,lambda_minus,entropy_bits,trace_distance,k_closed,k_numeric";

std::string csv_table(const experiments::SweepOutput& sweep);

/// Self-contained SVG line plot of entropy (or, for signaling, trace
/// distance) against α, one polyline per Et value; against Et when the α grid
/// has a single point.
std::string svg_plot(const experiments::SweepOutput& sweep,
                     experiments::Scenario scenario);

/// Writes <output_dir>/<scenario>.csv (and .svg) and prints a summary line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Runs every invariant check and the acceptance grid, one line per check.
int selftest(const Tolerances& tolerances, std::ostream& out);

}  // namespace ptent::cli
