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

// ptent: sweeps of the PT-symmetric entanglement scenarios.
//
//   ptent --scenario bell --alpha-min 0 --alpha-max 1.4 --alpha-steps 15
//         --et-min 0 --et-max 6.283185307179586 --et-steps 25 --out results --svg
//   ptent --selftest
//
// A --config file holds the same options as flat `key = value` lines
// (e.g. `alpha-steps = 15`); flags given on the command line win.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ptent/cli.hpp"

int main(int argc, char** argv) {
  using namespace ptent;

  CLI::App app{"PT-symmetric entanglement scenario sweeps"};
  cli::RunConfig config;
  std::string scenario_name;
  bool run_selftest = false;
  double tol_oracle = 0.0;
  double tol_identity = 0.0;
  std::string out_dir;

  app.set_config("--config", "", "Read options from a flat key = value file");
  app.add_option("--scenario", scenario_name, "bell | pihalf | singlet | signal");
  app.add_option("--alpha-min", config.alpha_grid.min, "Smallest alpha (rad)");
  app.add_option("--alpha-max", config.alpha_grid.max, "Largest alpha (rad)");
  app.add_option("--alpha-steps", config.alpha_grid.count, "Number of alpha points");
  app.add_option("--et-min", config.et_grid.min, "Smallest Et (rad)");
  app.add_option("--et-max", config.et_grid.max, "Largest Et (rad)");
  app.add_option("--et-steps", config.et_grid.count, "Number of Et points");
  app.add_option("--out", out_dir, "Output directory")->envname("PTENT_OUT");
  app.add_flag("--svg", config.emit_svg, "Also write an SVG plot");
  app.add_option("--log-base", config.log_base, "Entropy logarithm base");
  app.add_option("--tol-oracle", tol_oracle, "Override the oracle tolerance (1e-10)");
  app.add_option("--tol-identity", tol_identity, "Override the identity tolerance (1e-12)");
  app.add_flag("--selftest", run_selftest, "Run the invariant and acceptance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return cli::kExitInvalidConfig;
  }

  if (app.count("--tol-oracle")) config.tolerance_overrides["oracle"] = tol_oracle;
  if (app.count("--tol-identity")) config.tolerance_overrides["identity"] = tol_identity;

  if (run_selftest) {
    try {
      return cli::selftest(cli::resolve_tolerances(config.tolerance_overrides), std::cout);
    } catch (const std::invalid_argument& e) {
      std::cerr << "invalid configuration: " << e.what() << '\n';
      return cli::kExitInvalidConfig;
    }
  }

  if (scenario_name.empty()) {
    std::cerr << "invalid configuration: scenario (--scenario) is required\n";
    return cli::kExitInvalidConfig;
  }
  const auto scenario = experiments::parse_scenario(scenario_name);
  if (!scenario) {
    std::cerr << "invalid configuration: scenario (--scenario): unknown value '"
              << scenario_name << "'\n";
    return cli::kExitInvalidConfig;
  }
  config.scenario = *scenario;
  if (!out_dir.empty()) config.output_dir = out_dir;

  return cli::run(config, std::cout, std::cerr);
}
