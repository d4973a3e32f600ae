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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "ptent/cli.hpp"

namespace ptent::cli {

namespace {

void validate_grid(const GridSpec& grid, const char* field) {
  std::ostringstream msg;
  msg << field << ": ";
  if (grid.count < 1) {
    msg << "count must be >= 1 (the grid is empty)";
    throw std::invalid_argument(msg.str());
  }
  if (!std::isfinite(grid.min) || !std::isfinite(grid.max)) {
    msg << "bounds must be finite";
    throw std::invalid_argument(msg.str());
  }
  if (grid.min > grid.max) {
    msg << "min " << grid.min << " exceeds max " << grid.max;
    throw std::invalid_argument(msg.str());
  }
}

bool write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) return false;
  file << content;
  file.close();
  return static_cast<bool>(file);
}

}  // namespace

std::vector<double> GridSpec::values() const {
  std::vector<double> out;
  if (count < 1) return out;
  if (count == 1) return {min};
  out.reserve(static_cast<std::size_t>(count));
  const double step = (max - min) / (count - 1);
  for (int k = 0; k < count; ++k) out.push_back(k + 1 == count ? max : min + k * step);
  return out;
}

void validate(const RunConfig& config) {
  validate_grid(config.alpha_grid, "alpha_grid (--alpha-min/--alpha-max/--alpha-steps)");
  validate_grid(config.et_grid, "et_grid (--et-min/--et-max/--et-steps)");
  if (!(config.log_base > 0.0) || config.log_base == 1.0 || !std::isfinite(config.log_base))
    throw std::invalid_argument("log_base: must be positive, finite and not 1");
  if (config.output_dir.empty())
    throw std::invalid_argument("output_dir (--out): must not be empty");
  experiments::validate({config.alpha_grid.values(), config.et_grid.values(), config.scenario});
  resolve_tolerances(config.tolerance_overrides);
}

Tolerances resolve_tolerances(const std::map<std::string, double>& overrides) {
  Tolerances tolerances;
  for (const auto& [key, value] : overrides) {
    if (!(value > 0.0) || !std::isfinite(value))
      throw std::invalid_argument("tolerance_overrides: " + key + " must be positive");
    if (key == "oracle") {
      tolerances.oracle = value;
    } else if (key == "identity") {
      tolerances.identity = value;
    } else {
      throw std::invalid_argument("tolerance_overrides: unknown key '" + key + "'");
    }
  }
  return tolerances;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Tolerances tolerances;
  experiments::SweepSpec spec;
  try {
    validate(config);
    tolerances = resolve_tolerances(config.tolerance_overrides);
    spec = {config.alpha_grid.values(), config.et_grid.values(), config.scenario};
  } catch (const std::invalid_argument& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  }

  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec || !std::filesystem::is_directory(config.output_dir)) {
    err << "cannot create output directory " << config.output_dir << ": "
        << ec.message() << '\n';
    return kExitIo;
  }

  experiments::SweepOutput sweep;
  try {
    sweep = experiments::run_sweep(spec, config.log_base, tolerances.oracle);
  } catch (const Error& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  }

  const std::string stem(experiments::to_string(config.scenario));
  const auto csv_path = config.output_dir / (stem + ".csv");
  if (!write_file(csv_path, csv_table(sweep))) {
    err << "cannot write " << csv_path << '\n';
    return kExitIo;
  }
  if (config.emit_svg) {
    const auto svg_path = config.output_dir / (stem + ".svg");
    if (!write_file(svg_path, svg_plot(sweep, config.scenario))) {
      err << "cannot write " << svg_path << '\n';
      return kExitIo;
    }
  }

  for (const auto& [alpha, et] : sweep.skipped)
    err << "skipped degenerate point alpha=" << format_number(alpha)
        << " et=" << format_number(et) << '\n';

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& row : sweep.rows) {
    lo = std::min(lo, row.report.entropy_bits);
    hi = std::max(hi, row.report.entropy_bits);
  }
  out << stem << ": rows=" << sweep.rows.size() << " skipped=" << sweep.skipped.size();
  if (!sweep.rows.empty())
    out << " entropy_min=" << format_number(lo) << " entropy_max=" << format_number(hi);
  out << " csv=" << csv_path.string() << '\n';
  return kExitOk;
}

}  // namespace ptent::cli
