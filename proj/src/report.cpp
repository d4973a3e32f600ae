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
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <system_error>

#include "ptent/cli.hpp"

namespace ptent::cli {

namespace {

std::string to_chars_string(double value, std::chars_format fmt, int precision) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                       fmt, precision);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

// Short labels for plot ticks and legends.
std::string short_number(double value) {
  if (value == 0.0) value = 0.0;
  return to_chars_string(value, std::chars_format::general, 4);
}

std::string optional_cell(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

struct Point {
  double x;
  double y;
};

constexpr std::array<const char*, 8> kPalette{
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // folds -0 into 0
  return to_chars_string(value, std::chars_format::scientific, 11);
}

std::string csv_table(const experiments::SweepOutput& sweep) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& row : sweep.rows) {
    out += format_number(row.alpha) + ',' + format_number(row.et) + ',' +
           format_number(row.report.eigenvalues[0]) + ',' +
           format_number(row.report.eigenvalues[1]) + ',' +
           format_number(row.report.entropy_bits) + ',' +
           format_number(row.report.trace_distance_to_mixed) + ',' +
           optional_cell(row.k_closed_form) + ',' + optional_cell(row.k_numeric) +
           '\n';
  }
  return out;
}

std::string svg_plot(const experiments::SweepOutput& sweep,
                     experiments::Scenario scenario) {
  using experiments::Scenario;
  const bool distance = scenario == Scenario::Signaling;
  const bool time_axis = [&] {
    if (scenario == Scenario::PiHalf || scenario == Scenario::SingletMismatch)
      return false;
    return std::all_of(sweep.rows.begin(), sweep.rows.end(), [&](const auto& r) {
      return r.alpha == sweep.rows.front().alpha;
    });
  }();

  // Series keyed by the coordinate that is not on the x axis; rows are
  // already sorted, so each polyline comes out in increasing x.
  std::map<double, std::vector<Point>> series;
  for (const auto& row : sweep.rows) {
    const double key = time_axis ? row.alpha : row.et;
    const double x = time_axis ? row.et : row.alpha;
    const double y = distance ? row.report.trace_distance_to_mixed : row.report.entropy_bits;
    series[key].push_back({x, y});
  }

  double x_lo = 0.0, x_hi = 1.0;
  if (!sweep.rows.empty()) {
    x_lo = x_hi = time_axis ? sweep.rows.front().et : sweep.rows.front().alpha;
    for (const auto& [key, points] : series)
      for (const Point& p : points) {
        x_lo = std::min(x_lo, p.x);
        x_hi = std::max(x_hi, p.x);
      }
  }
  if (x_hi - x_lo < 1e-12) {
    x_lo -= 0.5;
    x_hi += 0.5;
  }
  const double y_lo = 0.0;
  double y_hi = distance ? 0.5 : 1.0;
  for (const auto& [key, points] : series)
    for (const Point& p : points) y_hi = std::max(y_hi, p.y);

  constexpr double kWidth = 720, kHeight = 480;
  constexpr double kLeft = 80, kRight = 170, kTop = 40, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto sy = [&](double y) { return kTop + (1.0 - (y - y_lo) / (y_hi - y_lo)) * plot_h; };
  auto px = [](double v) { return to_chars_string(v, std::chars_format::fixed, 2); };

  const std::string x_label = time_axis ? "Et (rad)" : "α (rad)";
  const std::string y_label = distance ? "trace distance to I/2" : "entropy (bits)";
  const std::string key_name = time_axis ? "α" : "Et";

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << px(kLeft + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-size=\"15\">" << experiments::to_string(scenario) << "</text>\n";

  // Axes, ticks and grid.
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << px(kLeft) << "\" y1=\"" << px(kTop + plot_h) << "\" x2=\""
      << px(kLeft + plot_w) << "\" y2=\"" << px(kTop + plot_h) << "\"/>\n"
      << "<line x1=\"" << px(kLeft) << "\" y1=\"" << px(kTop) << "\" x2=\"" << px(kLeft)
      << "\" y2=\"" << px(kTop + plot_h) << "\"/>\n</g>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = x_lo + (x_hi - x_lo) * i / kTicks;
    const double yv = y_lo + (y_hi - y_lo) * i / kTicks;
    svg << "<line x1=\"" << px(sx(xv)) << "\" y1=\"" << px(kTop + plot_h) << "\" x2=\""
        << px(sx(xv)) << "\" y2=\"" << px(kTop + plot_h + 5) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << px(sx(xv)) << "\" y=\"" << px(kTop + plot_h + 19)
        << "\" text-anchor=\"middle\">" << short_number(xv) << "</text>\n"
        << "<line x1=\"" << px(kLeft) << "\" y1=\"" << px(sy(yv)) << "\" x2=\""
        << px(kLeft + plot_w) << "\" y2=\"" << px(sy(yv))
        << "\" stroke=\"#dddddd\"/>\n"
        << "<text x=\"" << px(kLeft - 8) << "\" y=\"" << px(sy(yv) + 4)
        << "\" text-anchor=\"end\">" << short_number(yv) << "</text>\n";
  }
  svg << "<text x=\"" << px(kLeft + plot_w / 2) << "\" y=\"" << px(kHeight - 18)
      << "\" text-anchor=\"middle\">" << x_label << "</text>\n"
      << "<text x=\"20\" y=\"" << px(kTop + plot_h / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " << px(kTop + plot_h / 2)
      << ")\">" << y_label << "</text>\n";

  std::size_t index = 0;
  for (const auto& [key, points] : series) {
    const char* colour = kPalette[index % kPalette.size()];
    if (points.size() == 1) {
      svg << "<circle cx=\"" << px(sx(points[0].x)) << "\" cy=\"" << px(sy(points[0].y))
          << "\" r=\"3\" fill=\"" << colour << "\"/>\n";
    } else {
      svg << "<polyline fill=\"none\" stroke=\"" << colour
          << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t k = 0; k < points.size(); ++k)
        svg << (k ? " " : "") << px(sx(points[k].x)) << ',' << px(sy(points[k].y));
      svg << "\"/>\n";
    }
    const bool keyed = scenario == experiments::Scenario::BellEvolution ||
                       scenario == experiments::Scenario::Signaling;
    if ((keyed || time_axis) && index < 26) {
      const double ly = kTop + 14.0 * static_cast<double>(index);
      svg << "<line x1=\"" << px(kLeft + plot_w + 12) << "\" y1=\"" << px(ly) << "\" x2=\""
          << px(kLeft + plot_w + 32) << "\" y2=\"" << px(ly) << "\" stroke=\"" << colour
          << "\" stroke-width=\"2\"/>\n"
          << "<text x=\"" << px(kLeft + plot_w + 38) << "\" y=\"" << px(ly + 4) << "\">"
          << key_name << '=' << short_number(key) << "</text>\n";
    }
    ++index;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace ptent::cli
