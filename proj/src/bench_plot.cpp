// Copyright 2026 The shotopt authors.
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

#include "shotopt/bench/plot.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace shotopt::bench {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 620, kTop = 40, kBottom = 370;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                          "#bcbd22", "#17becf"};

std::string svg_number(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

}  // namespace

void write_cdf_svg(const std::vector<CdfCurve>& curves,
                   const std::string& title, bool clamp_unit_interval,
                   const std::string& path) {
  if (curves.empty())
    throw std::invalid_argument("write_cdf_svg: no curves to plot");

  double lo = 0.0, hi = 1.0;
  if (!clamp_unit_interval) {
    lo = curves.front().points.front().first;
    hi = lo;
    for (const auto& curve : curves)
      for (const auto& [cost, _] : curve.points) {
        lo = std::min(lo, cost);
        hi = std::max(hi, cost);
      }
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
  auto x_of = [&](double cost) {
    const double clamped = std::clamp(cost, lo, hi);
    return kLeft + (clamped - lo) / (hi - lo) * (kRight - kLeft);
  };
  auto y_of = [&](double fraction) {
    return kBottom - fraction * (kBottom - kTop);
  };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_cdf_svg: cannot write " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << (kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";

  // Axes with ticks.
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight
      << "\" y2=\"" << kBottom << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kBottom << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double fx = lo + (hi - lo) * i / 5.0;
    const double px = x_of(fx);
    out << "<line x1=\"" << svg_number(px) << "\" y1=\"" << kBottom
        << "\" x2=\"" << svg_number(px) << "\" y2=\"" << (kBottom + 5)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << svg_number(px) << "\" y=\"" << (kBottom + 20)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">" << svg_number(fx) << "</text>\n";
    const double fy = i / 5.0;
    const double py = y_of(fy);
    out << "<line x1=\"" << (kLeft - 5) << "\" y1=\"" << svg_number(py)
        << "\" x2=\"" << kLeft << "\" y2=\"" << svg_number(py)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << (kLeft - 10) << "\" y=\"" << svg_number(py + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">" << svg_number(fy) << "</text>\n";
  }
  out << "<text x=\"" << (kWidth / 2) << "\" y=\"" << (kHeight - 10)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">exact cost</text>\n";
  out << "<text x=\"16\" y=\"" << ((kTop + kBottom) / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\" transform=\"rotate(-90 16 "
      << ((kTop + kBottom) / 2) << ")\">cumulative probability</text>\n";

  for (std::size_t c = 0; c < curves.size(); ++c) {
    const char* color = kPalette[c % std::size(kPalette)];
    std::string d = "M " + svg_number(x_of(lo)) + " " + svg_number(y_of(0));
    double prev_y = 0.0;
    for (const auto& [cost, fraction] : curves[c].points) {
      d += " L " + svg_number(x_of(cost)) + " " + svg_number(y_of(prev_y));
      d += " L " + svg_number(x_of(cost)) + " " + svg_number(y_of(fraction));
      prev_y = fraction;
    }
    d += " L " + svg_number(x_of(hi)) + " " + svg_number(y_of(prev_y));
    out << "<path d=\"" << d << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"/>\n";
    const double ly = kTop + 16.0 * static_cast<double>(c);
    out << "<line x1=\"" << (kRight - 130) << "\" y1=\"" << svg_number(ly)
        << "\" x2=\"" << (kRight - 110) << "\" y2=\"" << svg_number(ly)
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << (kRight - 104) << "\" y=\"" << svg_number(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\">"
        << curves[c].optimizer << "</text>\n";
  }
  out << "</svg>\n";
}

void emit_plots(const std::vector<CheckpointRow>& rows,
                const ExperimentConfig& config, const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(fs::path(out_dir) / "plots", ec);
  if (ec) throw std::runtime_error("emit_plots: cannot create " + out_dir);

  const std::string noise_tag = config.noise.enabled ? "noisy" : "noiseless";
  for (long long budget : config.budgets) {
    const auto curves = cumulative_distribution(rows, budget, config);
    if (curves.empty())
      throw std::invalid_argument("emit_plots: no optimizer reaches budget " +
                                  std::to_string(budget));
    const std::string stem = "cdf_" + config.task + "_" + noise_tag + "_" +
                             std::to_string(budget);
    const std::string title = config.task + " (" + noise_tag + "), N = " +
                              std::to_string(budget);
    write_cdf_svg(curves, title, config.task == "compile",
                  (fs::path(out_dir) / "plots" / (stem + ".svg")).string());
    write_cdf_csv(curves,
                  (fs::path(out_dir) / "plots" / (stem + ".csv")).string());
  }
}

}  // namespace shotopt::bench
