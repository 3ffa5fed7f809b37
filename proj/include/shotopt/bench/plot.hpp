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

#ifndef SHOTOPT_BENCH_PLOT_HPP
#define SHOTOPT_BENCH_PLOT_HPP

#include "shotopt/bench/report.hpp"

namespace shotopt::bench {

/// Self-contained SVG panel of CDF step curves, one per optimizer.
/// Compiling panels clamp the cost axis to [0, 1]. Throws on an empty
/// curve set (no file written).
void write_cdf_svg(const std::vector<CdfCurve>& curves,
                   const std::string& title, bool clamp_unit_interval,
                   const std::string& path);

/// One SVG + one plot-data CSV per configured budget under out_dir/plots.
void emit_plots(const std::vector<CheckpointRow>& rows,
                const ExperimentConfig& config, const std::string& out_dir);

}  // namespace shotopt::bench

#endif  // SHOTOPT_BENCH_PLOT_HPP
