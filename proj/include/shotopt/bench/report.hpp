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

#ifndef SHOTOPT_BENCH_REPORT_HPP
#define SHOTOPT_BENCH_REPORT_HPP

#include <optional>

#include "shotopt/bench/runner.hpp"

namespace shotopt::bench {

/// Empirical CDF of exact costs at one checkpoint budget, one curve per
/// optimizer. Duplicate costs merge into a single jump.
struct CdfCurve {
  std::string optimizer;
  std::vector<std::pair<double, double>> points;  // (cost, cumulative fraction)
};

/// Builds the CDF curves at `budget`, skipping optimizers whose first
/// iteration cannot fit in it. Throws on an empty result set or an
/// unknown budget.
std::vector<CdfCurve> cumulative_distribution(
    const std::vector<CheckpointRow>& rows, long long budget,
    const ExperimentConfig& config);

/// Mean exact cost per (optimizer, budget); absent cells (budget below
/// the optimizer's first-iteration consumption) hold no value and render
/// as "X".
struct SummaryTable {
  std::vector<std::string> optimizers;
  std::vector<long long> budgets;
  std::vector<std::vector<std::optional<double>>> mean_cost;  // [opt][budget]
};

SummaryTable summary_table(const std::vector<CheckpointRow>& rows,
                           const ExperimentConfig& config);

std::string render_summary(const SummaryTable& table);

void write_summary_csv(const SummaryTable& table, const std::string& path);

void write_cdf_csv(const std::vector<CdfCurve>& curves, const std::string& path);

}  // namespace shotopt::bench

#endif  // SHOTOPT_BENCH_REPORT_HPP
