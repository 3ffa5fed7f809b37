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

#include "shotopt/bench/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace shotopt::bench {

namespace {

/// Label -> can the optimizer complete one iteration within `budget`?
bool reachable(const ExperimentConfig& config, const std::string& label,
               long long budget) {
  for (const auto& spec : config.optimizers) {
    if (spec.label() != label) continue;
    const auto optimizer = config.make_optimizer(spec, budget);
    return optimizer->min_first_iteration_cost(config.param_dimension()) <=
           budget;
  }
  return true;  // labels not in the config are reported as-is
}

}  // namespace

std::vector<CdfCurve> cumulative_distribution(
    const std::vector<CheckpointRow>& rows, long long budget,
    const ExperimentConfig& config) {
  if (rows.empty())
    throw std::invalid_argument("cumulative_distribution: empty result set");
  std::map<std::string, std::vector<double>> costs;
  bool budget_seen = false;
  for (const auto& row : rows) {
    if (row.budget != budget) continue;
    budget_seen = true;
    if (!reachable(config, row.optimizer, budget)) continue;
    costs[row.optimizer].push_back(row.exact_cost);
  }
  if (!budget_seen)
    throw std::invalid_argument("cumulative_distribution: unknown budget");

  std::vector<CdfCurve> curves;
  for (auto& [optimizer, values] : costs) {
    std::sort(values.begin(), values.end());
    CdfCurve curve;
    curve.optimizer = optimizer;
    const double count = static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      const bool last_of_value =
          i + 1 == values.size() || values[i + 1] != values[i];
      if (last_of_value)
        curve.points.emplace_back(values[i],
                                  static_cast<double>(i + 1) / count);
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

SummaryTable summary_table(const std::vector<CheckpointRow>& rows,
                           const ExperimentConfig& config) {
  if (rows.empty()) throw std::invalid_argument("summary_table: empty result set");
  SummaryTable table;
  for (const auto& spec : config.optimizers) table.optimizers.push_back(spec.label());
  table.budgets = config.budgets;
  table.mean_cost.assign(table.optimizers.size(),
                         std::vector<std::optional<double>>(table.budgets.size()));

  for (std::size_t o = 0; o < table.optimizers.size(); ++o) {
    for (std::size_t b = 0; b < table.budgets.size(); ++b) {
      if (!reachable(config, table.optimizers[o], table.budgets[b])) continue;
      double sum = 0.0;
      long long count = 0;
      for (const auto& row : rows) {
        if (row.optimizer != table.optimizers[o] || row.budget != table.budgets[b])
          continue;
        sum += row.exact_cost;
        ++count;
      }
      if (count > 0) table.mean_cost[o][b] = sum / static_cast<double>(count);
    }
  }
  return table;
}

std::string render_summary(const SummaryTable& table) {
  std::ostringstream out;
  out << "optimizer";
  for (long long budget : table.budgets) out << '\t' << budget;
  out << '\n';
  for (std::size_t o = 0; o < table.optimizers.size(); ++o) {
    out << table.optimizers[o];
    for (std::size_t b = 0; b < table.budgets.size(); ++b) {
      out << '\t';
      if (table.mean_cost[o][b]) {
        char buffer[32];
        std::snprintf(buffer, sizeof(buffer), "%.4f", *table.mean_cost[o][b]);
        out << buffer;
      } else {
        out << 'X';
      }
    }
    out << '\n';
  }
  return out.str();
}

void write_summary_csv(const SummaryTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_summary_csv: cannot write " + path);
  out << "optimizer";
  for (long long budget : table.budgets) out << ',' << budget;
  out << '\n';
  for (std::size_t o = 0; o < table.optimizers.size(); ++o) {
    out << table.optimizers[o];
    for (std::size_t b = 0; b < table.budgets.size(); ++b) {
      out << ',';
      if (table.mean_cost[o][b])
        out << format_double(*table.mean_cost[o][b]);
      else
        out << 'X';
    }
    out << '\n';
  }
}

void write_cdf_csv(const std::vector<CdfCurve>& curves, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_cdf_csv: cannot write " + path);
  out << "optimizer,exact_cost,cdf\n";
  for (const auto& curve : curves)
    for (const auto& [cost, fraction] : curve.points)
      out << curve.optimizer << ',' << format_double(cost) << ','
          << format_double(fraction) << '\n';
}

}  // namespace shotopt::bench
