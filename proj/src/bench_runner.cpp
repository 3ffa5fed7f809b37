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

#include "shotopt/bench/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace shotopt::bench {

namespace {

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::vector<RunOutput> run_all(const ExperimentConfig& config, int workers) {
  config.validate();
  const std::vector<std::uint64_t> seeds = config.effective_seeds();
  const long long max_budget = config.budgets.back();
  const long long n_runs =
      static_cast<long long>(config.optimizers.size()) *
      static_cast<long long>(seeds.size());

  std::vector<RunOutput> outputs(static_cast<std::size_t>(n_runs));
  std::string error;

  auto execute = [&](long long run_id) {
    const std::size_t i_opt =
        static_cast<std::size_t>(run_id) / seeds.size();
    const std::size_t i_seed =
        static_cast<std::size_t>(run_id) % seeds.size();
    const OptimizerSpec& spec = config.optimizers[i_opt];
    const std::uint64_t seed = seeds[i_seed];

    const auto instance = config.make_instance(seed);
    const auto optimizer = config.make_optimizer(spec, max_budget);
    Rng run_rng = Rng::from_key(seed, fnv1a64(spec.label()));

    RunOutput out;
    out.run_id = run_id;
    out.seed = seed;
    out.optimizer = spec.label();
    out.trace = optimizer->run(*instance.problem, instance.theta0, max_budget,
                               run_rng);
    outputs[static_cast<std::size_t>(run_id)] = std::move(out);
  };

  if (workers <= 1) {
    // Serial reference path; kept exercised by tests against the
    // parallel one.
    for (long long r = 0; r < n_runs; ++r) execute(r);
  } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (long long r = 0; r < n_runs; ++r) {
      try {
        execute(r);
      } catch (const std::exception& e) {
#pragma omp critical
        error = e.what();
      }
    }
    if (!error.empty()) throw std::runtime_error("run_all: " + error);
  }
  return outputs;
}

std::vector<CheckpointRow> extract_checkpoints(
    const ExperimentConfig& config, const std::vector<RunOutput>& runs) {
  std::vector<CheckpointRow> rows;
  rows.reserve(runs.size() * config.budgets.size());
  for (const auto& run : runs) {
    for (long long budget : config.budgets) {
      // State when this budget ran out: the first iteration whose total
      // reached it. A run to the maximum budget always contains it.
      const auto it = std::find_if(
          run.trace.records.begin(), run.trace.records.end(),
          [budget](const IterationRecord& r) { return r.s_tot >= budget; });
      if (it == run.trace.records.end())
        throw std::runtime_error("extract_checkpoints: trace too short");
      CheckpointRow row;
      row.run_id = run.run_id;
      row.seed = run.seed;
      row.optimizer = run.optimizer;
      row.task = config.task;
      row.noise = config.noise.enabled;
      row.budget = budget;
      row.s_tot = it->s_tot;
      row.exact_cost = it->exact_cost;
      row.est_cost = it->est_cost;
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const CheckpointRow& a, const CheckpointRow& b) {
    if (a.optimizer != b.optimizer) return a.optimizer < b.optimizer;
    if (a.seed != b.seed) return a.seed < b.seed;
    return a.budget < b.budget;
  });
  return rows;
}

void write_outputs(const ExperimentConfig& config,
                   const std::vector<RunOutput>& runs,
                   const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(fs::path(out_dir) / "traces", ec);
  if (ec)
    throw std::runtime_error("write_outputs: cannot create " + out_dir + ": " +
                             ec.message());

  // Deterministic trace-file order: sort a view by (optimizer, seed).
  std::vector<const RunOutput*> ordered;
  ordered.reserve(runs.size());
  for (const auto& run : runs) ordered.push_back(&run);
  std::sort(ordered.begin(), ordered.end(),
            [](const RunOutput* a, const RunOutput* b) {
              if (a->optimizer != b->optimizer) return a->optimizer < b->optimizer;
              return a->seed < b->seed;
            });

  for (const RunOutput* run : ordered) {
    const fs::path path = fs::path(out_dir) / "traces" /
                          (run->optimizer + "_seed" + std::to_string(run->seed) + ".csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_outputs: cannot write " + path.string());
    out << "# optimizer=" << run->optimizer << " seed=" << run->seed
        << " initial_exact_cost=" << format_double(run->trace.initial_exact_cost)
        << " total_executions=" << run->trace.total_executions << "\n";
    out << "iteration,consumed,s_tot,shots_sum,shots_min,shots_max,"
           "alpha_min,alpha_max,min_gain,est_cost,exact_cost\n";
    for (const auto& rec : run->trace.records) {
      out << rec.iteration << ',' << rec.consumed << ',' << rec.s_tot << ','
          << rec.shots_sum << ',' << rec.shots_min << ',' << rec.shots_max << ','
          << format_double(rec.alpha_min) << ',' << format_double(rec.alpha_max)
          << ',' << format_double(rec.min_gain) << ','
          << format_double(rec.est_cost) << ',' << format_double(rec.exact_cost)
          << '\n';
    }
  }

  const std::vector<CheckpointRow> rows = extract_checkpoints(config, runs);
  const fs::path path = fs::path(out_dir) / "checkpoints.csv";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_outputs: cannot write " + path.string());
  out << "run_id,seed,optimizer,task,noise,budget,s_tot,exact_cost,est_cost\n";
  for (const auto& row : rows) {
    out << row.run_id << ',' << row.seed << ',' << row.optimizer << ','
        << row.task << ',' << (row.noise ? "on" : "off") << ',' << row.budget
        << ',' << row.s_tot << ',' << format_double(row.exact_cost) << ','
        << format_double(row.est_cost) << '\n';
  }
}

void run_experiment(const ExperimentConfig& config, const std::string& out_dir,
                    int workers) {
  const std::vector<RunOutput> runs = run_all(config, workers);
  write_outputs(config, runs, out_dir);
}

std::vector<CheckpointRow> load_checkpoints(const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("load_checkpoints: cannot open " + csv_path);
  std::vector<CheckpointRow> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    CheckpointRow row;
    auto next = [&]() -> std::string {
      if (!std::getline(ss, field, ','))
        throw std::runtime_error("load_checkpoints: short row");
      return field;
    };
    row.run_id = std::stoll(next());
    row.seed = std::stoull(next());
    row.optimizer = next();
    row.task = next();
    row.noise = next() == "on";
    row.budget = std::stoll(next());
    row.s_tot = std::stoll(next());
    row.exact_cost = std::stod(next());
    const std::string est = next();
    row.est_cost = est == "nan" ? std::nan("") : std::stod(est);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace shotopt::bench
