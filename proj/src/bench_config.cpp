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

#include "shotopt/bench/config.hpp"

#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "shotopt/optimizers/cans.hpp"
#include "shotopt/optimizers/gd.hpp"
#include "shotopt/optimizers/soff.hpp"

namespace shotopt::bench {

using nlohmann::json;

std::string OptimizerSpec::label() const {
  if (kind == "icans1" || kind == "icans2" || kind == "cans") return kind;
  return kind + "-" + std::to_string(shots);
}

namespace {

OptimizerSpec parse_optimizer(const json& j) {
  OptimizerSpec spec;
  spec.kind = j.at("name").get<std::string>();
  if (j.contains("shots")) spec.shots = j.at("shots").get<long long>();
  if (j.contains("alpha")) spec.alpha = j.at("alpha").get<double>();
  return spec;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: JSON parse error: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    if (j.contains("task")) cfg.task = j.at("task").get<std::string>();
    if (j.contains("n")) cfg.n = j.at("n").get<int>();
    if (j.contains("D")) cfg.D = j.at("D").get<int>();
    if (j.contains("J")) cfg.J = j.at("J").get<double>();
    if (j.contains("B")) cfg.B = j.at("B").get<double>();
    if (j.contains("optimizers"))
      for (const auto& o : j.at("optimizers")) cfg.optimizers.push_back(parse_optimizer(o));
    if (j.contains("seeds"))
      for (const auto& s : j.at("seeds")) cfg.seeds.push_back(s.get<std::uint64_t>());
    if (j.contains("master_seed")) cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("seed_count")) cfg.seed_count = j.at("seed_count").get<int>();
    if (j.contains("budgets")) {
      cfg.budgets.clear();
      for (const auto& b : j.at("budgets")) cfg.budgets.push_back(b.get<long long>());
    }
    if (j.contains("noise")) {
      const auto& nj = j.at("noise");
      if (nj.contains("enabled")) cfg.noise.enabled = nj.at("enabled").get<bool>();
      if (nj.contains("p1")) cfg.noise.p1 = nj.at("p1").get<double>();
      if (nj.contains("p2")) cfg.noise.p2 = nj.at("p2").get<double>();
      if (nj.contains("readout_flip"))
        cfg.noise.readout_flip = nj.at("readout_flip").get<double>();
    }
    if (j.contains("hyper")) {
      const auto& h = j.at("hyper");
      if (h.contains("alpha")) cfg.hyper.alpha = h.at("alpha").get<double>();
      if (h.contains("mu")) cfg.hyper.mu = h.at("mu").get<double>();
      if (h.contains("b")) cfg.hyper.bias = h.at("b").get<double>();
      if (h.contains("s_min")) cfg.hyper.s_min = h.at("s_min").get<long long>();
      if (h.contains("shot_ceiling"))
        cfg.hyper.shot_ceiling = h.at("shot_ceiling").get<long long>();
    }
    if (j.contains("adam")) {
      const auto& a = j.at("adam");
      if (a.contains("alpha")) cfg.adam.alpha = a.at("alpha").get<double>();
      if (a.contains("beta1")) cfg.adam.beta1 = a.at("beta1").get<double>();
      if (a.contains("beta2")) cfg.adam.beta2 = a.at("beta2").get<double>();
      if (a.contains("epsilon")) cfg.adam.epsilon = a.at("epsilon").get<double>();
    }
    if (j.contains("spsa")) {
      const auto& s = j.at("spsa");
      if (s.contains("a")) cfg.spsa.a = s.at("a").get<double>();
      if (s.contains("A")) cfg.spsa.A = s.at("A").get<double>();
      if (s.contains("c")) cfg.spsa.c = s.at("c").get<double>();
      if (s.contains("s_exp")) cfg.spsa.s_exp = s.at("s_exp").get<double>();
      if (s.contains("gamma_exp")) cfg.spsa.gamma_exp = s.at("gamma_exp").get<double>();
      if (s.contains("target_first_step"))
        cfg.spsa.target_first_step = s.at("target_first_step").get<double>();
    }
    if (j.contains("gd_alpha")) cfg.gd_alpha = j.at("gd_alpha").get<double>();
    if (j.contains("use_spectrum_lipschitz"))
      cfg.use_spectrum_lipschitz = j.at("use_spectrum_lipschitz").get<bool>();
    if (j.contains("full_scale")) cfg.full_scale = j.at("full_scale").get<bool>();
    if (j.contains("out_dir")) cfg.out_dir = j.at("out_dir").get<std::string>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: bad field: ") + e.what());
  }
  if (cfg.full_scale) {
    if (cfg.seeds.empty() && !j.contains("seed_count")) cfg.seed_count = 100;
    if (!j.contains("budgets")) cfg.budgets.push_back(10000000);
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

void ExperimentConfig::validate() const {
  if (task != "compile" && task != "vqe")
    throw std::invalid_argument("config: task must be 'compile' or 'vqe'");
  if (n < 1 || n > 10) throw std::invalid_argument("config: n out of range");
  if (D < 0) throw std::invalid_argument("config: D < 0");
  if (optimizers.empty())
    throw std::invalid_argument("config: at least one optimizer required");
  static const std::set<std::string> kKinds{"icans1", "icans2", "cans",
                                            "gd",     "adam",   "spsa", "soff"};
  for (const auto& spec : optimizers) {
    if (!kKinds.contains(spec.kind))
      throw std::invalid_argument("config: unknown optimizer '" + spec.kind + "'");
    const bool fixed = spec.kind == "gd" || spec.kind == "adam" ||
                       spec.kind == "spsa" || spec.kind == "soff";
    if (fixed && spec.shots < 1)
      throw std::invalid_argument("config: optimizer '" + spec.kind +
                                  "' needs shots >= 1");
  }
  if (seeds.empty() && seed_count < 1)
    throw std::invalid_argument("config: seed count must be >= 1");
  if (budgets.empty()) throw std::invalid_argument("config: budgets required");
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    if (budgets[i] < 1) throw std::invalid_argument("config: budget < 1");
    if (i > 0 && budgets[i] <= budgets[i - 1])
      throw std::invalid_argument("config: budgets must be strictly increasing");
  }
  noise.validate();
}

std::vector<std::uint64_t> ExperimentConfig::effective_seeds() const {
  if (!seeds.empty()) return seeds;
  std::vector<std::uint64_t> derived(static_cast<std::size_t>(seed_count));
  std::uint64_t sm = master_seed;
  for (auto& s : derived) s = splitmix64(sm);
  return derived;
}

std::unique_ptr<Optimizer> ExperimentConfig::make_optimizer(
    const OptimizerSpec& spec, long long max_budget) const {
  if (spec.kind == "icans1" || spec.kind == "icans2") {
    IcansHyper h = hyper;
    if (spec.alpha) h.alpha = *spec.alpha;
    return std::make_unique<IcansOptimizer>(spec.kind == "icans1" ? 1 : 2, h);
  }
  if (spec.kind == "cans") {
    IcansHyper h = hyper;
    if (spec.alpha) h.alpha = *spec.alpha;
    return std::make_unique<CansOptimizer>(h);
  }
  if (spec.kind == "gd")
    return std::make_unique<GdOptimizer>(spec.shots,
                                         spec.alpha.value_or(gd_alpha));
  if (spec.kind == "adam") {
    AdamHyper h = adam;
    if (spec.alpha) h.alpha = *spec.alpha;
    return std::make_unique<AdamOptimizer>(spec.shots, h);
  }
  if (spec.kind == "spsa") {
    SpsaHyper h = spsa;
    (void)max_budget;  // the optimizer derives A from its own budget at run time
    return std::make_unique<SpsaOptimizer>(spec.shots, h);
  }
  if (spec.kind == "soff") return std::make_unique<SoffOptimizer>(spec.shots);
  throw std::invalid_argument("config: unknown optimizer '" + spec.kind + "'");
}

ExperimentConfig::Instance ExperimentConfig::make_instance(
    std::uint64_t seed) const {
  Instance instance;
  Rng problem_rng = Rng::from_key(seed, 0);
  if (task == "compile") {
    instance.problem = std::make_shared<CompilingProblem>(CompilingProblem::random(
        n, D, noise, problem_rng, use_spectrum_lipschitz));
  } else {
    instance.problem = std::make_shared<VqeProblem>(n, D, J, B, noise,
                                                    use_spectrum_lipschitz);
  }
  instance.theta0.resize(static_cast<std::size_t>(param_dimension()));
  for (auto& angle : instance.theta0)
    angle = problem_rng.uniform(0.0, 2 * std::numbers::pi);
  return instance;
}

}  // namespace shotopt::bench
