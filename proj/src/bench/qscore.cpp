// Copyright 2026 The benchagg Authors.
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

#include "bench/qscore.hpp"

#include <cmath>

#include "bench/generators.hpp"
#include "common/error.hpp"
#include "common/rng.hpp"

namespace benchagg::bench {

const char* RandomBaselineName(RandomBaseline b) {
  return b == RandomBaseline::kExactGnp ? "exact_gnp" : "asymptotic";
}

RandomBaseline ParseRandomBaseline(const std::string& name) {
  if (name == "exact_gnp") return RandomBaseline::kExactGnp;
  if (name == "asymptotic") return RandomBaseline::kAsymptotic;
  Fail(ErrorCode::kValidation, "unknown random baseline '" + name + "'");
}

void QScoreConfig::Validate() const {
  Require(threshold > 0.0 && threshold < 1.0, ErrorCode::kValidation,
          "qscore: threshold must lie in (0, 1)");
  Require(!sizes.empty(), ErrorCode::kValidation, "qscore: no sizes to test");
  Require(instances_per_size >= 1, ErrorCode::kValidation,
          "qscore: at least one instance per size");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    Require(sizes[i] >= 5, ErrorCode::kValidation, "qscore: sizes must be at least 5");
    Require(i == 0 || sizes[i] > sizes[i - 1], ErrorCode::kValidation,
            "qscore: sizes must be strictly increasing");
  }
}

double RandomCutMean(std::size_t n, RandomBaseline baseline) {
  const auto x = static_cast<double>(n);
  return baseline == RandomBaseline::kExactGnp ? x * (x - 1.0) / 8.0 : x * x / 8.0;
}

double beta_score(std::size_t n, double mean_best_cut, const QScoreConfig& cfg) {
  Require(n >= 5, ErrorCode::kInvalidArgument, "beta: n must be at least 5");
  const auto x = static_cast<double>(n);
  return (mean_best_cut - RandomCutMean(n, cfg.baseline)) / (kBestCutSlope * std::pow(x, 1.5));
}

QScoreResult qscore(const SolverSpec& solver, const QScoreConfig& cfg) {
  cfg.Validate();
  QScoreResult result;
  for (std::size_t n : cfg.sizes) {
    QScoreSize size;
    size.n = n;
    double total = 0.0;
    try {
      for (std::size_t k = 0; k < cfg.instances_per_size; ++k) {
        QScoreRun run;
        run.n = n;
        run.instance_seed = DeriveSeed(DeriveSeed(cfg.seed, n), k);
        run.solver_seed = DeriveSeed(DeriveSeed(solver.seed, n), k);
        InstanceSpec ispec;
        ispec.family = Family::kMaxCut;
        ispec.size = n;
        ispec.seed = run.instance_seed;
        const Instance inst = gen_instance(ispec);
        SolverSpec s = solver;
        s.seed = run.solver_seed;
        const SolveResult r = solve(*inst.problem, s);
        run.edges = inst.graph->edges.size();
        run.cut = r.objective;
        run.wall_clock_seconds = r.wall_clock_seconds;
        run.energy_joules = r.energy_joules;
        total += r.objective;
        size.runs.push_back(run);
      }
    } catch (const Error& e) {
      result.error = "size " + std::to_string(n) + ": " + e.what();
      return result;
    }
    size.mean_best_cut = total / static_cast<double>(cfg.instances_per_size);
    size.beta = beta_score(n, size.mean_best_cut, cfg);
    size.passed = size.beta > cfg.threshold;
    if (size.passed) result.qscore = n;
    result.sizes.push_back(std::move(size));
  }
  return result;
}

}  // namespace benchagg::bench
