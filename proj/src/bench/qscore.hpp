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

#ifndef BENCHAGG_BENCH_QSCORE_HPP_
#define BENCHAGG_BENCH_QSCORE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bench/solvers.hpp"

namespace benchagg::bench {

// Mean cut of a uniformly random assignment. kExactGnp is the exact
// expectation n(n-1)/8 on G(n, 1/2); kAsymptotic is the customary n^2/8,
// which overstates the random baseline by n/8 and biases beta downwards by
// about 0.7/sqrt(n) at desk-scale sizes.
enum class RandomBaseline { kExactGnp, kAsymptotic };

const char* RandomBaselineName(RandomBaseline b);  // exact_gnp, asymptotic
RandomBaseline ParseRandomBaseline(const std::string& name);

inline constexpr double kBestCutSlope = 0.178;

struct QScoreConfig {
  std::vector<std::size_t> sizes{10, 20, 30};
  std::size_t instances_per_size = 10;
  double threshold = 0.2;
  RandomBaseline baseline = RandomBaseline::kExactGnp;
  std::uint64_t seed = 0;

  // threshold in (0, 1), sizes non-empty, strictly increasing and >= 5.
  void Validate() const;
};

double RandomCutMean(std::size_t n, RandomBaseline baseline);

// (mean_best_cut - random mean) / (0.178 n^{3/2}). Throws for n < 5.
double beta_score(std::size_t n, double mean_best_cut, const QScoreConfig& cfg);

struct QScoreRun {
  std::size_t n = 0;
  std::uint64_t instance_seed = 0;
  std::uint64_t solver_seed = 0;
  std::size_t edges = 0;
  double cut = 0.0;
  double wall_clock_seconds = 0.0;
  std::optional<double> energy_joules;
};

struct QScoreSize {
  std::size_t n = 0;
  double mean_best_cut = 0.0;
  double beta = 0.0;
  bool passed = false;
  std::vector<QScoreRun> runs;
};

struct QScoreResult {
  std::size_t qscore = 0;  // 0 when no tested size passes
  std::vector<QScoreSize> sizes;
  std::optional<std::string> error;  // solver failure; sizes holds what completed
};

// Instance k at size n uses seed DeriveSeed(DeriveSeed(cfg.seed, n), k); the
// solver seed is derived the same way from solver.seed.
QScoreResult qscore(const SolverSpec& solver, const QScoreConfig& cfg);

}  // namespace benchagg::bench

#endif  // BENCHAGG_BENCH_QSCORE_HPP_
