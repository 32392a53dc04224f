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

#ifndef BENCHAGG_BENCH_BENCH_IO_HPP_
#define BENCHAGG_BENCH_BENCH_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "bench/generators.hpp"
#include "bench/qscore.hpp"
#include "bench/solvers.hpp"
#include "common/json_util.hpp"
#include "service/record.hpp"

namespace benchagg::bench {

// {"schema_version": 1, "kind": "benchagg.problem", "num_vars": n,
//  "sense": "minimize"|"maximize", "family": f, "seed": s,
//  "terms": [{"vars": [i, j, ...], "coef": c}, ...]}
Json ProblemToJson(const PseudoBooleanProblem& p);
PseudoBooleanProblem ProblemFromJson(const Json& j);

// {"num_vertices": n, "edges": [[u, v], ...], "side": [0, 1, ...] (optional)}
Json GraphToJson(const Graph& g);
Graph GraphFromJson(const Json& j);

Json SolveResultToJson(const SolveResult& r);
Json QScoreResultToJson(const QScoreResult& r, const QScoreConfig& cfg);

// "a..b", "a..b/step" or "a,b,c". Values are returned sorted and unique.
std::vector<std::size_t> ParseSizes(const std::string& text);

struct BenchRunConfig {
  Family family = Family::kMaxCut;
  SolverSpec solver;
  std::vector<std::size_t> sizes;  // N values for factorization
  std::size_t seeds = 1;
  std::uint64_t base_seed = 0;
  std::size_t hobo_degree = 3;
  bool hard_matching = false;
  std::string alternative_id;  // defaults to the solver name
  std::string timestamp;       // defaults to now
};

// Runs every (size, seed) pair and returns one record per run. Factorization
// sizes that are even, prime or below 9 are skipped. Linear systems are not
// pseudo-Boolean: "exhaustive" means a direct LU solve and "random" a uniform
// vector in [-1, 1]^n; other solvers are rejected.
std::vector<service::BenchmarkRecord> bench_run(const BenchRunConfig& cfg);

// One record per solver run, one per tested size (mean cut and beta) and a
// final one holding the Q-score itself.
std::vector<service::BenchmarkRecord> QScoreRecords(const QScoreResult& r,
                                                    const std::string& alternative_id,
                                                    const std::string& timestamp);

// Writes each record to <dir>/<NNNN>-<family>-<instance>.json; returns the
// paths written.
std::vector<std::string> WriteRecordFiles(const std::vector<service::BenchmarkRecord>& records,
                                          const std::string& dir);

}  // namespace benchagg::bench

#endif  // BENCHAGG_BENCH_BENCH_IO_HPP_
