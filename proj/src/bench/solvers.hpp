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

#ifndef BENCHAGG_BENCH_SOLVERS_HPP_
#define BENCHAGG_BENCH_SOLVERS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bench/problem.hpp"
#include "common/json_util.hpp"

namespace benchagg::bench {

enum class Method { kRandom, kExhaustive, kSimulatedAnnealing, kExternal };

const char* MethodName(Method m);  // random, exhaustive, sa, external
Method ParseMethod(const std::string& name);

inline constexpr std::size_t kExhaustiveMaxVars = 24;

struct ExternalAdapter {
  std::vector<std::string> argv;  // argv[0] is looked up on PATH
  double timeout_seconds = 60.0;
};

struct SolverSpec {
  Method method = Method::kSimulatedAnnealing;
  std::uint64_t seed = 0;
  // Annealing budget: sweeps per restart (one sweep = num_vars flip attempts).
  std::size_t sweeps = 1000;
  std::size_t restarts = 4;
  ExternalAdapter adapter;
};

struct SolveResult {
  Assignment assignment;
  double objective = 0.0;
  double wall_clock_seconds = 0.0;
  std::optional<double> energy_joules;
  Json solver = Json::object();  // name, parameters, adapter metadata
};

SolveResult solve(const PseudoBooleanProblem& p, const SolverSpec& spec);

SolveResult SolveRandom(const PseudoBooleanProblem& p, std::uint64_t seed);

// Gray-code enumeration. Among assignments whose objective is optimal within
// 1e-9 (relative), the one with the smallest integer code sum_i x_i 2^i wins.
SolveResult SolveExhaustive(const PseudoBooleanProblem& p);

// Geometric cooling from T0 = max |coefficient| down to
// 0.05 * min |coefficient|, sequential single-bit-flip sweeps.
SolveResult SolveAnnealing(const PseudoBooleanProblem& p, std::size_t sweeps,
                           std::size_t restarts, std::uint64_t seed);

}  // namespace benchagg::bench

#endif  // BENCHAGG_BENCH_SOLVERS_HPP_
