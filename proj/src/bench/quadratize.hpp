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

#ifndef BENCHAGG_BENCH_QUADRATIZE_HPP_
#define BENCHAGG_BENCH_QUADRATIZE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "bench/problem.hpp"

namespace benchagg::bench {

struct Ancilla {
  std::uint32_t var = 0;  // index of y in the output problem
  std::uint32_t first = 0;
  std::uint32_t second = 0;  // y stands for x_first * x_second
};

struct Quadratized {
  PseudoBooleanProblem problem;
  std::size_t original_vars = 0;
  double penalty = 0.0;
  std::vector<Ancilla> ancillas;

  // Leading original_vars bits.
  Assignment Project(const Assignment& extended) const;
  // Extends an original assignment with consistent ancilla values.
  Assignment Lift(const Assignment& original) const;
};

// 1 + sum of |coefficient| over non-constant terms.
double DefaultPenalty(const PseudoBooleanProblem& p);

// Rosenberg substitution. Each round picks the pair of variables occurring
// most often among the highest-degree terms (lexicographically smallest on
// ties), replaces it by a fresh ancilla everywhere and adds
// M (x_i x_j - 2 x_i y - 2 x_j y + 3 y), negated for maximization.
// Throws kInvalidArgument on degree <= 2 input or M <= 0.
Quadratized quadratize(const PseudoBooleanProblem& p, std::optional<double> penalty = std::nullopt);

}  // namespace benchagg::bench

#endif  // BENCHAGG_BENCH_QUADRATIZE_HPP_
