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

#ifndef BENCHAGG_ELICITATION_CAPACITY_ELICITATION_HPP_
#define BENCHAGG_ELICITATION_CAPACITY_ELICITATION_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "elicitation/intensity.hpp"
#include "elicitation/utility_elicitation.hpp"
#include "mcda/choquet.hpp"

namespace benchagg::elicitation {

inline constexpr double kCapacityTolerance = 1e-6;
inline constexpr std::size_t kMaxCapacityChildren = 12;
// Above this arity the pair patterns may be a subset; pairs left out get no
// interaction term.
inline constexpr std::size_t kFullPairElicitationLimit = 4;

// Ranking of fictitious alternatives at one aggregation node, worst first.
// Each alternative is the set of children held at their Good level (the rest
// at Bad): {} is all-Bad, {i} a singleton, {i, j} a pair, all children the
// all-Good alternative.
struct CapacitySession {
  std::string node_id;
  std::vector<std::string> children;
  std::vector<std::vector<std::string>> ranking;
  std::vector<Intensity> gaps;
};

// A fictitious alternative as a bit mask over child positions.
using Pattern = std::uint32_t;

struct PatternTarget {
  Pattern pattern = 0;
  double target = 0.0;
};

struct PatternDeviation {
  Pattern pattern = 0;
  double target = 0.0;
  double achieved = 0.0;
};

std::string DescribePattern(const std::vector<std::string>& children, Pattern p);

// Choquet value of a fictitious alternative.
double PatternValue(const mcda::ChoquetParams& params, Pattern p);

// Structural and feasibility violations; never throws for malformed input.
std::vector<Violation> check_consistency(const CapacitySession& s);

// Target values of the ranked alternatives (interval scale anchored
// all-Bad -> 0, all-Good -> 1). Requires a structurally valid session.
std::vector<PatternTarget> capacity_targets(const CapacitySession& s);

struct CapacityFit {
  bool feasible = false;
  double max_deviation = 0.0;
  std::vector<PatternDeviation> binding;  // worst-fitting patterns when infeasible
  std::vector<double> coefficients;       // singletons, then (min, max) per pair
};

// Nonnegative coefficients summing to one whose pattern values match the
// targets within `tolerance`; among those, minimizes the total interaction
// mass. `pairs` lists the pair terms allowed to be nonzero.
CapacityFit fit_capacity(std::size_t num_children,
                         const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                         const std::vector<PatternTarget>& targets,
                         double tolerance = kCapacityTolerance);

// Throwing wrapper over fit_capacity; ConsistencyError names the patterns.
mcda::ChoquetParams solve_capacity(const std::vector<std::string>& children,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                   const std::vector<PatternTarget>& targets,
                                   double tolerance = kCapacityTolerance);

// Closed form for two children from the singleton targets t1, t2.
mcda::ChoquetParams two_child_capacity(const std::vector<std::string>& children, double t1,
                                       double t2);

mcda::ChoquetParams derive_capacity(const CapacitySession& s);

}  // namespace benchagg::elicitation

#endif  // BENCHAGG_ELICITATION_CAPACITY_ELICITATION_HPP_
