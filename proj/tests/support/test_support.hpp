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

// Shared helpers for the unit and acceptance tests: fixture paths, random
// model generators, and oracles that avoid the library code they check.

#ifndef BENCHAGG_TESTS_TEST_SUPPORT_HPP_
#define BENCHAGG_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <optional>
#include <utility>

#include "bench/problem.hpp"
#include "elicitation/capacity_elicitation.hpp"
#include "common/rng.hpp"
#include "mcda/tree.hpp"

namespace benchagg::testing {

std::string FixturePath(const std::string& name);
std::string ReadFixture(const std::string& name);
std::string FakeAdapterPath();

class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::string str(const std::string& child = "") const;

 private:
  std::filesystem::path path_;
};

// Random valid 2-additive capacity; every pair gets a term with probability
// pair_density.
mcda::ChoquetParams RandomParams(Rng& rng, std::size_t n, double pair_density = 0.5);

// Random tree: aggregation nodes of arity 2..max_arity down to max_depth,
// criterion leaves with random piecewise-linear utilities (both directions).
mcda::CriteriaTree RandomTree(Rng& rng, int max_depth, std::size_t max_arity);

// Profile with a value for every metric of the tree, drawn around the
// breakpoint range (including points past both anchors).
mcda::MeasurementProfile RandomProfile(Rng& rng, const mcda::CriteriaTree& tree,
                                       const std::string& id);

// Choquet value straight from the defining sum.
double ChoquetBySum(const mcda::ChoquetParams& p, const std::vector<double>& x);

// Shapley value of the game v(S) = F(x on S, r elsewhere) - F(r), by
// enumerating all orderings.
std::vector<double> ShapleyByPermutations(const mcda::ChoquetParams& p, const std::vector<double>& x,
                                          const std::vector<double>& r);

// Optimum over all 2^n assignments; argopt receives every optimal assignment.
double BruteForceOptimum(const bench::PseudoBooleanProblem& p,
                         std::vector<bench::Assignment>* argopt = nullptr);

// Maximum matching by simple augmenting paths (Kuhn), not Hopcroft-Karp.
std::size_t KuhnMatching(const bench::Graph& g);

// Maximum matching by enumerating edge subsets; small graphs only.
std::size_t BruteForceMatching(const bench::Graph& g);

std::size_t BruteForceMaxCut(const bench::Graph& g);

// Capacity session generated from an integer-coefficient capacity, so every
// ranked pattern value is an integer and the gaps reproduce it exactly.
// `expected` holds the normalized value of each ranked pattern.
struct GeneratedSession {
  elicitation::CapacitySession session;
  std::vector<std::pair<elicitation::Pattern, double>> expected;
};

// nullopt when the draw cannot be expressed with the gap scale.
std::optional<GeneratedSession> RandomConsistentSession(Rng& rng, std::size_t n);

}  // namespace benchagg::testing

#endif  // BENCHAGG_TESTS_TEST_SUPPORT_HPP_
