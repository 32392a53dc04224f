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

#ifndef BENCHAGG_BENCH_GENERATORS_HPP_
#define BENCHAGG_BENCH_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "bench/factorization.hpp"
#include "bench/linear_system.hpp"
#include "bench/problem.hpp"

namespace benchagg::bench {

// Parameters of one generated instance. `size` is the vertex count (MaxCut),
// the number of vertices per side (Matching), the variable count (Hobo) or the
// matrix dimension (LinearSystem); `target` is N for Factorization.
struct InstanceSpec {
  Family family = Family::kMaxCut;
  std::size_t size = 0;
  std::size_t degree = 3;          // Hobo
  double edge_probability = 0.5;   // Matching (random bipartite variant)
  bool hard_matching = false;      // Matching stand-in hard family
  std::uint64_t target = 0;        // Factorization N
  std::uint64_t seed = 0;
};

struct Instance {
  InstanceSpec spec;
  std::string descriptor;  // e.g. "maxcut/n=10"
  std::optional<PseudoBooleanProblem> problem;
  std::optional<Graph> graph;
  std::optional<FactorizationLayout> factorization;
  std::optional<LinearSystem> linear;
};

// Deterministic in the spec (including the seed).
Instance gen_instance(const InstanceSpec& spec);

// Erdos-Renyi G(n, 1/2).
Graph RandomGraph(std::size_t n, double p, std::uint64_t seed);

// Cut size as a maximization: sum over edges of x_u + x_v - 2 x_u x_v.
PseudoBooleanProblem MaxCutProblem(const Graph& g, std::uint64_t seed = 0);

// Random bipartite graph with `per_side` vertices on each side.
Graph RandomBipartiteGraph(std::size_t per_side, double p, std::uint64_t seed);

// Stand-in for the hard matching series used against annealers: a zigzag
// chain u_i - v_i - u_{i+1} whose unique perfect matching {u_i v_i} competes
// with near-perfect matchings that leave one defect at each end of the chain.
// This is NOT the published G_n construction; load that from a graph file.
Graph ZigzagMatchingGraph(std::size_t per_side);

// Maximize sum_e x_e - P sum_{v} sum_{e < f at v} x_e x_f with
// P = max degree + 1. Variables are edge indices of `g`.
PseudoBooleanProblem MatchingProblem(const Graph& g, std::uint64_t seed = 0);

// Random multilinear polynomial with `num_vars` variables and at least one
// term of exactly `degree` variables; coefficients uniform in [-1, 1].
PseudoBooleanProblem RandomHobo(std::size_t num_vars, std::size_t degree, std::uint64_t seed);

}  // namespace benchagg::bench

#endif  // BENCHAGG_BENCH_GENERATORS_HPP_
