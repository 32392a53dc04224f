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

#include "bench/generators.hpp"

#include <algorithm>
#include <set>

#include "common/error.hpp"
#include "common/rng.hpp"

namespace benchagg::bench {

Graph RandomGraph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  Graph g;
  g.num_vertices = n;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (rng.Bernoulli(p)) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

PseudoBooleanProblem MaxCutProblem(const Graph& g, std::uint64_t seed) {
  g.Validate();
  PseudoBooleanProblem p(g.num_vertices, Sense::kMaximize, Family::kMaxCut, seed);
  for (auto [u, v] : g.edges) {
    p.AddTerm({u}, 1.0);
    p.AddTerm({v}, 1.0);
    p.AddTerm({u, v}, -2.0);
  }
  return p;
}

Graph RandomBipartiteGraph(std::size_t per_side, double p, std::uint64_t seed) {
  Rng rng(seed);
  Graph g;
  g.num_vertices = 2 * per_side;
  g.side = std::vector<std::uint8_t>(g.num_vertices, 0);
  for (std::size_t i = per_side; i < g.num_vertices; ++i) (*g.side)[i] = 1;
  for (std::uint32_t u = 0; u < per_side; ++u) {
    for (std::uint32_t v = 0; v < per_side; ++v) {
      if (rng.Bernoulli(p)) g.edges.emplace_back(u, static_cast<std::uint32_t>(per_side + v));
    }
  }
  return g;
}

Graph ZigzagMatchingGraph(std::size_t per_side) {
  Require(per_side >= 1, ErrorCode::kInvalidArgument, "matching: empty graph");
  Graph g;
  g.num_vertices = 2 * per_side;
  g.side = std::vector<std::uint8_t>(g.num_vertices, 0);
  const auto n = static_cast<std::uint32_t>(per_side);
  for (std::uint32_t i = 0; i < n; ++i) {
    (*g.side)[n + i] = 1;
    g.edges.emplace_back(i, n + i);
    if (i + 1 < n) g.edges.emplace_back(i + 1, n + i);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

PseudoBooleanProblem MatchingProblem(const Graph& g, std::uint64_t seed) {
  g.Validate();
  const double penalty = static_cast<double>(g.MaxDegree()) + 1.0;
  PseudoBooleanProblem p(g.edges.size(), Sense::kMaximize, Family::kMatching, seed);
  std::vector<std::vector<std::uint32_t>> incident(g.num_vertices);
  for (std::uint32_t e = 0; e < g.edges.size(); ++e) {
    p.AddTerm({e}, 1.0);
    incident[g.edges[e].first].push_back(e);
    incident[g.edges[e].second].push_back(e);
  }
  for (const auto& edges : incident) {
    for (std::size_t a = 0; a < edges.size(); ++a) {
      for (std::size_t b = a + 1; b < edges.size(); ++b) {
        p.AddTerm({edges[a], edges[b]}, -penalty);
      }
    }
  }
  return p;
}

PseudoBooleanProblem RandomHobo(std::size_t num_vars, std::size_t degree, std::uint64_t seed) {
  Require(degree >= 1 && degree <= num_vars, ErrorCode::kInvalidArgument,
          "hobo: degree must lie in [1, num_vars]");
  Rng rng(seed);
  PseudoBooleanProblem p(num_vars, Sense::kMinimize, Family::kHobo, seed);
  auto random_term = [&](std::size_t len) {
    std::set<std::uint32_t> vars;
    while (vars.size() < len) vars.insert(static_cast<std::uint32_t>(rng.Below(num_vars)));
    return Term(vars.begin(), vars.end());
  };
  auto coefficient = [&] {
    double c = 0.0;
    while (c == 0.0) c = rng.Uniform(-1.0, 1.0);
    return c;
  };
  p.AddTerm(random_term(degree), coefficient());
  for (std::size_t i = 0; i < num_vars; ++i) p.AddTerm({static_cast<std::uint32_t>(i)}, coefficient());
  const std::size_t extra = 2 * num_vars;
  for (std::size_t k = 0; k < extra; ++k) {
    const std::size_t len = degree >= 2 ? 2 + rng.Below(degree - 1) : 1;
    p.AddTerm(random_term(len), coefficient());
  }
  // Merging could in principle cancel the top-degree term; restore one.
  if (p.degree() < degree) p.AddTerm(random_term(degree), 1.0);
  return p;
}

Instance gen_instance(const InstanceSpec& spec) {
  Instance inst;
  inst.spec = spec;
  switch (spec.family) {
    case Family::kMaxCut: {
      Require(spec.size >= 2, ErrorCode::kInvalidArgument, "maxcut: need at least 2 vertices");
      inst.graph = RandomGraph(spec.size, 0.5, spec.seed);
      inst.problem = MaxCutProblem(*inst.graph, spec.seed);
      inst.descriptor = "maxcut/n=" + std::to_string(spec.size);
      break;
    }
    case Family::kMatching: {
      Require(spec.size >= 1, ErrorCode::kInvalidArgument, "matching: need at least 1 vertex per side");
      inst.graph = spec.hard_matching
                       ? ZigzagMatchingGraph(spec.size)
                       : RandomBipartiteGraph(spec.size, spec.edge_probability, spec.seed);
      inst.problem = MatchingProblem(*inst.graph, spec.seed);
      inst.descriptor = std::string(spec.hard_matching ? "matching-zigzag" : "matching") +
                        "/n=" + std::to_string(spec.size);
      break;
    }
    case Family::kHobo: {
      inst.problem = RandomHobo(spec.size, spec.degree, spec.seed);
      inst.descriptor =
          "hobo/n=" + std::to_string(spec.size) + ",d=" + std::to_string(spec.degree);
      break;
    }
    case Family::kFactorization: {
      inst.factorization = FactorizationLayoutFor(spec.target);
      inst.problem = FactorizationProblem(*inst.factorization);
      inst.descriptor = "factorization/N=" + std::to_string(spec.target);
      break;
    }
    case Family::kLinearSystem: {
      inst.linear = GenerateLinearSystem(spec.size, spec.seed);
      inst.descriptor = "linear_system/n=" + std::to_string(spec.size);
      break;
    }
    case Family::kCustom:
      Fail(ErrorCode::kInvalidArgument, "custom problems are loaded, not generated");
  }
  return inst;
}

}  // namespace benchagg::bench
