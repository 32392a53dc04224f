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

#include "bench/matching.hpp"

#include <functional>
#include <limits>
#include <queue>

#include "common/error.hpp"

namespace benchagg::bench {

std::size_t matching_oracle(const Graph& g) {
  Require(g.side.has_value(), ErrorCode::kInvalidArgument,
          "matching oracle: graph has no bipartition");
  g.Validate();
  const std::size_t n = g.num_vertices;
  const auto& side = *g.side;
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (auto [u, v] : g.edges) {
    if (side[u] == 0) {
      adj[u].push_back(v);
    } else {
      adj[v].push_back(u);
    }
  }
  constexpr std::uint32_t kFree = std::numeric_limits<std::uint32_t>::max();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint32_t> mate(n, kFree);
  std::vector<std::size_t> dist(n, kInf);

  auto bfs = [&] {
    std::queue<std::uint32_t> q;
    bool found = false;
    for (std::uint32_t u = 0; u < n; ++u) {
      if (side[u] != 0) continue;
      if (mate[u] == kFree) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto v : adj[u]) {
        const auto w = mate[v];
        if (w == kFree) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };

  std::function<bool(std::uint32_t)> dfs = [&](std::uint32_t u) {
    for (auto v : adj[u]) {
      const auto w = mate[v];
      if (w == kFree || (dist[w] == dist[u] + 1 && dfs(w))) {
        mate[u] = v;
        mate[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  std::size_t size = 0;
  while (bfs()) {
    for (std::uint32_t u = 0; u < n; ++u) {
      if (side[u] == 0 && mate[u] == kFree && dfs(u)) ++size;
    }
  }
  return size;
}

bool IsMatching(const Graph& g, const Assignment& edges) {
  Require(edges.size() == g.edges.size(), ErrorCode::kInvalidArgument,
          "matching: one bit per edge expected");
  std::vector<bool> used(g.num_vertices, false);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!edges[e]) continue;
    auto [u, v] = g.edges[e];
    if (used[u] || used[v]) return false;
    used[u] = used[v] = true;
  }
  return true;
}

}  // namespace benchagg::bench
