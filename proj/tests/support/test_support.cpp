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

#include "test_support.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace benchagg::testing {

namespace fs = std::filesystem;

std::string FixturePath(const std::string& name) { return std::string(BENCHAGG_FIXTURES) + "/" + name; }

std::string ReadFixture(const std::string& name) {
  std::ifstream in(FixturePath(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string FakeAdapterPath() { return BENCHAGG_FAKE_ADAPTER; }

TempDir::TempDir() {
  std::string tmpl = (fs::temp_directory_path() / "benchagg-test-XXXXXX").string();
  if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
  path_ = tmpl;
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::string TempDir::str(const std::string& child) const {
  return child.empty() ? path_.string() : (path_ / child).string();
}

mcda::ChoquetParams RandomParams(Rng& rng, std::size_t n, double pair_density) {
  std::vector<std::string> children;
  for (std::size_t i = 0; i < n; ++i) children.push_back("c" + std::to_string(i));
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) total += x = rng.Uniform();
  std::vector<mcda::PairTerm> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!rng.Bernoulli(pair_density)) continue;
      mcda::PairTerm t{i, j, 0.0, 0.0};
      // Mostly one-sided, sometimes both.
      const double u = rng.Uniform();
      if (u < 0.45) {
        t.min_weight = rng.Uniform();
      } else if (u < 0.9) {
        t.max_weight = rng.Uniform();
      } else {
        t.min_weight = rng.Uniform();
        t.max_weight = rng.Uniform();
      }
      total += t.min_weight + t.max_weight;
      pairs.push_back(t);
    }
  }
  for (auto& x : w) x /= total;
  for (auto& t : pairs) {
    t.min_weight /= total;
    t.max_weight /= total;
  }
  return mcda::ChoquetParams(children, w, pairs);
}

namespace {

mcda::UtilityFunction RandomUtility(Rng& rng, const std::string& metric) {
  const bool higher = rng.Bernoulli(0.5);
  const std::size_t count = 2 + rng.Below(4);
  const std::size_t good = 1 + rng.Below(count - 1);
  std::vector<double> values(count);
  double v = rng.Uniform(-50.0, 50.0);
  for (auto& x : values) x = v += rng.Uniform(0.5, 20.0);
  if (!higher) std::reverse(values.begin(), values.end());
  std::vector<double> utilities(count, 0.0);
  // Cumulative random increments, rescaled so the Good breakpoint sits at 1.
  for (std::size_t i = 1; i < count; ++i) utilities[i] = utilities[i - 1] + rng.Uniform(0.1, 1.0);
  const double scale = utilities[good];
  std::vector<mcda::Breakpoint> bps;
  for (std::size_t i = 0; i < count; ++i) {
    bps.push_back({values[i], i == good ? 1.0 : utilities[i] / scale});
  }
  return mcda::UtilityFunction(metric, higher ? mcda::Direction::kHigherIsBetter : mcda::Direction::kLowerIsBetter,
                               bps, 0, good);
}

}  // namespace

mcda::CriteriaTree RandomTree(Rng& rng, int max_depth, std::size_t max_arity) {
  std::vector<mcda::Node> nodes;
  int next = 0;
  auto build = [&](auto&& self, int depth) -> std::string {
    const std::string id = "n" + std::to_string(next++);
    const bool leaf = depth == max_depth || (depth > 0 && rng.Bernoulli(0.3));
    if (leaf) {
      nodes.push_back({id, "node " + id, mcda::Criterion{RandomUtility(rng, "metric_" + id)}});
      return id;
    }
    const std::size_t arity = 2 + rng.Below(max_arity - 1);
    std::vector<std::string> kids;
    for (std::size_t k = 0; k < arity; ++k) kids.push_back(self(self, depth + 1));
    auto shaped = RandomParams(rng, arity, 0.5);
    std::vector<mcda::PairTerm> pairs = shaped.pairs();
    nodes.push_back({id, "node " + id, mcda::ChoquetParams(kids, shaped.singleton_weights(), pairs)});
    return id;
  };
  const std::string root = build(build, 0);
  return mcda::CriteriaTree(std::move(nodes), root, "random");
}

mcda::MeasurementProfile RandomProfile(Rng& rng, const mcda::CriteriaTree& tree, const std::string& id) {
  mcda::MeasurementProfile p;
  p.alternative_id = id;
  for (const auto& cid : tree.criteria()) {
    const auto& u = tree.node(cid).criterion().utility;
    const double lo = std::min(u.breakpoints().front().value, u.breakpoints().back().value);
    const double hi = std::max(u.breakpoints().front().value, u.breakpoints().back().value);
    const double span = hi - lo;
    p.values[u.metric_id()] = rng.Uniform(lo - 0.1 * span, hi + 0.1 * span);
  }
  return p;
}

double ChoquetBySum(const mcda::ChoquetParams& p, const std::vector<double>& x) {
  double f = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) f += p.singleton_weights()[i] * x[i];
  for (const auto& t : p.pairs()) {
    f += t.min_weight * std::min(x[t.first], x[t.second]);
    f += t.max_weight * std::max(x[t.first], x[t.second]);
  }
  return f;
}

std::vector<double> ShapleyByPermutations(const mcda::ChoquetParams& p, const std::vector<double>& x,
                                          const std::vector<double>& r) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> phi(n, 0.0);
  double count = 0.0;
  do {
    std::vector<double> z = r;
    double prev = ChoquetBySum(p, z);
    for (std::size_t i : order) {
      z[i] = x[i];
      const double now = ChoquetBySum(p, z);
      phi[i] += now - prev;
      prev = now;
    }
    count += 1.0;
  } while (std::next_permutation(order.begin(), order.end()));
  for (auto& v : phi) v /= count;
  return phi;
}

double BruteForceOptimum(const bench::PseudoBooleanProblem& p, std::vector<bench::Assignment>* argopt) {
  const std::size_t n = p.num_vars();
  if (n > 26) throw std::invalid_argument("too many variables for brute force");
  const bool maximize = p.sense() == bench::Sense::kMaximize;
  std::vector<double> values(std::size_t{1} << n);
  double best = maximize ? -1e300 : 1e300;
  bench::Assignment a(n);
  for (std::uint64_t code = 0; code < values.size(); ++code) {
    for (std::size_t i = 0; i < n; ++i) a[i] = (code >> i) & 1u;
    // Direct term sum, independent of PseudoBooleanProblem::Evaluate.
    double v = 0.0;
    for (const auto& [vars, c] : p.terms()) {
      bool on = true;
      for (auto var : vars) on = on && a[var];
      if (on) v += c;
    }
    values[code] = v;
    best = maximize ? std::max(best, v) : std::min(best, v);
  }
  if (argopt) {
    argopt->clear();
    const double tol = 1e-9 * std::max(1.0, std::abs(best));
    for (std::uint64_t code = 0; code < values.size(); ++code) {
      if (std::abs(values[code] - best) <= tol) {
        for (std::size_t i = 0; i < n; ++i) a[i] = (code >> i) & 1u;
        argopt->push_back(a);
      }
    }
  }
  return best;
}

std::size_t KuhnMatching(const bench::Graph& g) {
  const auto& side = *g.side;
  std::vector<std::vector<std::uint32_t>> adj(g.num_vertices);
  for (auto [u, v] : g.edges) {
    if (side[u] == 0) {
      adj[u].push_back(v);
    } else {
      adj[v].push_back(u);
    }
  }
  std::vector<int> match(g.num_vertices, -1);
  std::size_t size = 0;
  for (std::uint32_t u = 0; u < g.num_vertices; ++u) {
    if (side[u] != 0) continue;
    std::vector<char> seen(g.num_vertices, 0);
    auto augment = [&](auto&& self, std::uint32_t x) -> bool {
      for (auto y : adj[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        if (match[y] < 0 || self(self, static_cast<std::uint32_t>(match[y]))) {
          match[y] = static_cast<int>(x);
          return true;
        }
      }
      return false;
    };
    if (augment(augment, u)) ++size;
  }
  return size;
}

std::size_t BruteForceMatching(const bench::Graph& g) {
  const std::size_t m = g.edges.size();
  if (m > 22) throw std::invalid_argument("too many edges for brute force");
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::uint64_t used = 0;
    bool ok = true;
    for (std::size_t e = 0; e < m && ok; ++e) {
      if (!((mask >> e) & 1u)) continue;
      const auto [u, v] = g.edges[e];
      const std::uint64_t bits = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
      ok = (used & bits) == 0;
      used |= bits;
    }
    if (ok) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

std::size_t BruteForceMaxCut(const bench::Graph& g) {
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.num_vertices); ++s) {
    std::size_t cut = 0;
    for (auto [u, v] : g.edges) cut += ((s >> u) & 1u) != ((s >> v) & 1u);
    best = std::max(best, cut);
  }
  return best;
}

std::optional<GeneratedSession> RandomConsistentSession(Rng& rng, std::size_t n) {
  std::vector<std::string> kids;
  for (std::size_t i = 0; i < n; ++i) kids.push_back("k" + std::to_string(i));
  std::vector<double> w(n);
  for (auto& x : w) x = static_cast<double>(rng.Below(3));
  std::vector<mcda::PairTerm> pairs;
  std::vector<elicitation::Pattern> ranked{0, static_cast<elicitation::Pattern>((1u << n) - 1)};
  for (std::size_t i = 0; i < n; ++i) ranked.push_back(elicitation::Pattern{1} << i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool in_model = n <= elicitation::kFullPairElicitationLimit || rng.Bernoulli(0.4);
      if (!in_model) continue;
      // With two children the pair is the all-Good alternative, already ranked.
      if (n > 2) ranked.push_back((elicitation::Pattern{1} << i) | (elicitation::Pattern{1} << j));
      mcda::PairTerm t{i, j, 0.0, 0.0};
      if (rng.Bernoulli(0.3)) t.min_weight = 1.0;
      if (rng.Bernoulli(0.3)) t.max_weight = 1.0;
      if (t.min_weight + t.max_weight > 0) pairs.push_back(t);
    }
  }
  double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (const auto& t : pairs) total += t.min_weight + t.max_weight;
  if (total == 0.0) return std::nullopt;
  // Unnormalized capacity: scale weights into [0,1] only for construction.
  std::vector<double> wn = w;
  for (auto& x : wn) x /= total;
  auto pn = pairs;
  for (auto& t : pn) {
    t.min_weight /= total;
    t.max_weight /= total;
  }
  const mcda::ChoquetParams truth(kids, wn, pn);
  std::vector<std::pair<double, elicitation::Pattern>> values;
  for (elicitation::Pattern p : ranked) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (p >> i) & 1u;
    values.push_back({std::round(ChoquetBySum(truth, x) * total), p});
  }
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return std::popcount(a.second) < std::popcount(b.second);
  });
  GeneratedSession g;
  g.session.node_id = "node";
  g.session.children = kids;
  for (std::size_t k = 0; k < values.size(); ++k) {
    std::vector<std::string> good;
    for (std::size_t i = 0; i < n; ++i) {
      if ((values[k].second >> i) & 1u) good.push_back(kids[i]);
    }
    g.session.ranking.push_back(good);
    g.expected.push_back({values[k].second, values[k].first / total});
    if (k > 0) {
      const double gap = values[k].first - values[k - 1].first;
      if (gap > 6) return std::nullopt;
      g.session.gaps.push_back(elicitation::IntensityFromValue(static_cast<int>(gap)));
    }
  }
  // all-Bad first and all-Good last are required; a zero-valued singleton
  // tied with all-Bad is ranked after it by the sort above.
  if (values.front().second != 0 || values.back().second != ((1u << n) - 1)) return std::nullopt;
  return g;
}


}  // namespace benchagg::testing
