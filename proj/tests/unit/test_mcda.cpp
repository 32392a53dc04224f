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

#include <cmath>

#include "common/error.hpp"
#include "common/json_util.hpp"
#include "doctest.h"
#include "mcda/choquet.hpp"
#include "mcda/model_io.hpp"
#include "mcda/tree.hpp"
#include "mcda/utility.hpp"
#include "test_support.hpp"

using namespace benchagg;
using namespace benchagg::mcda;
using doctest::Approx;

namespace {

UtilityFunction MaxCutUtility() {
  return UtilityFunction("maxcut.qscore", Direction::kHigherIsBetter,
                         {{0, 0.0}, {17, 2.0 / 15}, {70, 0.4}, {140, 2.0 / 3}, {1000, 1.0}}, 0, 4);
}

CriteriaTree TwoLeafTree(const ChoquetParams& p) {
  std::vector<Node> nodes;
  nodes.push_back({"root", "root", p});
  nodes.push_back({"maxcut", "MaxCut", Criterion{MaxCutUtility()}});
  nodes.push_back({"maxclique", "MaxClique",
                   Criterion{UtilityFunction("maxclique.qscore", Direction::kHigherIsBetter,
                                             {{0, 0.0}, {12, 2.0 / 15}, {70, 0.4}, {110, 2.0 / 3}, {1000, 1.0}},
                                             0, 4)}});
  return CriteriaTree(std::move(nodes), "root", "test");
}

}  // namespace

TEST_CASE("apply_utility on the MaxCut function") {
  const auto f = MaxCutUtility();
  CHECK(apply_utility(f, 70) == Approx(0.4).epsilon(1e-12));
  CHECK(apply_utility(f, 0) == 0.0);
  // (70, 0.4)-(140, 2/3) interpolated by hand: 0.4 + 35/70 * (2/3 - 0.4)
  CHECK(apply_utility(f, 105) == Approx(0.4 + 0.5 * (2.0 / 3 - 0.4)).epsilon(1e-12));
  CHECK(apply_utility(f, 105) == Approx(0.5333).epsilon(1e-4));
  CHECK(apply_utility(f, -5) == 0.0);
  // Past the last breakpoint: slope of the (140, 2/3)-(1000, 1) segment.
  CHECK(apply_utility(f, 5000) == Approx(1.0 + (1.0 / 3) * 4000.0 / 860.0).epsilon(1e-12));
  CHECK_THROWS_AS(apply_utility(f, std::nan("")), Error);
}

TEST_CASE("utility beyond Good keeps increasing along the last segment") {
  const UtilityFunction f("m", Direction::kHigherIsBetter, {{0, 0}, {10, 1}, {20, 1.5}}, 0, 1);
  CHECK(f(15) == Approx(1.25));
  CHECK(f(30) == Approx(2.0));
}

TEST_CASE("lower-is-better utility mirrors the axis") {
  const UtilityFunction f("latency", Direction::kLowerIsBetter, {{100, 0}, {10, 0.5}, {1, 1}}, 0, 2);
  CHECK(f(1) == 1.0);
  CHECK(f(100) == 0.0);
  CHECK(f(55) == Approx(0.25));
  CHECK(f(1000) == 0.0);
  CHECK(f.Prefers(1, 10));
  CHECK_FALSE(f.Prefers(10, 1));
}

TEST_CASE("utility function invariants are enforced") {
  using B = std::vector<Breakpoint>;
  CHECK_THROWS_AS(UtilityFunction("m", Direction::kHigherIsBetter, B{{0, 0}}, 0, 0), Error);
  CHECK_THROWS_AS(UtilityFunction("m", Direction::kHigherIsBetter, B{{0, 0}, {1, 0.5}}, 0, 1), Error);
  CHECK_THROWS_AS(UtilityFunction("m", Direction::kHigherIsBetter, B{{0, 0.1}, {1, 1}}, 0, 1), Error);
  CHECK_THROWS_AS(UtilityFunction("m", Direction::kHigherIsBetter, B{{1, 0}, {0, 1}}, 0, 1), Error);
  CHECK_THROWS_AS(UtilityFunction("m", Direction::kHigherIsBetter, B{{0, 0}, {1, 1}, {2, 0.9}}, 0, 1), Error);
  CHECK_THROWS_AS(UtilityFunction("", Direction::kHigherIsBetter, B{{0, 0}, {1, 1}}, 0, 1), Error);
}

TEST_CASE("choquet_2add examples") {
  const auto ws = ChoquetParams::WeightedSum({"a", "b"}, {0.5, 0.5});
  CHECK(choquet_2add(ws, {{"a", 0.4}, {"b", 0.4}}) == Approx(0.4));

  const ChoquetParams pure_min({"a", "b"}, {0, 0}, {{0, 1, 1.0, 0.0}});
  CHECK(choquet_2add(pure_min, {{"a", 0.3}, {"b", 0.9}}) == Approx(0.3));

  const ChoquetParams red({"a", "b"}, {0.3, 0.2}, {{0, 1, 0.0, 0.5}});
  // 0.3*0.4 + 0.2*0.667 + 0.5*0.667
  CHECK(choquet_2add(red, {{"a", 0.4}, {"b", 0.667}}) == Approx(0.12 + 0.1334 + 0.3335).epsilon(1e-12));

  CHECK_THROWS_AS(choquet_2add(red, {{"a", 0.4}}), Error);
  CHECK_THROWS_AS(choquet_2add(red, {{"a", 0.4}, {"b", 0.1}, {"c", 0.2}}), Error);
}

TEST_CASE("ChoquetParams validation") {
  CHECK_THROWS_AS(ChoquetParams({"a", "b"}, {0.5, 0.6}, {}), Error);           // sum 1.1
  CHECK_THROWS_AS(ChoquetParams({"a", "b"}, {1.2, -0.2}, {}), Error);          // negative
  CHECK_THROWS_AS(ChoquetParams({"a", "a"}, {0.5, 0.5}, {}), Error);           // duplicate child
  // Reversed pair indices are stored in order.
  CHECK(ChoquetParams({"a", "b"}, {0.5, 0.0}, {{1, 0, 0.5, 0}}).pairs()[0].first == 0);
  CHECK_THROWS_AS(ChoquetParams({"a", "b"}, {0.5, 0.0}, {{0, 1, 0.25, 0}, {0, 1, 0.25, 0}}), Error);
  // Within the 1e-9 tolerance is accepted as is.
  CHECK_NOTHROW(ChoquetParams({"a", "b"}, {0.5, 0.5 + 5e-10}, {}));
}

TEST_CASE("choquet property: normalization, monotonicity, agreement with the defining sum") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.Below(5);
    const auto p = testing::RandomParams(rng, n, 0.6);
    std::vector<double> zeros(n, 0.0), ones(n, 1.0);
    CHECK(p.Evaluate(zeros) == Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(p.Evaluate(ones) - 1.0) <= 1e-9);
    for (int k = 0; k < 20; ++k) {
      std::vector<double> x(n), y(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = rng.Uniform();
        y[i] = x[i] + (rng.Bernoulli(0.5) ? rng.Uniform() : 0.0);
      }
      CHECK(p.Evaluate(x) <= p.Evaluate(y) + 1e-12);
      CHECK(p.Evaluate(x) == Approx(testing::ChoquetBySum(p, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("importance and interaction indices") {
  const auto ws = ChoquetParams::WeightedSum({"a", "b", "c"}, {0.2, 0.3, 0.5});
  const auto idx = importance_and_interaction(ws);
  CHECK(idx.importance[0] == Approx(0.2));
  CHECK(idx.importance[2] == Approx(0.5));
  for (const auto& in : idx.interaction) CHECK(in.value == 0.0);

  const ChoquetParams red({"a", "b"}, {0.3, 0.2}, {{0, 1, 0.0, 0.5}});
  const auto r = importance_and_interaction(red);
  CHECK(r.importance[0] == Approx(0.55));
  CHECK(r.importance[1] == Approx(0.45));
  REQUIRE(r.interaction.size() == 1);
  CHECK(r.interaction[0].value == Approx(-0.5));

  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto p = testing::RandomParams(rng, 2 + rng.Below(5));
    const auto i = importance_and_interaction(p);
    double s = 0.0;
    for (double v : i.importance) s += v;
    CHECK(s == Approx(1.0).epsilon(1e-12));
    // Importance is the Shapley value of the capacity: compare against the
    // permutation oracle with x = 1, r = 0.
    const auto phi = testing::ShapleyByPermutations(p, std::vector<double>(p.size(), 1.0),
                                                    std::vector<double>(p.size(), 0.0));
    for (std::size_t k = 0; k < p.size(); ++k) CHECK(i.importance[k] == Approx(phi[k]).epsilon(1e-12));
  }
}

TEST_CASE("evaluate_tree on the two-criteria model") {
  const ChoquetParams p({"maxcut", "maxclique"}, {1.0 / 3, 1.0 / 6}, {{0, 1, 0.0, 0.5}});
  const auto tree = TwoLeafTree(p);
  MeasurementProfile bad{"bad", {{"maxcut.qscore", 0}, {"maxclique.qscore", 0}}, {}};
  CHECK(evaluate_tree(tree, bad).root_score == 0.0);
  MeasurementProfile good{"good", {{"maxcut.qscore", 1000}, {"maxclique.qscore", 1000}}, {}};
  CHECK(evaluate_tree(tree, good).root_score == Approx(1.0).epsilon(1e-12));
  MeasurementProfile adv{"adv", {{"maxcut.qscore", 140}, {"maxclique.qscore", 110}}, {}};
  const auto r = evaluate_tree(tree, adv);
  CHECK(r.node_scores.at("maxcut") == Approx(2.0 / 3));
  CHECK(r.node_scores.at("maxclique") == Approx(2.0 / 3));
  CHECK(r.root_score == Approx(choquet_2add(p, {{"maxcut", 2.0 / 3}, {"maxclique", 2.0 / 3}})));

  MeasurementProfile missing{"x", {{"maxcut.qscore", 10}}, {}};
  CHECK_THROWS_AS(evaluate_tree(tree, missing), Error);
}

TEST_CASE("evaluate_interval") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto tree = testing::RandomTree(rng, 2, 3);
    auto point = testing::RandomProfile(rng, tree, "a");
    // Degenerate intervals reproduce the point evaluation.
    auto degenerate = point;
    for (const auto& [m, v] : point.values) degenerate.intervals[m] = {v, v};
    const auto pe = evaluate_tree(tree, point);
    const auto ie = evaluate_interval(tree, degenerate);
    CHECK(ie.root_score.lo == pe.root_score);
    CHECK(ie.root_score.hi == pe.root_score);

    // Random box; Monte-Carlo samples inside it stay within the root bounds.
    auto boxed = point;
    for (const auto& [m, v] : point.values) {
      const double w = rng.Uniform(0.0, 10.0);
      boxed.intervals[m] = {v - w, v + rng.Uniform(0.0, 10.0)};
    }
    const auto bounds = evaluate_interval(tree, boxed);
    CHECK(bounds.root_score.lo <= bounds.root_score.hi);
    for (int k = 0; k < 100; ++k) {
      MeasurementProfile s{"s", {}, {}};
      for (const auto& [m, in] : boxed.intervals) s.values[m] = rng.Uniform(in.lo, in.hi);
      const double score = evaluate_tree(tree, s).root_score;
      CHECK(score >= bounds.root_score.lo - 1e-12);
      CHECK(score <= bounds.root_score.hi + 1e-12);
    }

    // Widening one leaf never narrows the root interval.
    auto wider = boxed;
    auto& first = wider.intervals.begin()->second;
    first.lo -= 5.0;
    first.hi += 5.0;
    const auto wb = evaluate_interval(tree, wider);
    CHECK(wb.root_score.lo <= bounds.root_score.lo + 1e-12);
    CHECK(wb.root_score.hi >= bounds.root_score.hi - 1e-12);
  }
}

TEST_CASE("tree shape validation") {
  const auto leaf = [](const std::string& id) {
    return Node{id, id, Criterion{UtilityFunction(id, Direction::kHigherIsBetter, {{0, 0}, {1, 1}}, 0, 1)}};
  };
  const auto agg = [](const std::string& id, std::vector<std::string> kids) {
    const double w = 1.0 / static_cast<double>(kids.size());
    std::vector<double> ws(kids.size(), w);
    return Node{id, id, ChoquetParams::WeightedSum(std::move(kids), ws)};
  };
  CHECK_THROWS_AS(CriteriaTree({leaf("a"), leaf("a")}, "a", ""), Error);
  CHECK_THROWS_AS(CriteriaTree({agg("r", {"a", "b"}), leaf("a")}, "r", ""), Error);  // unknown child
  CHECK_THROWS_AS(CriteriaTree({agg("r", {"a", "b"}), agg("s", {"a", "b"}), leaf("a"), leaf("b")}, "r", ""),
                  Error);  // two parents / unreachable
  CHECK_THROWS_AS(CriteriaTree({agg("r", {"a", "s"}), agg("s", {"r", "b"}), leaf("a"), leaf("b")}, "r", ""),
                  Error);  // cycle through the root
  CHECK_THROWS_AS(CriteriaTree({agg("r", {"a", "b"}), leaf("a"), leaf("b"), leaf("c")}, "r", ""), Error);
  CHECK_NOTHROW(CriteriaTree({leaf("a")}, "a", ""));
}

TEST_CASE("model JSON round trip") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto tree = testing::RandomTree(rng, 3, 4);
    const std::string text = SaveModel(tree);
    const auto back = LoadModel(text);
    CHECK(back == tree);
    CHECK(SaveModel(back) == text);
  }
  const auto fixture = LoadModel(testing::ReadFixture("qpu_model.json"));
  CHECK(fixture.root() == "qscore");
  CHECK(fixture.metrics() == std::vector<std::string>{"maxcut.qscore", "maxclique.qscore"});
}

TEST_CASE("model JSON errors name the offending field") {
  auto expect = [](const std::string& text, const std::string& fragment) {
    try {
      LoadModel(text);
      FAIL("accepted: " << text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kValidation);
      CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
    }
  };
  expect("{", "malformed JSON");
  expect(R"({"schema_version": 2, "nodes": [], "root": "a"})", "schema_version");
  expect(R"({"schema_version": 1, "root": "a"})", "nodes");
  expect(R"({"schema_version": 1, "root": "a", "nodes": [{"id": "a", "kind": "leaf"}]})", "kind");
  expect(R"({"schema_version": 1, "root": "a", "nodes": [{"id": "a", "kind": "criterion", "metric": "m",
      "direction": "higher_is_better", "breakpoints": [{"value": 0, "utility": 0}], "bad_index": 0,
      "good_index": 0}]})",
         "breakpoints");
}

TEST_CASE("profiles document") {
  const Json doc = Json::parse(R"({"alternatives": [
      {"alternative": "a", "values": {"m": 1}, "intervals": {"m": [0, 2]}},
      {"alternative": "b", "values": {"m": 3}}]})");
  const auto ps = ProfilesFromJson(doc);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].intervals.at("m").hi == 2.0);
  CHECK_THROWS_AS(ProfilesFromJson(Json::parse(R"([{"alternative": "a", "intervals": {"m": [2, 0]}}])")), Error);
}
