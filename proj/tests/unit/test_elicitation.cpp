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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "common/error.hpp"
#include "doctest.h"
#include "elicitation/capacity_elicitation.hpp"
#include "elicitation/intensity.hpp"
#include "elicitation/session_io.hpp"
#include "elicitation/simplex.hpp"
#include "elicitation/utility_elicitation.hpp"
#include "elicitation/value_scale.hpp"
#include "mcda/choquet.hpp"
#include "test_support.hpp"

using namespace benchagg;
using namespace benchagg::elicitation;
using doctest::Approx;

namespace {

using I = Intensity;

// Value scale oracle: cumulative gap sums over the total.
std::vector<double> CumulativeOracle(const std::vector<int>& gaps) {
  std::vector<double> v{0.0};
  for (int g : gaps) v.push_back(v.back() + g);
  for (auto& x : v) x /= v.back();
  return v;
}

bool HasCode(const std::vector<Violation>& v, const std::string& code) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.code == code; });
}

}  // namespace

TEST_CASE("intensity labels") {
  CHECK(IntensityValue(ParseIntensity("very_weak")) == 1);
  CHECK(IntensityValue(ParseIntensity("extreme")) == 6);
  CHECK(ParseIntensity("VeryStrong") == I::kVeryStrong);
  for (int v = 0; v <= 6; ++v) CHECK(ParseIntensity(IntensityName(IntensityFromValue(v))) == IntensityFromValue(v));
  CHECK_THROWS_AS(IntensityFromValue(7), Error);
  CHECK_THROWS_AS(ParseIntensity("huge"), Error);
}

TEST_CASE("derive_value_scale") {
  const std::vector<I> maxcut_gaps{I::kWeak, I::kStrong, I::kStrong, I::kVeryStrong};
  const auto v = derive_value_scale(std::span<const I>(maxcut_gaps), 0, 4);
  const auto oracle = CumulativeOracle({2, 4, 4, 5});
  REQUIRE(v.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(v[i] == Approx(oracle[i]).epsilon(1e-12));
  // Published table, three decimals.
  const double shown[] = {0.0, 0.133, 0.4, 0.667, 1.0};
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(v[i] - shown[i]) < 1e-3);

  const std::vector<I> one{I::kModerate};
  CHECK(derive_value_scale(std::span<const I>(one), 0, 1) == std::vector<double>{0.0, 1.0});
  const std::vector<I> eq{I::kModerate, I::kModerate};
  const auto sym = derive_value_scale(std::span<const I>(eq), 0, 2);
  CHECK(sym[1] == Approx(0.5));

  // Anchor one below the last element: values past it exceed 1.
  const std::vector<double> raw{1, 1, 2};
  const auto past = derive_value_scale(std::span<const double>(raw), 0, 2);
  CHECK(past[2] == Approx(1.0));
  CHECK(past[3] == Approx(2.0));
}

TEST_CASE("derive_utility_function on the worked MaxCut session") {
  UtilitySession s{"maxcut.qscore", {0, 17, 70, 140, 1000}, {I::kWeak, I::kStrong, I::kStrong, I::kVeryStrong}, 0,
                   1000};
  CHECK(check_consistency(s).empty());
  const auto f = derive_utility_function(s);
  CHECK(f.direction() == mcda::Direction::kHigherIsBetter);
  const double expected[] = {0.0, 0.1333, 0.4, 0.6667, 1.0};
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(f.breakpoints()[i].utility - expected[i]) < 1e-3);
  CHECK(f(70) == Approx(0.4));

  UtilitySession clique{"maxclique.qscore", {0, 12, 70, 110, 1000},
                        {I::kWeak, I::kStrong, I::kStrong, I::kVeryStrong}, 0, 1000};
  const auto g = derive_utility_function(clique);
  CHECK(g(110) == Approx(2.0 / 3));
  CHECK(g(12) == Approx(2.0 / 15));
}

TEST_CASE("lower-is-better utility session") {
  UtilitySession s{"latency_ms", {100, 10, 1}, {I::kModerate, I::kStrong}, 100, 1};
  CHECK(check_consistency(s).empty());
  const auto f = derive_utility_function(s);
  CHECK(f.direction() == mcda::Direction::kLowerIsBetter);
  CHECK(f(1) == 1.0);
  CHECK(f(100) == 0.0);
  CHECK(f(10) == Approx(3.0 / 7));
}

TEST_CASE("Good below the last element") {
  UtilitySession s{"m", {0, 10, 20}, {I::kModerate, I::kWeak}, 0, 10};
  const auto f = derive_utility_function(s);
  CHECK(f.good_index() == 1);
  CHECK(f(20) == Approx(5.0 / 3));
}

TEST_CASE("utility session consistency feedback") {
  UtilitySession s{"m", {0, 10, 5}, {I::kWeak}, 0, 30};
  const auto v = check_consistency(s);
  CHECK(HasCode(v, "missing_gap"));
  CHECK(HasCode(v, "good_missing"));
  CHECK(HasCode(v, "non_monotone"));
  CHECK_THROWS_AS(derive_utility_function(s), ConsistencyError);

  UtilitySession tie{"m", {0, 10, 20}, {I::kTie, I::kWeak}, 0, 20};
  CHECK(HasCode(check_consistency(tie), "tie_between_distinct_values"));
  UtilitySession bad{"m", {0, 10, 20}, {I::kWeak, I::kWeak}, 10, 20};
  CHECK(HasCode(check_consistency(bad), "bad_not_worst"));
  UtilitySession dup{"m", {0, 10, 10}, {I::kWeak, I::kWeak}, 0, 10};
  CHECK(HasCode(check_consistency(dup), "duplicate_element"));
}

TEST_CASE("simplex on small programs") {
  // max x + y st x + 2y <= 4, 3x + y <= 6  ->  (8/5, 6/5), 14/5.
  LinearProgram lp{{{1, 2, 1, 0}, {3, 1, 0, 1}}, {4, 6}, {-1, -1, 0, 0}};
  auto s = SolveLinearProgram(lp);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.x[0] == Approx(1.6));
  CHECK(s.x[1] == Approx(1.2));
  CHECK(s.objective == Approx(-2.8));

  LinearProgram infeasible{{{1, 1}}, {-1}, {1, 1}};
  CHECK(SolveLinearProgram(infeasible).status == LpStatus::kInfeasible);
  LinearProgram unbounded{{{1, -1}}, {1}, {0, -1}};
  CHECK(SolveLinearProgram(unbounded).status == LpStatus::kUnbounded);

  // Degenerate: redundant equality rows.
  LinearProgram degenerate{{{1, 1, 0}, {2, 2, 0}, {0, 1, 1}}, {1, 2, 1}, {1, 2, 0}};
  s = SolveLinearProgram(degenerate);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.objective == Approx(1.0));
}

TEST_CASE("simplex agrees with vertex enumeration on random programs") {
  // Oracle: for 2 structural + slack variables, enumerate basic solutions.
  Rng rng(19);
  for (int t = 0; t < 100; ++t) {
    const double a11 = rng.Uniform(0.1, 3), a12 = rng.Uniform(0.1, 3), a21 = rng.Uniform(0.1, 3),
                 a22 = rng.Uniform(0.1, 3), b1 = rng.Uniform(1, 5), b2 = rng.Uniform(1, 5);
    const double c1 = rng.Uniform(-2, 1), c2 = rng.Uniform(-2, 1);
    LinearProgram lp{{{a11, a12, 1, 0}, {a21, a22, 0, 1}}, {b1, b2}, {c1, c2, 0, 0}};
    const auto s = SolveLinearProgram(lp);
    REQUIRE(s.status == LpStatus::kOptimal);
    // Vertices of {x >= 0, a1.x <= b1, a2.x <= b2}.
    std::vector<std::pair<double, double>> cand{{0, 0}, {b1 / a11, 0}, {b2 / a21, 0}, {0, b1 / a12}, {0, b2 / a22}};
    const double det = a11 * a22 - a12 * a21;
    if (std::abs(det) > 1e-12) cand.push_back({(b1 * a22 - a12 * b2) / det, (a11 * b2 - a21 * b1) / det});
    double best = 1e300;
    for (auto [x, y] : cand) {
      if (x < -1e-12 || y < -1e-12 || a11 * x + a12 * y > b1 + 1e-9 || a21 * x + a22 * y > b2 + 1e-9) continue;
      best = std::min(best, c1 * x + c2 * y);
    }
    CHECK(s.objective == Approx(best).epsilon(1e-9));
  }
}

TEST_CASE("n = 2 capacity closed form") {
  const std::vector<std::string> kids{"cut", "clique"};
  // B1B2 <(Strong) B1G2 <(VeryWeak) G1B2 <(VeryWeak) G1G2 -> targets (0, 2/3, 5/6, 1).
  CapacitySession s{"q", kids, {{}, {"clique"}, {"cut"}, {"cut", "clique"}},
                    {I::kStrong, I::kVeryWeak, I::kVeryWeak}};
  CHECK(check_consistency(s).empty());
  const auto p = derive_capacity(s);
  CHECK(p.singleton_weights()[0] == Approx(1.0 / 3).epsilon(1e-12));
  CHECK(p.singleton_weights()[1] == Approx(1.0 / 6).epsilon(1e-12));
  REQUIRE(p.pairs().size() == 1);
  CHECK(p.pairs()[0].min_weight == 0.0);
  CHECK(p.pairs()[0].max_weight == Approx(0.5).epsilon(1e-12));
  const auto idx = mcda::importance_and_interaction(p);
  CHECK(idx.importance[0] > idx.importance[1]);
  CHECK(idx.interaction[0].value < 0.0);

  // Complementary branch: t1 + t2 < 1.
  const auto comp = two_child_capacity(kids, 1.0 / 3, 1.0 / 6);
  CHECK(comp.pairs()[0].max_weight == 0.0);
  CHECK(comp.pairs()[0].min_weight == Approx(0.5));
  CHECK(comp.singleton_weights()[0] == Approx(1.0 / 3));
  CHECK(mcda::importance_and_interaction(comp).interaction[0].value > 0.0);

  // Symmetric additive case.
  CapacitySession sym{"q", kids, {{}, {"cut"}, {"clique"}, {"cut", "clique"}}, {I::kModerate, I::kTie, I::kModerate}};
  const auto additive = derive_capacity(sym);
  CHECK(additive.singleton_weights()[0] == Approx(0.5));
  CHECK(additive.singleton_weights()[1] == Approx(0.5));
  for (const auto& t : additive.pairs()) {
    CHECK(t.min_weight == Approx(0.0));
    CHECK(t.max_weight == Approx(0.0));
  }

  // Closed form vs general solver over a grid of targets.
  for (double t1 = 0.0; t1 <= 1.0; t1 += 0.05) {
    for (double t2 = 0.0; t2 <= 1.0; t2 += 0.05) {
      const auto cf = two_child_capacity(kids, t1, t2);
      const auto lp = solve_capacity(kids, {{0, 1}}, {{0, 0.0}, {1, t1}, {2, t2}, {3, 1.0}});
      for (Pattern pat = 0; pat < 4; ++pat) {
        CHECK(std::abs(PatternValue(cf, pat) - PatternValue(lp, pat)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("capacity elicitation reproduces consistent targets") {
  Rng rng(23);
  int done = 0;
  for (int attempt = 0; attempt < 2000 && done < 200; ++attempt) {
    const std::size_t n = 2 + rng.Below(4);
    auto g = testing::RandomConsistentSession(rng, n);
    if (!g) continue;
    ++done;
    CAPTURE(n);
    const auto violations = check_consistency(g->session);
    CHECK_MESSAGE(violations.empty(), (violations.empty() ? "" : violations[0].message));
    const auto p = derive_capacity(g->session);
    for (const auto& [pat, target] : g->expected) {
      std::vector<double> x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = (pat >> i) & 1u;
      CHECK(std::abs(testing::ChoquetBySum(p, x) - target) <= 1e-6);
    }
  }
  CHECK(done >= 100);
}

TEST_CASE("capacity session consistency feedback") {
  const std::vector<std::string> kids{"a", "b"};
  CapacitySession bad_order{"q", kids, {{}, {"a", "b"}, {"a"}, {"b"}}, {I::kWeak, I::kWeak, I::kWeak}};
  const auto v = check_consistency(bad_order);
  CHECK(HasCode(v, "all_good_not_best"));
  CHECK_THROWS_AS(derive_capacity(bad_order), ConsistencyError);

  CapacitySession missing{"q", kids, {{}, {"a"}, {"a", "b"}}, {I::kWeak, I::kWeak}};
  CHECK(HasCode(check_consistency(missing), "missing_singleton"));

  CapacitySession unknown{"q", kids, {{}, {"a"}, {"z"}, {"a", "b"}}, {I::kWeak, I::kWeak, I::kWeak}};
  CHECK(HasCode(check_consistency(unknown), "unknown_child"));

  // Three children whose singletons are each worth 0.75: no nonnegative
  // 2-additive model can reach that, since singleton values sum to at most 2.
  CapacitySession high{"q",
                       {"a", "b", "c"},
                       {{}, {"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}, {"b", "c"}, {"a", "b", "c"}},
                       {I::kExtreme, I::kTie, I::kTie, I::kVeryWeak, I::kTie, I::kTie, I::kVeryWeak}};
  const auto inf = check_consistency(high);
  REQUIRE(HasCode(inf, "infeasible"));
  bool names_pattern = false;
  for (const auto& x : inf) names_pattern = names_pattern || x.message.find("Good on {") != std::string::npos;
  CHECK(names_pattern);
  try {
    derive_capacity(high);
    FAIL("expected a consistency error");
  } catch (const ConsistencyError& e) {
    CHECK_FALSE(e.violations().empty());
  }

  // Pairs are mandatory up to four children.
  CapacitySession no_pairs{"q", {"a", "b", "c"}, {{}, {"a"}, {"b"}, {"c"}, {"a", "b", "c"}},
                           {I::kWeak, I::kWeak, I::kWeak, I::kWeak}};
  CHECK(HasCode(check_consistency(no_pairs), "missing_pair"));
}

TEST_CASE("five children without pair patterns give an additive model") {
  std::vector<std::string> kids{"a", "b", "c", "d", "e"};
  CapacitySession s{"q", kids, {{}, {"a"}, {"b"}, {"c"}, {"d"}, {"e"}, kids},
                    {I::kVeryWeak, I::kTie, I::kTie, I::kTie, I::kTie, I::kStrong}};
  REQUIRE(check_consistency(s).empty());
  const auto p = derive_capacity(s);
  CHECK(p.pairs().empty());
  for (double w : p.singleton_weights()) CHECK(w == Approx(0.2));
}

TEST_CASE("session JSON round trip") {
  const Session u = UtilitySession{"m", {0, 1, 2}, {I::kWeak, I::kStrong}, 0, 2};
  const Session back = SessionFromJson(SessionToJson(u));
  CHECK(SessionToJson(back) == SessionToJson(u));
  const Session c = CapacitySession{"q", {"a", "b"}, {{}, {"a"}, {"b"}, {"a", "b"}}, {I::kWeak, I::kWeak, I::kWeak}};
  CHECK(SessionToJson(SessionFromJson(SessionToJson(c))) == SessionToJson(c));

  const auto maxcut_gaps = SessionFromJson(Json::parse(testing::ReadFixture("maxcut_utility_session.json")));
  CHECK(check_consistency(maxcut_gaps).empty());
  // Integer intensities are accepted too.
  const auto ints = SessionFromJson(Json::parse(
      R"({"kind": "utility_session", "metric": "m", "elements": [0, 1, 2], "gaps": [2, 4], "good": 2})"));
  CHECK(std::get<UtilitySession>(ints).gaps[1] == I::kStrong);
  CHECK_THROWS_AS(SessionFromJson(Json::parse(R"({"kind": "other"})")), Error);
  CHECK_THROWS_AS(SessionFromJson(Json::parse(
                      R"({"kind": "utility_session", "metric": "m", "elements": [0, 1], "gaps": ["big"], "good": 1})")),
                  Error);
}
