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

#include <chrono>
#include <cmath>

#include "bench/bench_io.hpp"
#include "bench/external_solver.hpp"
#include "bench/generators.hpp"
#include "bench/qscore.hpp"
#include "bench/solvers.hpp"
#include "common/error.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace benchagg;
using namespace benchagg::bench;
using doctest::Approx;

namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kInternal;
}

SolverSpec Fake(const std::string& mode, double timeout = 10.0) {
  SolverSpec s;
  s.method = Method::kExternal;
  s.adapter.argv = {testing::FakeAdapterPath(), mode};
  s.adapter.timeout_seconds = timeout;
  return s;
}

}  // namespace

TEST_CASE("solver names") {
  CHECK(ParseMethod("sa") == Method::kSimulatedAnnealing);
  CHECK(ParseMethod("simulated_annealing") == Method::kSimulatedAnnealing);
  CHECK(std::string(MethodName(Method::kExhaustive)) == "exhaustive");
  CHECK_THROWS_AS(ParseMethod("quantum"), Error);
}

TEST_CASE("exhaustive solver") {
  const auto k3 = MaxCutProblem(Graph{3, {{0, 1}, {0, 2}, {1, 2}}, std::nullopt});
  CHECK(SolveExhaustive(k3).objective == 2.0);
  Rng rng(2);
  for (int t = 0; t < 30; ++t) {
    const auto p = RandomHobo(3 + rng.Below(8), 3, rng.NextU64());
    const auto r = SolveExhaustive(p);
    CHECK(r.objective == Approx(testing::BruteForceOptimum(p)).epsilon(1e-12));
    CHECK(r.objective == Approx(p.Evaluate(r.assignment)).epsilon(1e-12));
  }
  PseudoBooleanProblem big(25, Sense::kMinimize);
  big.AddTerm({0}, 1.0);
  CHECK(CodeOf([&] { SolveExhaustive(big); }) == ErrorCode::kUnsupported);
  PseudoBooleanProblem empty(0, Sense::kMinimize);
  empty.AddTerm({}, 3.0);
  CHECK(SolveExhaustive(empty).objective == 3.0);
}

TEST_CASE("random solver averages half the edges on MaxCut") {
  const auto g = RandomGraph(12, 0.5, 4);
  const auto p = MaxCutProblem(g);
  double total = 0.0;
  const int draws = 4000;
  for (int s = 0; s < draws; ++s) total += SolveRandom(p, static_cast<std::uint64_t>(s)).objective;
  CHECK(total / draws == Approx(g.edges.size() / 2.0).epsilon(0.03));
}

TEST_CASE("simulated annealing finds exhaustive optima") {
  Rng rng(8);
  int hits = 0;
  const int trials = 20;
  for (int t = 0; t < trials; ++t) {
    const auto g = RandomGraph(8 + rng.Below(7), 0.5, rng.NextU64());
    const auto p = MaxCutProblem(g);
    const auto sa = SolveAnnealing(p, 500, 4, rng.NextU64());
    CHECK(sa.objective == p.Evaluate(sa.assignment));
    hits += sa.objective == SolveExhaustive(p).objective;
  }
  CHECK(hits >= trials - 1);

  // Higher-order terms are annealed directly.
  for (int t = 0; t < 10; ++t) {
    const auto p = RandomHobo(10, 4, rng.NextU64());
    const auto sa = SolveAnnealing(p, 500, 4, 1);
    CHECK(sa.objective == Approx(p.Evaluate(sa.assignment)).epsilon(1e-12));
    CHECK(sa.objective >= SolveExhaustive(p).objective - 1e-12);
  }
  // Same seed, same answer.
  const auto p = MaxCutProblem(RandomGraph(20, 0.5, 1));
  CHECK(SolveAnnealing(p, 200, 2, 5).assignment == SolveAnnealing(p, 200, 2, 5).assignment);
  CHECK_THROWS_AS(SolveAnnealing(p, 0, 1, 0), Error);
}

TEST_CASE("external adapter protocol") {
  const auto p = RandomHobo(6, 3, 3);
  double all_ones = 0.0;
  for (const auto& [vars, c] : p.terms()) all_ones += c;

  const auto ok = solve(p, Fake("ok"));
  CHECK(ok.assignment == Assignment(6, 1));
  CHECK(ok.objective == Approx(all_ones));
  CHECK(ok.wall_clock_seconds == 0.25);
  CHECK_FALSE(ok.energy_joules);
  CHECK(ok.solver["adapter"]["name"] == "fake");

  CHECK(*solve(p, Fake("energy")).energy_joules == 12.5);
  CHECK(solve(p, Fake("array")).assignment == Assignment(6, 1));

  for (const char* mode : {"wrong_objective", "short", "negative_time", "garbage", "fail"}) {
    CAPTURE(mode);
    CHECK(CodeOf([&] { solve(p, Fake(mode)); }) == ErrorCode::kProtocol);
  }
  SolverSpec missing = Fake("ok");
  missing.adapter.argv = {"/nonexistent/adapter"};
  CHECK(CodeOf([&] { solve(p, missing); }) == ErrorCode::kProtocol);

  for (const char* mode : {"hang", "linger"}) {
    CAPTURE(mode);
    const auto start = std::chrono::steady_clock::now();
    CHECK(CodeOf([&] { solve(p, Fake(mode, 0.5)); }) == ErrorCode::kTimeout);
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(5));
  }
}

TEST_CASE("adapter reply parsing") {
  PseudoBooleanProblem p(2, Sense::kMinimize);
  p.AddTerm({0, 1}, 2.0);
  const auto r = ParseAdapterReply(p, R"({"assignment": "11", "wall_clock_seconds": 1, "objective": 2.0})");
  CHECK(r.objective == 2.0);
  CHECK_THROWS_AS(ParseAdapterReply(p, R"({"assignment": "12", "wall_clock_seconds": 1})"), Error);
  CHECK_THROWS_AS(ParseAdapterReply(p, R"({"assignment": "11"})"), Error);
  CHECK_THROWS_AS(ParseAdapterReply(p, R"({"assignment": "11", "wall_clock_seconds": 1, "energy_joules": 0})"),
                  Error);
  CHECK_THROWS_AS(ParseAdapterReply(p, R"([1, 1])"), Error);
}

TEST_CASE("beta score") {
  QScoreConfig asym;
  asym.baseline = RandomBaseline::kAsymptotic;
  CHECK(beta_score(10, 12.5, asym) == Approx(0.0));
  CHECK(beta_score(10, 12.5 + 0.178 * std::pow(10.0, 1.5), asym) == Approx(1.0));
  CHECK(beta_score(10, 15.4, asym) == Approx(2.9 / (0.178 * std::sqrt(1000.0))));
  CHECK(beta_score(10, 15.4, asym) == Approx(0.515).epsilon(1e-3));

  QScoreConfig exact;
  CHECK(beta_score(10, 90.0 / 8, exact) == Approx(0.0));
  CHECK_THROWS_AS(beta_score(4, 1.0, exact), Error);
}

TEST_CASE("q-score config validation") {
  QScoreConfig c;
  c.threshold = 1.0;
  CHECK_THROWS_AS(c.Validate(), Error);
  c = {};
  c.sizes = {10, 10};
  CHECK_THROWS_AS(c.Validate(), Error);
  c = {};
  c.instances_per_size = 0;
  CHECK_THROWS_AS(c.Validate(), Error);
}

TEST_CASE("q-score of reference solvers") {
  QScoreConfig cfg;
  cfg.sizes = {8, 10, 12};
  cfg.instances_per_size = 10;
  SolverSpec ex;
  ex.method = Method::kExhaustive;
  const auto r = qscore(ex, cfg);
  CHECK(r.qscore == 12);
  CHECK_FALSE(r.error);
  for (const auto& s : r.sizes) {
    CHECK(s.passed);
    CHECK(s.runs.size() == 10);
  }

  SolverSpec rnd;
  rnd.method = Method::kRandom;
  // Ten instances leave beta noisy (sd ~0.15); a larger sample settles it.
  QScoreConfig many = cfg;
  many.instances_per_size = 200;
  CHECK(qscore(rnd, many).qscore == 0);

  // Reproducible per seed.
  CHECK(QScoreResultToJson(qscore(ex, cfg), cfg) == QScoreResultToJson(qscore(ex, cfg), cfg));

  const auto recs = QScoreRecords(r, "exhaustive", "2026-01-01T00:00:00Z");
  CHECK(recs.size() == 30 + 3 + 1);
  CHECK(recs.back().instance == "qscore");
  CHECK(recs.back().metrics.at("qscore") == 12.0);
}

TEST_CASE("q-score keeps completed sizes when the solver fails") {
  QScoreConfig cfg;
  cfg.sizes = {6, 8};
  cfg.instances_per_size = 2;
  const auto r = qscore(Fake("fail"), cfg);
  REQUIRE(r.error);
  CHECK(r.sizes.empty());
  CHECK(r.qscore == 0);
  const auto recs = QScoreRecords(r, "fake", "2026-01-01T00:00:00Z");
  for (const auto& rec : recs) CHECK(rec.instance != "qscore");
}
