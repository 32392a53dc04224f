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

// Acceptance gate: one PASS/FAIL line per primary criterion, exit status 1
// when any of them fails. Each check collects its own failures and reports
// the first few, so a FAIL line says what broke.

#include <benchagg/benchagg.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bench/factorization.hpp"
#include "bench/generators.hpp"
#include "bench/matching.hpp"
#include "bench/qscore.hpp"
#include "bench/quadratize.hpp"
#include "bench/solvers.hpp"
#include "common/error.hpp"
#include "elicitation/capacity_elicitation.hpp"
#include "elicitation/session_io.hpp"
#include "elicitation/utility_elicitation.hpp"
#include "explanation/explanation.hpp"
#include "httplib.h"
#include "mcda/choquet.hpp"
#include "mcda/tree.hpp"
#include "qsim/evolution.hpp"
#include "qsim/hamiltonian.hpp"
#include "qsim/metrics.hpp"
#include "qsim/state.hpp"
#include "service/server.hpp"
#include "service/store.hpp"
#include "test_support.hpp"

using namespace benchagg;

namespace {

class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) failures_ += (failures_.empty() ? "" : "; ") + what;
  }
  void Note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  bool ok() const { return failed_ == 0; }
  std::string Summary() const {
    std::ostringstream s;
    if (ok()) {
      s << count_ << " checks";
    } else {
      s << failed_ << "/" << count_ << " checks failed: " << failures_;
    }
    if (!notes_.empty()) s << " (" << notes_ << ")";
    return s.str();
  }

 private:
  int count_ = 0;
  int failed_ = 0;
  std::string failures_;
  std::string notes_;
};

std::string Fmt(double v, int prec = 4) {
  std::ostringstream s;
  s.precision(prec);
  s << v;
  return s.str();
}

std::vector<double> PatternInputs(std::size_t n, elicitation::Pattern p) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = (p >> i) & 1u;
  return x;
}

// 1. The worked MaxCut utility session reproduces the published table.
void UtilityTable(Check& c) {
  const auto session = std::get<elicitation::UtilitySession>(
      elicitation::SessionFromJson(Json::parse(testing::ReadFixture("maxcut_utility_session.json"))));
  const auto u = elicitation::derive_utility_function(session);
  const double published[] = {0.0, 0.133, 0.4, 0.667, 1.0};
  const double values[] = {0, 17, 70, 140, 1000};
  c.Expect(u.breakpoints().size() == 5, "five breakpoints");
  std::string got;
  for (std::size_t i = 0; i < 5 && i < u.breakpoints().size(); ++i) {
    const auto& b = u.breakpoints()[i];
    c.Expect(b.value == values[i], "breakpoint value " + Fmt(b.value));
    c.Expect(std::abs(b.utility - published[i]) <= 1e-3, "utility " + Fmt(b.utility) + " vs " + Fmt(published[i]));
    got += (got.empty() ? "" : " ") + Fmt(b.utility);
  }
  c.Note("utilities " + got);
}

// 2. Normalization and monotonicity of random capacities.
void ChoquetProperties(Check& c) {
  Rng rng(2);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 2 + rng.Below(5);
    const auto p = testing::RandomParams(rng, n, rng.Uniform());
    const std::vector<double> zero(n, 0.0), one(n, 1.0);
    c.Expect(std::abs(p.Evaluate(zero)) <= 1e-9, "F(0) != 0");
    c.Expect(std::abs(p.Evaluate(one) - 1.0) <= 1e-9, "F(1) != 1");
    for (int t = 0; t < 100; ++t) {
      std::vector<double> x(n), y(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = rng.Uniform(0.0, 1.5);
        y[i] = x[i] + (rng.Bernoulli(0.3) ? 0.0 : rng.Uniform(0.0, 0.5));
      }
      c.Expect(p.Evaluate(x) <= p.Evaluate(y) + 1e-12, "monotonicity");
    }
  }
}

// 3. Capacity elicitation soundness.
void CapacitySoundness(Check& c) {
  Rng rng(3);
  int sessions = 0;
  for (int attempt = 0; attempt < 5000 && sessions < 300; ++attempt) {
    const std::size_t n = 2 + rng.Below(4);
    const auto g = testing::RandomConsistentSession(rng, n);
    if (!g) continue;
    ++sessions;
    try {
      const auto p = elicitation::derive_capacity(g->session);
      for (const auto& [pat, target] : g->expected) {
        c.Expect(std::abs(testing::ChoquetBySum(p, PatternInputs(n, pat)) - target) <= 1e-6,
                 "pattern target missed");
      }
    } catch (const Error& e) {
      c.Expect(false, std::string("derive_capacity threw: ") + e.what());
    }
  }
  c.Expect(sessions >= 100, "too few sessions generated");
  c.Note(std::to_string(sessions) + " sessions");

  // n = 2: closed form against the general solver over a grid of targets.
  const std::vector<std::string> kids{"a", "b"};
  int grid = 0;
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double t1 = i / 20.0, t2 = j / 20.0;
      const auto closed = elicitation::two_child_capacity(kids, t1, t2);
      const auto lp = elicitation::solve_capacity(kids, {{0, 1}}, {{0, 0.0}, {1, t1}, {2, t2}, {3, 1.0}});
      for (elicitation::Pattern pat = 0; pat < 4; ++pat) {
        c.Expect(std::abs(elicitation::PatternValue(closed, pat) - elicitation::PatternValue(lp, pat)) <= 1e-9,
                 "closed form vs solver at (" + Fmt(t1) + ", " + Fmt(t2) + ")");
      }
      const auto a = mcda::importance_and_interaction(closed);
      const auto b = mcda::importance_and_interaction(lp);
      c.Expect(std::abs(a.interaction[0].value - b.interaction[0].value) <= 1e-9, "interaction differs");
      ++grid;
    }
  }
  c.Note(std::to_string(grid) + " two-child grid points");

  // Both intermediate alternatives close to the top: redundancy.
  const auto s = std::get<elicitation::CapacitySession>(
      elicitation::SessionFromJson(Json::parse(testing::ReadFixture("qscore_capacity_session.json"))));
  const auto idx = mcda::importance_and_interaction(elicitation::derive_capacity(s));
  c.Expect(idx.interaction.size() == 1 && idx.interaction[0].value < 0.0, "interaction not negative");
  if (!idx.interaction.empty()) c.Note("interaction " + Fmt(idx.interaction[0].value));
}

// 4. Explanation efficiency over random trees.
void ExplanationEfficiency(Check& c) {
  Rng rng(4);
  int trees = 0;
  for (int k = 0; k < 300; ++k) {
    const auto tree = testing::RandomTree(rng, 1 + static_cast<int>(rng.Below(3)), 2 + rng.Below(4));
    std::vector<mcda::MeasurementProfile> set;
    for (int a = 0; a < 4; ++a) set.push_back(testing::RandomProfile(rng, tree, "alt" + std::to_string(a)));
    for (auto kind : {explanation::ReferenceKind::kWorst, explanation::ReferenceKind::kIdeal}) {
      const auto ref = explanation::reference_profile(kind, tree, set);
      mcda::MeasurementProfile ref_profile{"ref", ref.values, {}};
      const double ref_score = mcda::evaluate_tree(tree, ref_profile).root_score;
      for (const auto& alt : set) {
        const auto r = explanation::hierarchical_explanation(tree, alt, ref);
        const double diff = mcda::evaluate_tree(tree, alt).root_score - ref_score;
        c.Expect(std::abs(r.contribution.at(tree.root()) - diff) <= 1e-9, "root contribution");
        for (const auto& n : tree.nodes()) {
          if (n.is_criterion()) continue;
          double sum = 0.0;
          for (const auto& child : n.params().children()) sum += r.contribution.at(child);
          c.Expect(std::abs(sum - r.contribution.at(n.id)) <= 1e-9, "children do not sum at " + n.id);
        }
      }
    }
    ++trees;
  }
  c.Note(std::to_string(trees) + " trees, worst and ideal references");
}

// 5. Q-score harness.
void QScoreHarness(Check& c) {
  bench::QScoreConfig rand_cfg;
  rand_cfg.sizes = {10};
  rand_cfg.instances_per_size = 1000;
  bench::SolverSpec random;
  random.method = bench::Method::kRandom;
  const auto r = bench::qscore(random, rand_cfg);
  const double beta_random = r.sizes.empty() ? 1.0 : r.sizes[0].beta;
  c.Expect(std::abs(beta_random) <= 0.05, "random beta " + Fmt(beta_random));
  c.Note("random beta(10) " + Fmt(beta_random, 3));

  bench::QScoreConfig ex_cfg;
  ex_cfg.sizes = {8, 10, 12};
  ex_cfg.instances_per_size = 50;
  bench::SolverSpec exhaustive;
  exhaustive.method = bench::Method::kExhaustive;
  const auto e = bench::qscore(exhaustive, ex_cfg);
  c.Expect(e.sizes.size() == 3, "exhaustive sizes");
  std::string betas;
  for (const auto& s : e.sizes) {
    c.Expect(s.beta >= 0.8, "exhaustive beta(" + std::to_string(s.n) + ") = " + Fmt(s.beta));
    betas += (betas.empty() ? "" : "/") + Fmt(s.beta, 3);
  }
  c.Note("exhaustive beta " + betas);

  const auto t0 = std::chrono::steady_clock::now();
  bench::QScoreConfig sa_cfg;
  sa_cfg.sizes = {10, 20, 30, 40};
  sa_cfg.instances_per_size = 10;
  bench::SolverSpec sa;
  sa.seed = 5;
  const auto q = bench::qscore(sa, sa_cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.Expect(!q.error, "annealing run failed");
  c.Expect(q.qscore >= 30, "annealing Q-score " + std::to_string(q.qscore));
  c.Expect(secs < 600, "annealing took " + Fmt(secs) + " s");
  c.Note("annealing Q-score " + std::to_string(q.qscore) + " in " + Fmt(secs, 2) + " s");

  // Published Q-scores enter as external records and come back unchanged.
  testing::TempDir dir;
  ba_store* store = nullptr;
  char* out = nullptr;
  c.Expect(ba_store_open(dir.str().c_str(), &store) == BA_OK, "store open");
  c.Expect(ba_store_ingest(store, testing::ReadFixture("dwave_qscores.json").c_str(), &out) == BA_OK, "ingest");
  ba_string_free(out);
  ba_model* model = nullptr;
  c.Expect(ba_model_load(testing::ReadFixture("qpu_model.json").c_str(), &model) == BA_OK, "model");
  out = nullptr;
  c.Expect(ba_store_evaluate(store, model, nullptr, "json", &out) == BA_OK, "evaluate");
  const Json report = out ? Json::parse(out) : Json::object();
  ba_string_free(out);
  std::map<std::string, std::pair<double, double>> expected{{"dwave-2000q", {70, 70}},
                                                            {"dwave-advantage", {140, 110}}};
  for (const auto& row : report.value("alternatives", Json::array())) {
    const auto it = expected.find(row["alternative"]);
    if (it == expected.end()) continue;
    c.Expect(row["values"]["maxcut.qscore"] == it->second.first, "maxcut qscore changed");
    c.Expect(row["values"]["maxclique.qscore"] == it->second.second, "maxclique qscore changed");
    expected.erase(it);
  }
  c.Expect(expected.empty(), "alternatives missing from the report");
  ba_model_free(model);
  ba_store_close(store);
}

// 6. Annealing, quadratization and matching against exhaustive oracles.
void SolverEquivalence(Check& c) {
  int sa_hits = 0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 6 + k % 9;
    const auto g = bench::RandomGraph(n, 0.5, 600 + k);
    const auto p = bench::MaxCutProblem(g);
    const double best = bench::SolveExhaustive(p).objective;
    c.Expect(static_cast<double>(testing::BruteForceMaxCut(g)) == best, "exhaustive vs brute force cut");
    if (bench::SolveAnnealing(p, 1000, 4, 700 + k).objective == best) ++sa_hits;
  }
  c.Expect(sa_hits >= 48, "annealing matched " + std::to_string(sa_hits) + "/50");
  c.Note("annealing optimal on " + std::to_string(sa_hits) + "/50");

  Rng rng(6);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 4 + rng.Below(7);
    const std::size_t degree = std::min<std::size_t>(3 + rng.Below(2), n);
    const auto p = bench::RandomHobo(n, degree, rng.NextU64());
    const auto q = bench::quadratize(p);
    c.Expect(q.problem.degree() <= 2, "quadratized degree");
    std::vector<bench::Assignment> orig;
    const double v0 = testing::BruteForceOptimum(p, &orig);
    if (q.problem.num_vars() > 22) {
      c.Expect(false, "quadratized problem too large for the oracle");
      continue;
    }
    std::vector<bench::Assignment> ext;
    const double v1 = testing::BruteForceOptimum(q.problem, &ext);
    c.Expect(std::abs(v0 - v1) <= 1e-9 * std::max(1.0, std::abs(v0)), "quadratize changed the minimum");
    std::set<bench::Assignment> projected, expect(orig.begin(), orig.end());
    for (const auto& a : ext) projected.insert(q.Project(a));
    c.Expect(projected == expect, "projected argmin set differs");
  }

  for (int k = 0; k < 50; ++k) {
    const std::size_t per_side = 2 + k % 4;
    const auto g = bench::RandomBipartiteGraph(per_side, 0.5, 800 + k);
    const auto p = bench::MatchingProblem(g);
    const auto r = bench::SolveExhaustive(p);
    const auto size = static_cast<std::size_t>(std::count(r.assignment.begin(), r.assignment.end(), 1));
    c.Expect(bench::IsMatching(g, r.assignment), "optimum is not a matching");
    c.Expect(size == bench::matching_oracle(g), "optimum is not maximum");
    c.Expect(size == testing::KuhnMatching(g), "Hopcroft-Karp vs augmenting paths");
  }
}

// 7. Factorization.
void Factorization(Check& c) {
  std::string rates;
  for (std::uint64_t n : {15, 21, 35, 77}) {
    const auto layout = bench::FactorizationLayoutFor(n);
    const auto p = bench::FactorizationProblem(layout);
    const auto d = bench::decode_factors(layout, bench::SolveExhaustive(p).assignment);
    c.Expect(d.cost == 0.0 && d.p1 * d.p2 == n && d.p1 > 1 && d.p2 > 1,
             "exhaustive on " + std::to_string(n) + " gave " + std::to_string(d.p1) + "x" + std::to_string(d.p2));
    int ok = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto r = bench::SolveAnnealing(p, 1000, 1, DeriveSeed(n, seed));
      if (bench::decode_factors(layout, r.assignment).cost == 0.0) ++ok;
    }
    c.Expect(ok >= 18, "annealing solved " + std::to_string(n) + " in " + std::to_string(ok) + "/20");
    rates += (rates.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(ok) + "/20";
  }
  c.Note("annealing " + rates);
}

// 8. Quantum simulation.
void QuantumSim(Check& c) {
  using namespace qsim;
  auto spec = [](SpinModel m, int n, Boundary b) {
    ModelSpec s;
    s.model = m;
    s.num_qubits = n;
    s.g = 0.9;
    s.delta = 0.5;
    s.boundary = b;
    return s;
  };
  for (auto m : {SpinModel::kXY, SpinModel::kXXZ, SpinModel::kTransverseFieldIsing}) {
    for (int n : {4, 7, 10}) {
      const auto h = build_hamiltonian(spec(m, n, Boundary::kPeriodic));
      const auto psi0 = QuantumState::Random(n, 40 + n);
      const double e0 = EnergyExpectation(h, psi0);
      for (double t : {0.3, 1.0, 2.5}) {
        const auto psi = evolve(h, psi0, t);
        c.Expect(std::abs(psi.amplitudes().norm() - 1.0) <= 1e-9, "norm drift");
        c.Expect(std::abs(EnergyExpectation(h, psi) - e0) <= 1e-9, "energy drift");
      }
    }
  }

  ModelSpec x;
  x.model = SpinModel::kCustom;
  x.num_qubits = 1;
  x.custom_terms.push_back({1.0, PauliString::Parse("X0")});
  const auto hx = build_hamiltonian(x);
  for (int k = 0; k <= 40; ++k) {
    const double t = 0.1 * k;
    const double z = Expectation(evolve(hx, QuantumState::Basis(1, 0), t), PauliString::Single('Z', 0));
    c.Expect(std::abs(z - std::cos(2 * t)) <= 1e-9, "<Z> at t = " + Fmt(t));
  }

  const auto h6 = build_hamiltonian(spec(SpinModel::kXXZ, 6, Boundary::kOpen));
  const auto psi0 = QuantumState::Product("0+1-01");
  const auto exact = evolve(h6, psi0, 1.0);
  auto err = [&](int steps) {
    return (evolve(h6, psi0, 1.0, Evolution::Trotter(steps)).amplitudes() - exact.amplitudes()).norm();
  };
  std::string ratios;
  for (int steps : {16, 32, 64}) {
    const double ratio = err(steps) / err(2 * steps);
    c.Expect(ratio >= 1.5 && ratio <= 2.5, "Trotter ratio " + Fmt(ratio));
    ratios += (ratios.empty() ? "" : " ") + Fmt(ratio, 3);
  }
  c.Note("Trotter error ratios " + ratios);

  const auto psi = evolve(build_hamiltonian(spec(SpinModel::kXXZ, 4, Boundary::kOpen)), QuantumState::Product("0101"), 0.8);
  const auto obs = ObservableSet::AllWeightTwo(4);
  const auto ideal = expectation_set(psi, obs);
  double sum_abs = 0.0;
  for (const auto& [l, v] : ideal) sum_abs += std::abs(v);
  for (double p : {0.05, 0.2, 0.5, 1.0}) {
    const double g = infidelity_proxy(expectation_set(DensityMatrix::Depolarized(psi, p), obs), ideal);
    c.Expect(std::abs(g - p * sum_abs) <= 1e-9, "G under depolarization p = " + Fmt(p));
  }
  for (int n = 1; n <= 8; ++n) {
    c.Expect(fidelity(DensityMatrix::MaximallyMixed(n), QuantumState::Basis(n, 1)) == std::ldexp(1.0, -n),
             "maximally mixed fidelity n = " + std::to_string(n));
    const double f = fidelity(DensityMatrix::MaximallyMixed(n), QuantumState::Random(n, n));
    c.Expect(std::abs(f * std::ldexp(1.0, n) - 1.0) <= 1e-15, "random-state fidelity n = " + std::to_string(n));
  }
}

// 9. End to end through the C API and the HTTP server.
void EndToEnd(Check& c) {
  testing::TempDir dir;
  ba_store* store = nullptr;
  char* out = nullptr;
  c.Expect(ba_store_open(dir.str().c_str(), &store) == BA_OK, "store open");
  c.Expect(ba_store_ingest(store, testing::ReadFixture("dwave_qscores.json").c_str(), &out) == BA_OK, "ingest");
  ba_string_free(out);

  ba_model* model = nullptr;
  c.Expect(ba_model_load(testing::ReadFixture("qpu_model_skeleton.json").c_str(), &model) == BA_OK, "skeleton");
  for (auto [node, file] : {std::pair{"maxcut", "maxcut_utility_session.json"},
                            std::pair{"maxclique", "maxclique_utility_session.json"},
                            std::pair{"qscore", "qscore_capacity_session.json"}}) {
    c.Expect(ba_model_apply_session(model, node, testing::ReadFixture(file).c_str()) == BA_OK,
             std::string("elicit ") + node + ": " + ba_last_error());
  }
  c.Expect(ba_store_put_model(store, "qpu", model) == BA_OK, "put model");

  out = nullptr;
  c.Expect(ba_store_report(store, "qpu", "worst", "json", &out) == BA_OK, "report");
  const Json report = out ? Json::parse(out) : Json::object();
  ba_string_free(out);
  const auto& rows = report.value("alternatives", Json::array());
  c.Expect(rows.size() == 2, "two alternatives ranked");
  if (rows.size() == 2) {
    c.Expect(rows[0]["alternative"] == "dwave-advantage" && rows[0]["rank"] == 1, "Advantage first");
    c.Expect(rows[1]["alternative"] == "dwave-2000q" && rows[1]["rank"] == 2, "2000Q second");
    c.Expect(rows[0]["score"].get<double>() > rows[1]["score"].get<double>(), "strictly higher score");
    c.Note("scores " + Fmt(rows[0]["score"].get<double>()) + " vs " + Fmt(rows[1]["score"].get<double>()));
  }

  // Library output, in-process API route, and the HTTP server must agree.
  service::Store direct(dir.str());
  service::HttpServer server(direct);
  const int port = server.Bind("127.0.0.1", 0);
  std::thread serve([&] { server.Run(); });
  httplib::Client client("127.0.0.1", port);
  for (const char* format : {"json", "markdown"}) {
    char* lib = nullptr;
    c.Expect(ba_store_report(store, "qpu", "worst", format, &lib) == BA_OK, "report");
    const std::string target = std::string("/v1/models/qpu/report?format=") + format + "&reference=worst";
    char* api = nullptr;
    int status = 0;
    c.Expect(ba_store_request(store, "GET", target.c_str(), "", &status, &api) == BA_OK && status == 200,
             "request");
    const auto http = client.Get(target);
    c.Expect(http && http->status == 200, "HTTP status");
    if (lib && api) c.Expect(std::string(lib) == api, std::string(format) + " library vs route");
    if (lib && http) c.Expect(std::string(lib) == http->body, std::string(format) + " library vs HTTP");
    ba_string_free(lib);
    ba_string_free(api);
  }
  server.Stop();
  serve.join();
  ba_model_free(model);
  ba_store_close(store);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"utility elicitation worked example", UtilityTable},
      {"Choquet normalization and monotonicity", ChoquetProperties},
      {"capacity elicitation soundness", CapacitySoundness},
      {"explanation efficiency", ExplanationEfficiency},
      {"Q-score harness", QScoreHarness},
      {"solver/oracle equivalence", SolverEquivalence},
      {"factorization", Factorization},
      {"quantum simulation checks", QuantumSim},
      {"end-to-end ranking and byte-identical outputs", EndToEnd},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.Expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!c.ok()) ++failed;
    std::printf("%s [%zu] %s: %s [%.2fs]\n", c.ok() ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                c.Summary().c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
