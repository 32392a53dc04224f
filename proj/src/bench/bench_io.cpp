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

#include "bench/bench_io.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>

#include <Eigen/LU>

#include "bench/factorization.hpp"
#include "bench/matching.hpp"
#include "common/error.hpp"
#include "common/rng.hpp"

namespace benchagg::bench {
namespace {

std::uint64_t RequireIndex(const Json& v, const std::string& path) {
  Require(v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0),
          ErrorCode::kValidation, path + ": expected a non-negative integer");
  return v.get<std::uint64_t>();
}

std::string Sanitize(std::string s) {
  for (char& c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '.') c = '_';
  }
  return s;
}

}  // namespace

Json ProblemToJson(const PseudoBooleanProblem& p) {
  Json terms = Json::array();
  for (const auto& [vars, c] : p.terms()) terms.push_back(Json{{"vars", vars}, {"coef", c}});
  return Json{{"schema_version", 1},
              {"kind", "benchagg.problem"},
              {"num_vars", p.num_vars()},
              {"sense", p.sense() == Sense::kMinimize ? "minimize" : "maximize"},
              {"family", FamilyName(p.family())},
              {"seed", p.seed()},
              {"terms", std::move(terms)}};
}

PseudoBooleanProblem ProblemFromJson(const Json& j) {
  const std::string path = "problem";
  Require(j.is_object(), ErrorCode::kValidation, "problem: expected an object");
  const auto n = RequireIndex(RequireField(j, "num_vars", path), path + ".num_vars");
  const std::string sense = RequireString(j, "sense", path);
  Require(sense == "minimize" || sense == "maximize", ErrorCode::kValidation,
          "problem.sense: expected 'minimize' or 'maximize'");
  Family family = Family::kCustom;
  if (j.contains("family")) family = ParseFamily(AsString(j["family"], path + ".family"));
  std::uint64_t seed = 0;
  if (j.contains("seed")) seed = RequireIndex(j["seed"], path + ".seed");
  PseudoBooleanProblem p(n, sense == "minimize" ? Sense::kMinimize : Sense::kMaximize, family, seed);
  const Json& terms = RequireField(j, "terms", path);
  Require(terms.is_array(), ErrorCode::kValidation, "problem.terms: expected an array");
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string tp = path + ".terms[" + std::to_string(k) + "]";
    const Json& vars = RequireField(terms[k], "vars", tp);
    Require(vars.is_array(), ErrorCode::kValidation, tp + ".vars: expected an array");
    Term t;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const auto v = RequireIndex(vars[i], tp + ".vars[" + std::to_string(i) + "]");
      Require(v < n, ErrorCode::kValidation, tp + ".vars: index out of range");
      t.push_back(static_cast<std::uint32_t>(v));
    }
    p.AddTerm(std::move(t), RequireNumber(terms[k], "coef", tp));
  }
  return p;
}

Json GraphToJson(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back(Json::array({u, v}));
  Json j{{"num_vertices", g.num_vertices}, {"edges", std::move(edges)}};
  if (g.side) j["side"] = *g.side;
  return j;
}

Graph GraphFromJson(const Json& j) {
  const std::string path = "graph";
  Graph g;
  g.num_vertices = RequireIndex(RequireField(j, "num_vertices", path), path + ".num_vertices");
  const Json& edges = RequireField(j, "edges", path);
  Require(edges.is_array(), ErrorCode::kValidation, "graph.edges: expected an array");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string ep = path + ".edges[" + std::to_string(k) + "]";
    Require(edges[k].is_array() && edges[k].size() == 2, ErrorCode::kValidation,
            ep + ": expected a pair of vertices");
    auto u = static_cast<std::uint32_t>(RequireIndex(edges[k][0], ep));
    auto v = static_cast<std::uint32_t>(RequireIndex(edges[k][1], ep));
    if (u > v) std::swap(u, v);
    g.edges.emplace_back(u, v);
  }
  if (j.contains("side")) {
    const Json& side = j["side"];
    Require(side.is_array(), ErrorCode::kValidation, "graph.side: expected an array");
    std::vector<std::uint8_t> s;
    for (const auto& b : side) {
      Require(b.is_number_integer() && (b.get<int>() == 0 || b.get<int>() == 1),
              ErrorCode::kValidation, "graph.side: entries must be 0 or 1");
      s.push_back(static_cast<std::uint8_t>(b.get<int>()));
    }
    g.side = std::move(s);
  }
  g.Validate();
  return g;
}

Json SolveResultToJson(const SolveResult& r) {
  std::string bits;
  for (auto b : r.assignment) bits.push_back(b ? '1' : '0');
  Json j{{"assignment", bits},
         {"objective", r.objective},
         {"wall_clock_seconds", r.wall_clock_seconds},
         {"energy_joules", r.energy_joules ? Json(*r.energy_joules) : Json(nullptr)},
         {"solver", r.solver}};
  return j;
}

Json QScoreResultToJson(const QScoreResult& r, const QScoreConfig& cfg) {
  Json sizes = Json::array();
  for (const auto& s : r.sizes) {
    sizes.push_back(Json{{"n", s.n},
                         {"instances", s.runs.size()},
                         {"mean_best_cut", s.mean_best_cut},
                         {"beta", s.beta},
                         {"passed", s.passed}});
  }
  return Json{{"qscore", r.qscore},
              {"threshold", cfg.threshold},
              {"baseline", RandomBaselineName(cfg.baseline)},
              {"sizes", std::move(sizes)},
              {"error", r.error ? Json(*r.error) : Json(nullptr)}};
}

std::vector<std::size_t> ParseSizes(const std::string& text) {
  auto number = [&](const std::string& s) -> std::size_t {
    Require(!s.empty() && std::all_of(s.begin(), s.end(), ::isdigit), ErrorCode::kValidation,
            "sizes: '" + text + "' is not of the form a..b, a..b/step or a,b,c");
    return static_cast<std::size_t>(std::stoull(s));
  };
  std::set<std::size_t> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    std::string hi = text.substr(dots + 2);
    std::size_t step = 1;
    if (const auto slash = hi.find('/'); slash != std::string::npos) {
      step = number(hi.substr(slash + 1));
      hi = hi.substr(0, slash);
    }
    const std::size_t a = number(text.substr(0, dots));
    const std::size_t b = number(hi);
    Require(step >= 1 && a <= b, ErrorCode::kValidation, "sizes: empty range '" + text + "'");
    for (std::size_t v = a; v <= b; v += step) out.insert(v);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.insert(number(item));
  }
  Require(!out.empty(), ErrorCode::kValidation, "sizes: nothing to run");
  return {out.begin(), out.end()};
}

std::vector<service::BenchmarkRecord> bench_run(const BenchRunConfig& cfg) {
  Require(cfg.seeds >= 1, ErrorCode::kValidation, "bench run: at least one seed");
  const std::string alternative =
      cfg.alternative_id.empty() ? MethodName(cfg.solver.method) : cfg.alternative_id;
  const std::string stamp = cfg.timestamp.empty() ? service::UtcTimestamp() : cfg.timestamp;
  std::vector<service::BenchmarkRecord> out;

  for (std::size_t size : cfg.sizes) {
    if (cfg.family == Family::kFactorization && (size < 9 || size % 2 == 0 || IsPrime(size))) {
      continue;
    }
    for (std::size_t k = 0; k < cfg.seeds; ++k) {
      InstanceSpec spec;
      spec.family = cfg.family;
      spec.size = size;
      spec.target = size;
      spec.degree = cfg.hobo_degree;
      spec.hard_matching = cfg.hard_matching;
      spec.seed = DeriveSeed(DeriveSeed(cfg.base_seed, size), k);
      const Instance inst = gen_instance(spec);
      SolverSpec solver = cfg.solver;
      solver.seed = DeriveSeed(DeriveSeed(cfg.solver.seed, size), k);

      service::BenchmarkRecord rec;
      rec.alternative_id = alternative;
      rec.family = FamilyName(cfg.family);
      rec.instance = inst.descriptor;
      rec.seed = spec.seed;
      rec.timestamp = stamp;
      rec.provenance = {service::ProvenanceKind::kLocal,
                        cfg.solver.method == Method::kExternal ? cfg.solver.adapter.argv.front()
                                                                : std::string()};
      if (cfg.family == Family::kLinearSystem) {
        const LinearSystem& ls = *inst.linear;
        Eigen::VectorXd x;
        const auto start = std::chrono::steady_clock::now();
        if (cfg.solver.method == Method::kExhaustive) {
          x = ls.a.partialPivLu().solve(ls.b);
        } else if (cfg.solver.method == Method::kRandom) {
          Rng rng(solver.seed);
          x.resize(static_cast<Eigen::Index>(size));
          for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = rng.Uniform(-1.0, 1.0);
        } else {
          Fail(ErrorCode::kUnsupported, std::string("solver '") + MethodName(cfg.solver.method) +
                                            "' does not apply to linear systems");
        }
        rec.metrics["residual"] = linear_residual(ls.a, ls.b, x);
        rec.metrics["wall_clock_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rec.metrics["n"] = static_cast<double>(size);
        out.push_back(std::move(rec));
        continue;
      }

      const SolveResult r = solve(*inst.problem, solver);
      rec.metrics["objective"] = r.objective;
      rec.metrics["num_vars"] = static_cast<double>(inst.problem->num_vars());
      rec.metrics["wall_clock_seconds"] = r.wall_clock_seconds;
      if (r.energy_joules) rec.metrics["energy_joules"] = *r.energy_joules;
      switch (cfg.family) {
        case Family::kMaxCut: {
          const std::size_t n = inst.graph->num_vertices;
          rec.metrics["cut"] = r.objective;
          rec.metrics["edges"] = static_cast<double>(inst.graph->edges.size());
          if (n >= 5) rec.metrics["beta"] = beta_score(n, r.objective, QScoreConfig{});
          break;
        }
        case Family::kMatching: {
          const bool valid = IsMatching(*inst.graph, r.assignment);
          const auto best = static_cast<double>(matching_oracle(*inst.graph));
          const auto size_found = static_cast<double>(
              std::count(r.assignment.begin(), r.assignment.end(), std::uint8_t{1}));
          rec.metrics["valid"] = valid ? 1.0 : 0.0;
          rec.metrics["matching_size"] = valid ? size_found : 0.0;
          rec.metrics["max_matching"] = best;
          rec.metrics["ratio"] = best > 0.0 ? (valid ? size_found : 0.0) / best : 1.0;
          break;
        }
        case Family::kFactorization: {
          const DecodedFactors f = decode_factors(*inst.factorization, r.assignment);
          rec.metrics["cost"] = f.cost;
          rec.metrics["p1"] = static_cast<double>(f.p1);
          rec.metrics["p2"] = static_cast<double>(f.p2);
          rec.metrics["success"] = f.cost == 0.0 ? 1.0 : 0.0;
          break;
        }
        default:
          break;
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<service::BenchmarkRecord> QScoreRecords(const QScoreResult& r,
                                                    const std::string& alternative_id,
                                                    const std::string& timestamp) {
  std::vector<service::BenchmarkRecord> out;
  auto base = [&](std::string instance, std::uint64_t seed) {
    service::BenchmarkRecord rec;
    rec.alternative_id = alternative_id;
    rec.family = "maxcut";
    rec.instance = std::move(instance);
    rec.seed = seed;
    rec.timestamp = timestamp;
    rec.provenance.kind = service::ProvenanceKind::kLocal;
    return rec;
  };
  for (const auto& s : r.sizes) {
    for (std::size_t k = 0; k < s.runs.size(); ++k) {
      const auto& run = s.runs[k];
      auto rec = base("maxcut/n=" + std::to_string(run.n), run.instance_seed);
      rec.metrics["cut"] = run.cut;
      rec.metrics["edges"] = static_cast<double>(run.edges);
      rec.metrics["n"] = static_cast<double>(run.n);
      rec.metrics["wall_clock_seconds"] = run.wall_clock_seconds;
      if (run.energy_joules) rec.metrics["energy_joules"] = *run.energy_joules;
      out.push_back(std::move(rec));
    }
    auto rec = base("qscore/n=" + std::to_string(s.n), 0);
    rec.metrics["n"] = static_cast<double>(s.n);
    rec.metrics["mean_best_cut"] = s.mean_best_cut;
    rec.metrics["beta"] = s.beta;
    rec.metrics["passed"] = s.passed ? 1.0 : 0.0;
    out.push_back(std::move(rec));
  }
  if (!r.error) {
    auto rec = base("qscore", 0);
    rec.metrics["qscore"] = static_cast<double>(r.qscore);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<std::string> WriteRecordFiles(const std::vector<service::BenchmarkRecord>& records,
                                          const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  Require(!ec, ErrorCode::kIo, "cannot create directory '" + dir + "': " + ec.message());
  std::vector<std::string> paths;
  for (std::size_t i = 0; i < records.size(); ++i) {
    char prefix[16];
    std::snprintf(prefix, sizeof prefix, "%04zu", i);
    const std::string name = std::string(prefix) + "-" + Sanitize(records[i].family) + "-" +
                             Sanitize(records[i].instance) + "-" +
                             Sanitize(records[i].alternative_id) + ".json";
    const auto path = (std::filesystem::path(dir) / name).string();
    WriteFile(path, DumpJson(service::RecordToJson(records[i])));
    paths.push_back(path);
  }
  return paths;
}

}  // namespace benchagg::bench
