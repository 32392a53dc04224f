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

#include "benchagg/benchagg.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "bench/bench_io.hpp"
#include "bench/generators.hpp"
#include "bench/qscore.hpp"
#include "bench/solvers.hpp"
#include "common/error.hpp"
#include "common/json_util.hpp"
#include "elicitation/session_io.hpp"
#include "mcda/model_io.hpp"
#include "qsim/qsim_io.hpp"
#include "service/api.hpp"
#include "service/report.hpp"
#include "service/server.hpp"
#include "service/store.hpp"

using namespace benchagg;

struct ba_model {
  mcda::CriteriaTree tree;
};

struct ba_store {
  explicit ba_store(std::string root) : store(std::move(root)) {}
  service::Store store;
};

namespace {

thread_local std::string g_last_error;

char* Dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename F>
ba_status Guard(F&& f) {
  try {
    f();
    return BA_OK;
  } catch (const ConsistencyError& e) {
    g_last_error = e.what();
    for (const auto& v : e.violations()) g_last_error += "\n  " + v;
    return BA_ERR_CONSISTENCY;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<ba_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return BA_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return BA_ERR_INTERNAL;
  }
}

void NotNull(const void* p, const char* what) {
  Require(p != nullptr, ErrorCode::kInvalidArgument, std::string(what) + " must not be NULL");
}

void Out(char** out, const std::string& s) {
  char* p = Dup(s);
  Require(p != nullptr, ErrorCode::kInternal, "out of memory");
  *out = p;
}

std::optional<explanation::ReferenceKind> Reference(const char* ref) {
  if (ref == nullptr || *ref == '\0') return std::nullopt;
  return explanation::ParseReferenceKind(ref);
}

std::string Format(const char* f) { return f && *f ? f : "json"; }

std::vector<mcda::MeasurementProfile> Profiles(const char* text) {
  NotNull(text, "profiles");
  return mcda::ProfilesFromJson(ParseJson(text, "profiles"));
}

bench::SolverSpec SolverFromJson(const Json& j) {
  bench::SolverSpec s;
  s.method = bench::ParseMethod(j.contains("solver") ? AsString(j["solver"], "solver") : "sa");
  auto u64 = [&](const char* key, std::uint64_t def) -> std::uint64_t {
    if (!j.contains(key)) return def;
    Require(j[key].is_number_unsigned() ||
                (j[key].is_number_integer() && j[key].get<std::int64_t>() >= 0),
            ErrorCode::kValidation, std::string(key) + ": expected a non-negative integer");
    return j[key].get<std::uint64_t>();
  };
  s.seed = u64("solver_seed", u64("seed", 0));
  s.sweeps = u64("sweeps", s.sweeps);
  s.restarts = u64("restarts", s.restarts);
  if (j.contains("adapter")) {
    const Json& a = j["adapter"];
    Require(a.is_array() && !a.empty(), ErrorCode::kValidation,
            "adapter: expected a non-empty array of strings (argv)");
    for (const auto& x : a) s.adapter.argv.push_back(AsString(x, "adapter[]"));
  }
  if (j.contains("timeout")) s.adapter.timeout_seconds = AsNumber(j["timeout"], "timeout");
  return s;
}

std::vector<std::size_t> SizesFromJson(const Json& j, std::vector<std::size_t> def) {
  if (!j.contains("sizes")) return def;
  const Json& s = j["sizes"];
  if (s.is_string()) return bench::ParseSizes(s.get<std::string>());
  Require(s.is_array(), ErrorCode::kValidation, "sizes: expected \"a..b\" or an array");
  std::vector<std::size_t> out;
  for (const auto& x : s) {
    Require(x.is_number_unsigned(), ErrorCode::kValidation, "sizes: expected positive integers");
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

Json RecordsToJson(const std::vector<service::BenchmarkRecord>& recs) {
  Json a = Json::array();
  for (const auto& r : recs) a.push_back(service::RecordToJson(r));
  return a;
}

}  // namespace

extern "C" {

const char* ba_version(void) { return "0.1.0"; }

const char* ba_status_name(ba_status status) {
  if (status == BA_OK) return "ok";
  return ErrorCodeName(static_cast<ErrorCode>(status));
}

const char* ba_last_error(void) { return g_last_error.c_str(); }

void ba_string_free(char* s) { std::free(s); }

ba_status ba_model_load(const char* json, ba_model** out) {
  return Guard([&] {
    NotNull(json, "json");
    NotNull(out, "out");
    *out = new ba_model{mcda::LoadModel(json)};
  });
}

ba_status ba_model_load_file(const char* path, ba_model** out) {
  return Guard([&] {
    NotNull(path, "path");
    NotNull(out, "out");
    *out = new ba_model{mcda::LoadModel(ReadFile(path))};
  });
}

void ba_model_free(ba_model* model) { delete model; }

ba_status ba_model_to_json(const ba_model* model, char** out) {
  return Guard([&] {
    NotNull(model, "model");
    Out(out, mcda::SaveModel(model->tree));
  });
}

ba_status ba_model_describe(const ba_model* model, char** out) {
  return Guard([&] {
    NotNull(model, "model");
    Out(out, mcda::DescribeModel(model->tree));
  });
}

ba_status ba_model_evaluate(const ba_model* model, const char* profiles_json, const char* reference,
                            const char* format, char** out) {
  return Guard([&] {
    NotNull(model, "model");
    const auto r = service::evaluate_and_report(model->tree, Profiles(profiles_json), {Reference(reference)});
    Out(out, service::FormatReport(model->tree, r, Format(format)));
  });
}

ba_status ba_model_evaluate_interval(const ba_model* model, const char* profile_json, char** out) {
  return Guard([&] {
    NotNull(model, "model");
    NotNull(profile_json, "profile");
    const auto p = mcda::ProfileFromJson(ParseJson(profile_json, "profile"), "profile");
    Out(out, DumpJson(mcda::IntervalEvaluationToJson(model->tree, mcda::evaluate_interval(model->tree, p))));
  });
}

ba_status ba_model_explain(const ba_model* model, const char* profiles_json, const char* alternative,
                           const char* reference, const char* format, char** out) {
  return Guard([&] {
    NotNull(model, "model");
    NotNull(alternative, "alternative");
    const auto ref = Reference(reference).value_or(explanation::ReferenceKind::kWorst);
    const auto e = service::ExplainAlternative(model->tree, Profiles(profiles_json), alternative, ref);
    Out(out, service::FormatExplanation(model->tree, e, Format(format)));
  });
}

ba_status ba_model_apply_session(ba_model* model, const char* node_id, const char* session_json) {
  return Guard([&] {
    NotNull(model, "model");
    NotNull(node_id, "node_id");
    NotNull(session_json, "session");
    const auto session = elicitation::SessionFromJson(ParseJson(session_json, "session"));
    mcda::Node n = model->tree.node(node_id);
    if (const auto* u = std::get_if<elicitation::UtilitySession>(&session)) {
      Require(n.is_criterion(), ErrorCode::kValidation, "node '" + n.id + "' is not a criterion");
      mcda::Criterion c = n.criterion();
      c.utility = elicitation::derive_utility_function(*u);
      n.payload = c;
    } else {
      Require(!n.is_criterion(), ErrorCode::kValidation, "node '" + n.id + "' is a criterion");
      n.payload = elicitation::derive_capacity(std::get<elicitation::CapacitySession>(session));
    }
    model->tree = model->tree.WithNode(n);
  });
}

ba_status ba_check_consistency(const char* session_json, char** out) {
  return Guard([&] {
    NotNull(session_json, "session");
    const auto s = elicitation::SessionFromJson(ParseJson(session_json, "session"));
    Out(out, DumpJson(elicitation::ViolationsToJson(elicitation::check_consistency(s))));
  });
}

ba_status ba_elicit(const char* session_json, char** out) {
  return Guard([&] {
    NotNull(session_json, "session");
    const auto s = elicitation::SessionFromJson(ParseJson(session_json, "session"));
    Json result;
    if (const auto* u = std::get_if<elicitation::UtilitySession>(&s)) {
      const auto f = elicitation::derive_utility_function(*u);
      Json bp = Json::array();
      for (const auto& b : f.breakpoints()) bp.push_back(Json::array({b.value, b.utility}));
      result = Json{{"kind", "utility"},
                    {"parameters", mcda::UtilityToJson(f)},
                    {"summary", Json{{"breakpoints", std::move(bp)}}}};
    } else {
      const auto p = elicitation::derive_capacity(std::get<elicitation::CapacitySession>(s));
      const auto idx = mcda::importance_and_interaction(p);
      Json importance = Json::object();
      for (std::size_t i = 0; i < p.children().size(); ++i) importance[p.children()[i]] = idx.importance[i];
      Json interaction = Json::array();
      for (const auto& x : idx.interaction) {
        interaction.push_back(Json{{"children", {p.children()[x.first], p.children()[x.second]}},
                                   {"value", x.value}});
      }
      result = Json{{"kind", "capacity"},
                    {"parameters", mcda::ParamsToJson(p)},
                    {"summary", Json{{"importance", std::move(importance)},
                                     {"interaction", std::move(interaction)}}}};
    }
    Out(out, DumpJson(result));
  });
}

ba_status ba_store_open(const char* root, ba_store** out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = new ba_store(root && *root ? std::string(root) : service::Store::DefaultRoot());
  });
}

void ba_store_close(ba_store* store) { delete store; }

ba_status ba_store_root(const ba_store* store, char** out) {
  return Guard([&] {
    NotNull(store, "store");
    Out(out, store->store.root());
  });
}

ba_status ba_store_ingest(ba_store* store, const char* document, char** out) {
  return Guard([&] {
    NotNull(store, "store");
    NotNull(document, "document");
    const auto report = store->store.Ingest(service::ParseRecordDocument(document));
    Out(out, DumpJson(service::IngestReportToJson(report)));
  });
}

ba_status ba_store_records(const ba_store* store, char** out) {
  return Guard([&] {
    NotNull(store, "store");
    Out(out, DumpJson(Json{{"records", RecordsToJson(store->store.Records())}}));
  });
}

ba_status ba_store_put_model(ba_store* store, const char* name, const ba_model* model) {
  return Guard([&] {
    NotNull(store, "store");
    NotNull(name, "name");
    NotNull(model, "model");
    store->store.PutModel(name, model->tree);
  });
}

ba_status ba_store_get_model(const ba_store* store, const char* name, ba_model** out) {
  return Guard([&] {
    NotNull(store, "store");
    NotNull(name, "name");
    NotNull(out, "out");
    *out = new ba_model{store->store.GetModel(name)};
  });
}

ba_status ba_store_report(const ba_store* store, const char* model_name, const char* reference,
                          const char* format, char** out) {
  return Guard([&] {
    NotNull(store, "store");
    NotNull(model_name, "model_name");
    const auto tree = store->store.GetModel(model_name);
    const auto ps = service::StoreProfiles(store->store, tree);
    const auto r = service::evaluate_and_report(tree, ps.profiles, {Reference(reference)}, ps.warnings);
    Out(out, service::FormatReport(tree, r, Format(format)));
  });
}

ba_status ba_store_evaluate(const ba_store* store, const ba_model* model, const char* reference,
                            const char* format, char** out) {
  return Guard([&] {
    NotNull(store, "store");
    NotNull(model, "model");
    const auto ps = service::StoreProfiles(store->store, model->tree);
    const auto r = service::evaluate_and_report(model->tree, ps.profiles, {Reference(reference)}, ps.warnings);
    Out(out, service::FormatReport(model->tree, r, Format(format)));
  });
}

ba_status ba_store_explain(const ba_store* store, const ba_model* model, const char* alternative,
                           const char* reference, const char* format, char** out) {
  return Guard([&] {
    NotNull(store, "store");
    NotNull(model, "model");
    NotNull(alternative, "alternative");
    const auto ps = service::StoreProfiles(store->store, model->tree);
    const auto ref = Reference(reference).value_or(explanation::ReferenceKind::kWorst);
    Out(out, service::FormatExplanation(
                 model->tree, service::ExplainAlternative(model->tree, ps.profiles, alternative, ref),
                 Format(format)));
  });
}

ba_status ba_store_request(ba_store* store, const char* method, const char* target, const char* body,
                           int* status_out, char** out) {
  return Guard([&] {
    NotNull(store, "store");
    NotNull(method, "method");
    NotNull(target, "target");
    NotNull(status_out, "status_out");
    const service::ApiRouter router(store->store);
    const auto r = router.Handle(method, target, body ? body : "");
    Out(out, r.body);
    *status_out = r.status;
  });
}

ba_status ba_serve(ba_store* store, const char* host, int port, void (*on_ready)(int, void*), void* ctx) {
  return Guard([&] {
    NotNull(store, "store");
    service::HttpServer server(store->store);
    const int bound = server.Bind(host && *host ? host : "127.0.0.1", port);
    if (on_ready) on_ready(bound, ctx);
    server.Run();
  });
}

ba_status ba_bench_run(const char* config_json, char** out) {
  return Guard([&] {
    NotNull(config_json, "config");
    const Json j = ParseJson(config_json, "bench run config");
    bench::BenchRunConfig cfg;
    cfg.family = bench::ParseFamily(RequireString(j, "family", "config"));
    cfg.solver = SolverFromJson(j);
    cfg.sizes = SizesFromJson(j, {});
    Require(!cfg.sizes.empty(), ErrorCode::kValidation, "config.sizes: missing");
    if (j.contains("seeds")) cfg.seeds = static_cast<std::size_t>(AsNumber(j["seeds"], "config.seeds"));
    if (j.contains("seed")) cfg.base_seed = j["seed"].get<std::uint64_t>();
    if (j.contains("hobo_degree")) cfg.hobo_degree = static_cast<std::size_t>(AsNumber(j["hobo_degree"], "config.hobo_degree"));
    if (j.contains("hard_matching")) cfg.hard_matching = j["hard_matching"].get<bool>();
    if (j.contains("alternative")) cfg.alternative_id = AsString(j["alternative"], "config.alternative");
    if (j.contains("timestamp")) cfg.timestamp = AsString(j["timestamp"], "config.timestamp");
    const auto records = bench::bench_run(cfg);
    Json result{{"records", RecordsToJson(records)}};
    if (j.contains("out_dir")) {
      result["files"] = bench::WriteRecordFiles(records, AsString(j["out_dir"], "config.out_dir"));
    }
    Out(out, DumpJson(result));
  });
}

ba_status ba_bench_qscore(const char* config_json, char** out) {
  return Guard([&] {
    NotNull(config_json, "config");
    const Json j = ParseJson(config_json, "qscore config");
    bench::QScoreConfig cfg;
    cfg.sizes = SizesFromJson(j, cfg.sizes);
    if (j.contains("instances")) cfg.instances_per_size = static_cast<std::size_t>(AsNumber(j["instances"], "config.instances"));
    if (j.contains("threshold")) cfg.threshold = AsNumber(j["threshold"], "config.threshold");
    if (j.contains("baseline")) cfg.baseline = bench::ParseRandomBaseline(AsString(j["baseline"], "config.baseline"));
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    const bench::SolverSpec solver = SolverFromJson(j);
    const auto result = bench::qscore(solver, cfg);
    const std::string alt = j.contains("alternative") ? AsString(j["alternative"], "config.alternative")
                                                      : std::string(bench::MethodName(solver.method));
    const std::string stamp =
        j.contains("timestamp") ? AsString(j["timestamp"], "config.timestamp") : service::UtcTimestamp();
    const auto records = bench::QScoreRecords(result, alt, stamp);
    Json doc{{"result", bench::QScoreResultToJson(result, cfg)}, {"records", RecordsToJson(records)}};
    if (j.contains("out_dir")) {
      doc["files"] = bench::WriteRecordFiles(records, AsString(j["out_dir"], "config.out_dir"));
    }
    Out(out, DumpJson(doc));
  });
}

ba_status ba_bench_solve(const char* problem_json, const char* solver_json, char** out) {
  return Guard([&] {
    NotNull(problem_json, "problem");
    const auto p = bench::ProblemFromJson(ParseJson(problem_json, "problem"));
    const Json sj = solver_json ? ParseJson(solver_json, "solver") : Json::object();
    Out(out, DumpJson(bench::SolveResultToJson(bench::solve(p, SolverFromJson(sj)))));
  });
}

ba_status ba_bench_generate(const char* instance_json, char** out) {
  return Guard([&] {
    NotNull(instance_json, "instance");
    const Json j = ParseJson(instance_json, "instance");
    bench::InstanceSpec spec;
    spec.family = bench::ParseFamily(RequireString(j, "family", "instance"));
    if (j.contains("size")) spec.size = j["size"].get<std::size_t>();
    if (j.contains("degree")) spec.degree = j["degree"].get<std::size_t>();
    if (j.contains("target")) spec.target = j["target"].get<std::uint64_t>();
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("hard_matching")) spec.hard_matching = j["hard_matching"].get<bool>();
    const auto inst = bench::gen_instance(spec);
    Json doc{{"descriptor", inst.descriptor}};
    if (inst.problem) doc["problem"] = bench::ProblemToJson(*inst.problem);
    if (inst.graph) doc["graph"] = bench::GraphToJson(*inst.graph);
    if (inst.factorization) {
      doc["factorization"] = Json{{"n", inst.factorization->n},
                                  {"p1_bits", inst.factorization->p1_bits},
                                  {"p2_bits", inst.factorization->p2_bits},
                                  {"prime", inst.factorization->prime}};
    }
    if (inst.linear) {
      Json a = Json::array();
      for (Eigen::Index r = 0; r < inst.linear->a.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < inst.linear->a.cols(); ++c) row.push_back(inst.linear->a(r, c));
        a.push_back(std::move(row));
      }
      Json b = Json::array();
      for (Eigen::Index r = 0; r < inst.linear->b.size(); ++r) b.push_back(inst.linear->b[r]);
      doc["linear_system"] = Json{{"a", std::move(a)}, {"b", std::move(b)}};
    }
    Out(out, DumpJson(doc));
  });
}

ba_status ba_qsim_ideal(const char* request_json, char** out) {
  return Guard([&] {
    NotNull(request_json, "request");
    const Json j = ParseJson(request_json, "qsim request");
    const qsim::ModelSpec model = qsim::ModelSpecFromJson(RequireField(j, "model", "request"));
    const std::string init = j.contains("initial_state")
                                 ? AsString(j["initial_state"], "request.initial_state")
                                 : std::string(static_cast<std::size_t>(std::max(model.num_qubits, 0)), '0');
    qsim::Evolution method;
    if (j.contains("method")) {
      // Reuse the document parser for the method field.
      Json probe{{"model", j["model"]}, {"t", 0.0}, {"method", j["method"]}, {"observables", Json::array()}};
      method = qsim::ObservableDocumentFromJson(probe).method;
    }
    std::vector<std::string> labels;
    if (j.contains("observables")) {
      for (const auto& l : j["observables"]) labels.push_back(AsString(l, "request.observables[]"));
    }
    const auto doc = qsim::ComputeIdeal(model, init, RequireNumber(j, "t", "request"), method, labels);
    Out(out, DumpJson(qsim::ObservableDocumentToJson(doc)));
  });
}

ba_status ba_qsim_score(const char* measured_json, const char* alternative, char** out) {
  return Guard([&] {
    NotNull(measured_json, "measured");
    const auto doc = qsim::ObservableDocumentFromJson(ParseJson(measured_json, "measured document"));
    const auto score = qsim::ScoreMeasured(doc);
    const std::string alt = alternative && *alternative ? alternative : "device";
    Json j{{"G", score.g},
           {"observables", score.observable_count},
           {"F", score.fidelity ? Json(*score.fidelity) : Json(nullptr)},
           {"record", service::RecordToJson(qsim::QsimRecord(doc, score, alt, service::UtcTimestamp()))}};
    Out(out, DumpJson(j));
  });
}

}  // extern "C"
