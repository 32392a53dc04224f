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

// Exercises libbenchagg through its C header only.
#include <benchagg/benchagg.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using Json = nlohmann::json;

namespace {

std::string Fixture(const std::string& name) {
  std::ifstream in(std::string(BENCHAGG_FIXTURES) + "/" + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Takes ownership of a returned string.
std::string Take(char* s) {
  std::string out = s ? s : "";
  ba_string_free(s);
  return out;
}

struct TempStore {
  std::filesystem::path root;
  TempStore() {
    char tmpl[] = "/tmp/benchagg-capi-XXXXXX";
    root = mkdtemp(tmpl);
  }
  ~TempStore() { std::filesystem::remove_all(root); }
};

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(ba_status_name(BA_OK)) == "ok");
  CHECK(std::string(ba_version()).size() > 0);
  ba_model* m = nullptr;
  CHECK(ba_model_load("{", &m) == BA_ERR_VALIDATION);
  CHECK(m == nullptr);
  CHECK(std::string(ba_last_error()).size() > 0);
  CHECK(ba_model_load(nullptr, &m) == BA_ERR_INVALID_ARGUMENT);
  CHECK(ba_model_load_file("/nonexistent/model.json", &m) == BA_ERR_IO);
}

TEST_CASE("model round trip, evaluation and explanation") {
  ba_model* m = nullptr;
  REQUIRE(ba_model_load(Fixture("qpu_model.json").c_str(), &m) == BA_OK);
  char* out = nullptr;
  REQUIRE(ba_model_to_json(m, &out) == BA_OK);
  const Json doc = Json::parse(Take(out));
  ba_model* again = nullptr;
  REQUIRE(ba_model_load(doc.dump().c_str(), &again) == BA_OK);
  REQUIRE(ba_model_to_json(again, &out) == BA_OK);
  CHECK(Json::parse(Take(out)) == doc);
  ba_model_free(again);

  const Json profiles = Json::parse(R"({"alternatives": [
      {"alternative": "old", "values": {"maxcut.qscore": 70, "maxclique.qscore": 70}},
      {"alternative": "new", "values": {"maxcut.qscore": 140, "maxclique.qscore": 110}}]})");
  ba_status st = ba_model_evaluate(m, profiles.dump().c_str(), "worst", "json", &out);
  REQUIRE_MESSAGE(st == BA_OK, ba_last_error());
  const Json rep = Json::parse(Take(out));
  CHECK(rep["alternatives"][0]["alternative"] == "new");
  CHECK(rep["alternatives"][1]["rank"] == 2);

  REQUIRE(ba_model_explain(m, profiles.dump().c_str(), "new", "worst", "json", &out) == BA_OK);
  const Json ex = Json::parse(Take(out));
  double sum = 0;
  for (const auto& n : ex["nodes"]) {
    if (n["parent"] == "qscore") sum += n["contribution"].get<double>();
  }
  CHECK(std::abs(sum - (ex["alternative_score"].get<double>() - ex["reference_score"].get<double>())) < 1e-9);
  CHECK(ba_model_explain(m, profiles.dump().c_str(), "nobody", "worst", "json", &out) == BA_ERR_NOT_FOUND);
  CHECK(ba_model_evaluate(m, profiles.dump().c_str(), "best", "json", &out) == BA_ERR_VALIDATION);

  REQUIRE(ba_model_describe(m, &out) == BA_OK);
  CHECK(Take(out).find("maxclique") != std::string::npos);
  ba_model_free(m);
}

TEST_CASE("elicitation through the C API") {
  char* out = nullptr;
  REQUIRE(ba_elicit(Fixture("maxcut_utility_session.json").c_str(), &out) == BA_OK);
  const Json u = Json::parse(Take(out));
  CHECK(u["kind"] == "utility");
  REQUIRE(ba_check_consistency(Fixture("maxcut_utility_session.json").c_str(), &out) == BA_OK);
  CHECK(Json::parse(Take(out)).empty());

  Json bad = Json::parse(Fixture("qscore_capacity_session.json"));
  bad["gaps"] = Json::array({"extreme", "extreme", "extreme"});
  bad["ranking"] = Json::array({Json::array(), Json::array({"maxcut", "maxclique"}), Json::array({"maxcut"}),
                                Json::array({"maxclique"})});
  // Pair ranked below a single criterion breaks monotonicity.
  const ba_status st = ba_elicit(bad.dump().c_str(), &out);
  CHECK((st == BA_ERR_CONSISTENCY || st == BA_ERR_VALIDATION));

  ba_model* m = nullptr;
  REQUIRE(ba_model_load_file((std::string(BENCHAGG_FIXTURES) + "/qpu_model_skeleton.json").c_str(), &m) == BA_OK);
  REQUIRE(ba_model_apply_session(m, "maxcut", Fixture("maxcut_utility_session.json").c_str()) == BA_OK);
  REQUIRE(ba_model_apply_session(m, "maxclique", Fixture("maxclique_utility_session.json").c_str()) == BA_OK);
  REQUIRE(ba_model_apply_session(m, "qscore", Fixture("qscore_capacity_session.json").c_str()) == BA_OK);
  REQUIRE(ba_model_to_json(m, &out) == BA_OK);
  CHECK(Json::parse(Take(out)) == Json::parse(Fixture("qpu_model.json")));
  CHECK(ba_model_apply_session(m, "nope", Fixture("maxcut_utility_session.json").c_str()) == BA_ERR_NOT_FOUND);
  ba_model_free(m);
}

TEST_CASE("store report equals the request path") {
  TempStore t;
  ba_store* s = nullptr;
  REQUIRE(ba_store_open(t.root.c_str(), &s) == BA_OK);
  char* out = nullptr;
  REQUIRE(ba_store_ingest(s, Fixture("dwave_qscores.json").c_str(), &out) == BA_OK);
  CHECK(Json::parse(Take(out))["accepted"] == 4);
  REQUIRE(ba_store_ingest(s, Fixture("dwave_qscores.json").c_str(), &out) == BA_OK);
  CHECK(Json::parse(Take(out))["accepted"] == 0);

  ba_model* m = nullptr;
  REQUIRE(ba_model_load(Fixture("qpu_model.json").c_str(), &m) == BA_OK);
  REQUIRE(ba_store_put_model(s, "qpu", m) == BA_OK);
  for (const char* format : {"json", "markdown"}) {
    REQUIRE(ba_store_report(s, "qpu", "worst", format, &out) == BA_OK);
    const std::string direct = Take(out);
    int status = 0;
    const std::string target = std::string("/v1/models/qpu/report?format=") + format + "&reference=worst";
    REQUIRE(ba_store_request(s, "GET", target.c_str(), "", &status, &out) == BA_OK);
    CHECK(status == 200);
    CHECK(Take(out) == direct);
    REQUIRE(ba_store_evaluate(s, m, "worst", format, &out) == BA_OK);
    CHECK(Take(out) == direct);
  }
  REQUIRE(ba_store_explain(s, m, "dwave-advantage", "worst", "json", &out) == BA_OK);
  CHECK(Json::parse(Take(out))["alternative"] == "dwave-advantage");
  CHECK(ba_store_report(s, "missing", nullptr, "json", &out) == BA_ERR_NOT_FOUND);
  int status = 0;
  REQUIRE(ba_store_request(s, "GET", "/v1/models/missing", "", &status, &out) == BA_OK);
  CHECK(status == 404);
  Take(out);
  ba_model_free(m);
  ba_store_close(s);
}

TEST_CASE("BENCHAGG_STORE selects the default root") {
  TempStore t;
  setenv("BENCHAGG_STORE", t.root.c_str(), 1);
  ba_store* s = nullptr;
  REQUIRE(ba_store_open(nullptr, &s) == BA_OK);
  char* out = nullptr;
  REQUIRE(ba_store_root(s, &out) == BA_OK);
  CHECK(std::filesystem::equivalent(Take(out), t.root));
  ba_store_close(s);
  unsetenv("BENCHAGG_STORE");
}

TEST_CASE("bench entry points") {
  char* out = nullptr;
  REQUIRE(ba_bench_generate(R"({"family": "maxcut", "size": 8, "seed": 3})", &out) == BA_OK);
  const Json inst = Json::parse(Take(out));
  REQUIRE(inst.contains("problem"));
  REQUIRE(ba_bench_solve(inst["problem"].dump().c_str(), R"({"solver": "exhaustive"})", &out) == BA_OK);
  const Json ex = Json::parse(Take(out));
  REQUIRE(ba_bench_solve(inst["problem"].dump().c_str(), R"({"solver": "sa", "seed": 1})", &out) == BA_OK);
  CHECK(Json::parse(Take(out))["objective"] == ex["objective"]);

  REQUIRE(ba_bench_run(R"({"family": "factorization", "solver": "exhaustive", "sizes": [15, 21], "seeds": 1})", &out) ==
          BA_OK);
  const Json run = Json::parse(Take(out));
  REQUIRE(run["records"].size() == 2);
  for (const auto& r : run["records"]) CHECK(r["metrics"]["success"] == 1.0);

  REQUIRE(ba_bench_qscore(R"({"solver": "exhaustive", "sizes": [6, 8], "instances": 3})", &out) == BA_OK);
  const Json q = Json::parse(Take(out));
  CHECK(q["result"]["qscore"] == 8);
  CHECK(ba_bench_run(R"({"family": "nope", "sizes": [4]})", &out) == BA_ERR_VALIDATION);
  CHECK(ba_bench_qscore(R"({"threshold": 2})", &out) == BA_ERR_VALIDATION);
}

TEST_CASE("qsim entry points") {
  char* out = nullptr;
  REQUIRE(ba_qsim_ideal(R"({"model": {"model": "xy", "num_qubits": 2}, "initial_state": "10",
                           "t": 0.5, "observables": ["Z0", "Z1"]})",
                        &out) == BA_OK);
  Json doc = Json::parse(Take(out));
  REQUIRE(doc["observables"].size() == 2);
  const double z0 = doc["observables"][0]["value"];
  const double z1 = doc["observables"][1]["value"];
  CHECK(std::abs(z0 + z1) < 1e-9);  // XY conserves total magnetization
  CHECK(std::abs(z0) < 1.0 - 1e-3);
  REQUIRE(ba_qsim_score(doc.dump().c_str(), "sim", &out) == BA_OK);
  const Json s = Json::parse(Take(out));
  CHECK(std::abs(s["G"].get<double>()) < 1e-12);
  CHECK(s["record"]["alternative_id"] == "sim");
  CHECK(ba_qsim_ideal(R"({"model": {"model": "xy", "num_qubits": 0}, "t": 1})", &out) == BA_ERR_VALIDATION);
}
