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

// Command-line front end. Everything goes through the C interface of
// libbenchagg; this file only parses arguments, prompts and prints.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "benchagg/benchagg.h"
#include "json.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

// Thrown after an error has been printed; carries the exit code.
constexpr int kUsageExit = 64;  // EX_USAGE

struct Exit {
  int code;
};

void Check(ba_status s) {
  if (s == BA_OK) return;
  std::cerr << "benchagg: " << ba_status_name(s) << ": " << ba_last_error() << "\n";
  throw Exit{static_cast<int>(s)};
}

[[noreturn]] void Usage(const std::string& msg) {
  std::cerr << "benchagg: " << msg << "\n";
  throw Exit{kUsageExit};
}

struct Text {
  char* p = nullptr;
  ~Text() { ba_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct ModelPtr {
  ba_model* p = nullptr;
  ~ModelPtr() { ba_model_free(p); }
};

struct StorePtr {
  ba_store* p = nullptr;
  ~StorePtr() { ba_store_close(p); }
};

std::string Slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) Usage("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void Emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) Usage("cannot write '" + out_path + "'");
  out << text;
}

std::string g_store_root;  // --store

void OpenStore(StorePtr& s) {
  Check(ba_store_open(g_store_root.empty() ? nullptr : g_store_root.c_str(), &s.p));
}

// A model argument is a file path when such a file exists, else the name of
// a stored model.
void ResolveModel(const std::string& arg, ModelPtr& m) {
  if (fs::is_regular_file(arg)) {
    Check(ba_model_load_file(arg.c_str(), &m.p));
    return;
  }
  StorePtr s;
  OpenStore(s);
  Check(ba_store_get_model(s.p, arg.c_str(), &m.p));
}

const char* Opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

// --- interactive elicitation -------------------------------------------

std::string Ask(const std::string& prompt) {
  std::cerr << prompt << std::flush;
  std::string line;
  if (!std::getline(std::cin, line)) Usage("unexpected end of input");
  const auto b = line.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> Words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

const char* kIntensityHelp = "tie, very_weak, weak, moderate, strong, very_strong, extreme";

Json PromptUtilitySession() {
  Json s{{"schema_version", 1}, {"kind", "utility_session"}};
  s["metric"] = Ask("metric id: ");
  std::vector<double> elements;
  for (const auto& w : Words(Ask("reference values, worst first (Bad level first): "))) {
    try {
      elements.push_back(std::stod(w));
    } catch (const std::exception&) {
      Usage("'" + w + "' is not a number");
    }
  }
  if (elements.size() < 2) Usage("at least two reference values are needed");
  s["elements"] = elements;
  s["bad"] = elements.front();
  const std::string good = Ask("Good level [" + Json(elements.back()).dump() + "]: ");
  s["good"] = good.empty() ? elements.back() : std::stod(good);
  std::cerr << "intensity of preference (" << kIntensityHelp << ")\n";
  Json gaps = Json::array();
  for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
    gaps.push_back(Ask("  " + Json(elements[i]).dump() + " -> " + Json(elements[i + 1]).dump() + ": "));
  }
  s["gaps"] = gaps;
  return s;
}

Json PromptCapacitySession() {
  Json s{{"schema_version", 1}, {"kind", "capacity_session"}};
  s["node"] = Ask("aggregation node id: ");
  const auto children = Words(Ask("children ids: "));
  if (children.size() < 2) Usage("at least two children are needed");
  s["children"] = children;
  std::cerr << "Rank the fictitious alternatives from worst to best, one per line.\n"
               "List the children held at their Good level ('-' for all-Bad, 'all' for\n"
               "all-Good); an empty line ends the ranking.\n";
  Json ranking = Json::array();
  for (;;) {
    const std::string line = Ask("  > ");
    if (line.empty()) break;
    if (line == "-") {
      ranking.push_back(Json::array());
    } else if (line == "all") {
      ranking.push_back(children);
    } else {
      ranking.push_back(Words(line));
    }
  }
  s["ranking"] = ranking;
  std::cerr << "intensity of preference between consecutive alternatives (" << kIntensityHelp << ")\n";
  Json gaps = Json::array();
  for (std::size_t i = 0; i + 1 < ranking.size(); ++i) {
    gaps.push_back(Ask("  " + ranking[i].dump() + " -> " + ranking[i + 1].dump() + ": "));
  }
  s["gaps"] = gaps;
  return s;
}

// Prints violations; returns true when the session is consistent.
bool Feedback(const std::string& session) {
  Text v;
  Check(ba_check_consistency(session.c_str(), &v.p));
  const Json list = Json::parse(v.str());
  for (const auto& x : list) {
    std::cerr << "violation [" << x["code"].get<std::string>() << "]: " << x["message"].get<std::string>()
              << "\n";
  }
  return list.empty();
}

int RunElicit(const std::string& kind, const std::string& session_file, bool interactive,
              const std::string& model_arg, const std::string& node, const std::string& out,
              const std::string& save_session) {
  std::string session;
  if (interactive) {
    session = (kind == "utility" ? PromptUtilitySession() : PromptCapacitySession()).dump(2) + "\n";
    if (!save_session.empty()) Emit(session, save_session);
  } else {
    if (session_file.empty()) Usage("give a session file or --interactive");
    session = Slurp(session_file);
  }
  const Json parsed = Json::parse(session, nullptr, false);
  if (parsed.is_discarded()) Usage("session is not valid JSON");
  const std::string expected = kind + "_session";
  if (parsed.value("kind", "") != expected) Usage("expected a session of kind '" + expected + "'");
  if (!Feedback(session)) return BA_ERR_CONSISTENCY;

  if (!model_arg.empty()) {
    if (node.empty()) Usage("--node is required with --model");
    ModelPtr m;
    ResolveModel(model_arg, m);
    Check(ba_model_apply_session(m.p, node.c_str(), session.c_str()));
    Text doc;
    Check(ba_model_to_json(m.p, &doc.p));
    Emit(doc.str(), out);
    return 0;
  }
  Text result;
  Check(ba_elicit(session.c_str(), &result.p));
  Emit(result.str(), out);
  return 0;
}

std::vector<std::string> SplitCommand(const std::string& s) { return Words(s); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"benchagg: benchmark aggregation, elicitation and scoring"};
  app.require_subcommand(1);
  app.add_option("--store", g_store_root, "Store directory (default: $BENCHAGG_STORE or ./benchagg-store)");
  app.set_version_flag("--version", std::string(ba_version()));

  // model
  auto* model = app.add_subcommand("model", "Validate or show a model");
  model->require_subcommand(1);
  std::string model_file;
  bool show_json = false;
  auto* mvalidate = model->add_subcommand("validate", "Check a model file");
  mvalidate->add_option("file", model_file, "Model document")->required();
  auto* mshow = model->add_subcommand("show", "Describe a model (file or stored name)");
  mshow->add_option("model", model_file, "Model file or stored model name")->required();
  mshow->add_flag("--json", show_json, "Print the canonical document instead");
  std::string put_name;
  auto* mput = model->add_subcommand("put", "Store a model under a name");
  mput->add_option("name", put_name)->required();
  mput->add_option("file", model_file)->required();

  // elicit
  auto* elicit = app.add_subcommand("elicit", "Derive parameters from a session");
  elicit->require_subcommand(1);
  std::string session_file, elicit_model, elicit_node, elicit_out, save_session;
  bool interactive = false;
  std::vector<CLI::App*> elicit_kinds;
  for (const char* kind : {"utility", "capacity"}) {
    auto* sub = elicit->add_subcommand(kind, std::string("Elicit a ") +
                                                 (std::string(kind) == "utility" ? "utility function"
                                                                                 : "2-additive capacity"));
    sub->add_option("session", session_file, "Session document ('-' for stdin)");
    sub->add_flag("-i,--interactive", interactive, "Ask the questions on the terminal");
    sub->add_option("--model", elicit_model, "Write the result into this model (file or stored name)");
    sub->add_option("--node", elicit_node, "Target node in --model");
    sub->add_option("-o,--out", elicit_out, "Output file (default stdout)");
    sub->add_option("--save-session", save_session, "Save the interactive answers as a session file");
    elicit_kinds.push_back(sub);
  }

  // bench
  auto* bench = app.add_subcommand("bench", "Optimization benchmarks");
  bench->require_subcommand(1);
  std::string family, solver = "sa", sizes, out_dir, adapter, alternative, baseline = "exact_gnp";
  std::size_t seeds = 1, sweeps = 1000, restarts = 4, degree = 3, instances = 10;
  std::uint64_t seed = 0;
  double timeout = 60.0, threshold = 0.2;
  bool hard = false;
  auto add_solver = [&](CLI::App* c) {
    c->add_option("--solver", solver, "random | exhaustive | sa | external")->capture_default_str();
    c->add_option("--seed", seed, "Base seed")->capture_default_str();
    c->add_option("--sweeps", sweeps, "Annealing sweeps per restart")->capture_default_str();
    c->add_option("--restarts", restarts, "Annealing restarts")->capture_default_str();
    c->add_option("--adapter", adapter, "External adapter command line");
    c->add_option("--timeout", timeout, "External adapter timeout, seconds")->capture_default_str();
    c->add_option("--alternative", alternative, "Alternative id in the records (default: solver name)");
    c->add_option("--out", out_dir, "Directory for one record document per run");
  };
  auto* brun = bench->add_subcommand("run", "Generate and solve instances");
  brun->add_option("--family", family, "maxcut | matching | hobo | factorization | linear_system")->required();
  brun->add_option("--sizes", sizes, "a..b, a..b/step or a,b,c (N values for factorization)")->required();
  brun->add_option("--seeds", seeds, "Instances per size")->capture_default_str();
  brun->add_option("--degree", degree, "HOBO degree")->capture_default_str();
  brun->add_flag("--hard", hard, "Matching: zigzag stand-in family instead of random bipartite graphs");
  add_solver(brun);
  auto* bq = bench->add_subcommand("qscore", "Q-score of a solver on MaxCut");
  bq->add_option("--sizes", sizes, "Sizes to test (default 10..30/10)");
  bq->add_option("--instances", instances, "Instances per size")->capture_default_str();
  bq->add_option("--threshold", threshold, "Beta threshold")->capture_default_str();
  bq->add_option("--baseline", baseline, "Random-cut mean: exact_gnp | asymptotic")->capture_default_str();
  add_solver(bq);
  std::string problem_file;
  auto* bsolve = bench->add_subcommand("solve", "Solve a problem document");
  bsolve->add_option("problem", problem_file)->required();
  add_solver(bsolve);

  // ingest / score / explain / report / serve
  std::vector<std::string> ingest_paths;
  auto* ingest = app.add_subcommand("ingest", "Append records to the store");
  ingest->add_option("paths", ingest_paths, "Record documents or directories of them ('-' for stdin)")
      ->required();

  std::string model_arg, profiles_file, reference, format = "markdown", out_file, alt_id;
  auto* score = app.add_subcommand("score", "Evaluate alternatives with a model");
  score->add_option("--model", model_arg, "Model file or stored name")->required();
  score->add_option("--profiles", profiles_file, "Profiles document (default: build from store records)");
  score->add_option("--reference", reference, "Add contribution columns: worst | ideal");
  score->add_option("--format", format, "markdown | json")->capture_default_str();
  score->add_option("-o,--out", out_file);

  auto* explain = app.add_subcommand("explain", "Contrastive explanation of one alternative");
  explain->add_option("--model", model_arg, "Model file or stored name")->required();
  explain->add_option("--alternative", alt_id)->required();
  explain->add_option("--reference", reference, "worst | ideal");
  explain->add_option("--profiles", profiles_file, "Profiles document (default: store records)");
  explain->add_option("--format", format, "markdown | json")->capture_default_str();
  explain->add_option("-o,--out", out_file);

  auto* report = app.add_subcommand("report", "Ranked report of a stored model over the stored records");
  report->add_option("--model", model_arg, "Stored model name")->required();
  report->add_option("--reference", reference, "Add contribution columns: worst | ideal");
  report->add_option("--format", format, "markdown | json")->capture_default_str();
  report->add_option("-o,--out", out_file);

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--host", host)->capture_default_str();
  serve->add_option("--port", port, "0 picks a free port")->capture_default_str();

  auto* qsim = app.add_subcommand("qsim", "Quantum simulation reference values");
  qsim->require_subcommand(1);
  std::string qsim_file;
  auto* qideal = qsim->add_subcommand("ideal", "Ideal observable values for a model, state and time");
  qideal->add_option("request", qsim_file)->required();
  qideal->add_option("-o,--out", out_file);
  auto* qscore = qsim->add_subcommand("score", "Infidelity proxy of measured observables");
  qscore->add_option("measured", qsim_file)->required();
  qscore->add_option("--alternative", alt_id, "Device name for the record");
  bool qsim_ingest = false;
  qscore->add_flag("--ingest", qsim_ingest, "Append the resulting record to the store");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  try {
    auto solver_config = [&] {
      Json c{{"solver", solver}, {"seed", seed}, {"sweeps", sweeps}, {"restarts", restarts}, {"timeout", timeout}};
      if (!adapter.empty()) c["adapter"] = SplitCommand(adapter);
      if (!alternative.empty()) c["alternative"] = alternative;
      if (!out_dir.empty()) c["out_dir"] = out_dir;
      return c;
    };

    if (mvalidate->parsed()) {
      ModelPtr m;
      Check(ba_model_load_file(model_file.c_str(), &m.p));
      std::cout << "ok: " << model_file << "\n";
    } else if (mshow->parsed()) {
      ModelPtr m;
      ResolveModel(model_file, m);
      Text t;
      Check(show_json ? ba_model_to_json(m.p, &t.p) : ba_model_describe(m.p, &t.p));
      std::cout << t.str();
    } else if (mput->parsed()) {
      ModelPtr m;
      Check(ba_model_load_file(model_file.c_str(), &m.p));
      StorePtr s;
      OpenStore(s);
      Check(ba_store_put_model(s.p, put_name.c_str(), m.p));
      std::cout << "stored model '" << put_name << "'\n";
    } else if (elicit->parsed()) {
      const std::string kind = elicit_kinds[0]->parsed() ? "utility" : "capacity";
      return RunElicit(kind, session_file, interactive, elicit_model, elicit_node, elicit_out, save_session);
    } else if (brun->parsed()) {
      Json c = solver_config();
      c["family"] = family;
      c["sizes"] = sizes;
      c["seeds"] = seeds;
      c["hobo_degree"] = degree;
      c["hard_matching"] = hard;
      Text t;
      Check(ba_bench_run(c.dump().c_str(), &t.p));
      const Json r = Json::parse(t.str());
      for (const auto& rec : r["records"]) {
        std::cout << rec["instance"].get<std::string>() << " seed=" << rec["seed"].get<std::uint64_t>();
        for (const auto& [k, v] : rec["metrics"].items()) std::cout << " " << k << "=" << v.dump();
        std::cout << "\n";
      }
      if (r.contains("files")) std::cout << r["files"].size() << " record files written to " << out_dir << "\n";
    } else if (bq->parsed()) {
      Json c = solver_config();
      if (!sizes.empty()) c["sizes"] = sizes;
      c["instances"] = instances;
      c["threshold"] = threshold;
      c["baseline"] = baseline;
      Text t;
      Check(ba_bench_qscore(c.dump().c_str(), &t.p));
      const Json r = Json::parse(t.str())["result"];
      for (const auto& s : r["sizes"]) {
        std::printf("n=%-4zu mean cut %10.3f  beta %7.4f  %s\n", s["n"].get<std::size_t>(),
                    s["mean_best_cut"].get<double>(), s["beta"].get<double>(),
                    s["passed"].get<bool>() ? "pass" : "fail");
      }
      std::cout << "Q-score: " << r["qscore"].get<std::size_t>() << "\n";
      if (!r["error"].is_null()) {
        std::cerr << "benchagg: aborted: " << r["error"].get<std::string>() << "\n";
        return 1;
      }
    } else if (bsolve->parsed()) {
      Text t;
      Check(ba_bench_solve(Slurp(problem_file).c_str(), solver_config().dump().c_str(), &t.p));
      std::cout << t.str();
    } else if (ingest->parsed()) {
      StorePtr s;
      OpenStore(s);
      std::vector<std::string> files;
      for (const auto& p : ingest_paths) {
        if (fs::is_directory(p)) {
          std::vector<std::string> inside;
          for (const auto& e : fs::directory_iterator(p)) {
            const auto ext = e.path().extension();
            if (ext == ".json" || ext == ".jsonl") inside.push_back(e.path().string());
          }
          std::sort(inside.begin(), inside.end());
          files.insert(files.end(), inside.begin(), inside.end());
        } else {
          files.push_back(p);
        }
      }
      std::size_t accepted = 0, rejected = 0;
      for (const auto& f : files) {
        Text t;
        const ba_status st = ba_store_ingest(s.p, Slurp(f).c_str(), &t.p);
        if (st != BA_OK) {
          std::cerr << "benchagg: " << f << ": " << ba_last_error() << "\n";
          throw Exit{static_cast<int>(st)};
        }
        const Json r = Json::parse(t.str());
        accepted += r["accepted"].get<std::size_t>();
        for (const auto& x : r["rejected"]) {
          ++rejected;
          std::cerr << f << ": record " << x["index"].get<std::size_t>() << " rejected: "
                    << x["reason"].get<std::string>() << "\n";
        }
      }
      std::cout << "ingested " << accepted << " record(s), rejected " << rejected << "\n";
    } else if (score->parsed()) {
      ModelPtr m;
      ResolveModel(model_arg, m);
      Text t;
      if (!profiles_file.empty()) {
        Check(ba_model_evaluate(m.p, Slurp(profiles_file).c_str(), Opt(reference), format.c_str(), &t.p));
      } else {
        StorePtr s;
        OpenStore(s);
        Check(ba_store_evaluate(s.p, m.p, Opt(reference), format.c_str(), &t.p));
      }
      Emit(t.str(), out_file);
    } else if (explain->parsed()) {
      ModelPtr m;
      ResolveModel(model_arg, m);
      Text t;
      if (!profiles_file.empty()) {
        Check(ba_model_explain(m.p, Slurp(profiles_file).c_str(), alt_id.c_str(), Opt(reference), format.c_str(),
                               &t.p));
      } else {
        StorePtr s;
        OpenStore(s);
        Check(ba_store_explain(s.p, m.p, alt_id.c_str(), Opt(reference), format.c_str(), &t.p));
      }
      Emit(t.str(), out_file);
    } else if (report->parsed()) {
      StorePtr s;
      OpenStore(s);
      Text t;
      Check(ba_store_report(s.p, model_arg.c_str(), Opt(reference), format.c_str(), &t.p));
      Emit(t.str(), out_file);
    } else if (serve->parsed()) {
      StorePtr s;
      OpenStore(s);
      Text root;
      Check(ba_store_root(s.p, &root.p));
      static std::string root_str;
      root_str = root.str();
      Check(ba_serve(
          s.p, host.c_str(), port,
          [](int bound, void* h) {
            std::cout << "serving " << root_str << " on http://" << *static_cast<std::string*>(h) << ":" << bound
                      << "/v1/health" << std::endl;
          },
          &host));
    } else if (qideal->parsed()) {
      Text t;
      Check(ba_qsim_ideal(Slurp(qsim_file).c_str(), &t.p));
      Emit(t.str(), out_file);
    } else if (qscore->parsed()) {
      Text t;
      Check(ba_qsim_score(Slurp(qsim_file).c_str(), Opt(alt_id), &t.p));
      const Json r = Json::parse(t.str());
      std::cout << "G = " << r["G"].dump() << " over " << r["observables"].dump() << " observables";
      if (!r["F"].is_null()) std::cout << ", F = " << r["F"].dump();
      std::cout << "\n";
      if (qsim_ingest) {
        StorePtr s;
        OpenStore(s);
        Text rep;
        Check(ba_store_ingest(s.p, r["record"].dump().c_str(), &rep.p));
        std::cout << rep.str();
      }
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return 0;
}
