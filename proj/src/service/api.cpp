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

#include "service/api.hpp"

#include <cctype>
#include <set>

#include "common/error.hpp"
#include "elicitation/session_io.hpp"
#include "mcda/model_io.hpp"

namespace benchagg::service {
namespace {

std::string PercentDecode(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '+') {
      out += ' ';
    } else if (s[i] == '%' && i + 2 < s.size() && std::isxdigit(static_cast<unsigned char>(s[i + 1])) &&
               std::isxdigit(static_cast<unsigned char>(s[i + 2]))) {
      out += static_cast<char>(std::stoi(s.substr(i + 1, 2), nullptr, 16));
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

HttpResponse JsonResponse(const Json& j, int status = 200) {
  return HttpResponse{status, "application/json", DumpJson(j)};
}

HttpResponse ErrorResponse(int status, const std::string& code, const std::string& message,
                           const Json& violations = nullptr) {
  Json err{{"code", code}, {"message", message}};
  if (!violations.is_null()) err["violations"] = violations;
  return JsonResponse(Json{{"error", std::move(err)}}, status);
}

Json ParseBody(const std::string& body) {
  if (body.find_first_not_of(" \t\r\n") == std::string::npos) return Json::object();
  Json j = ParseJson(body, "request body");
  Require(j.is_object(), ErrorCode::kValidation, "request body: expected a JSON object");
  return j;
}

std::optional<explanation::ReferenceKind> ReferenceFrom(const Json& body,
                                                        const std::map<std::string, std::string>& query) {
  if (body.contains("reference") && !body["reference"].is_null()) {
    return explanation::ParseReferenceKind(AsString(body["reference"], "reference"));
  }
  if (auto it = query.find("reference"); it != query.end()) {
    return explanation::ParseReferenceKind(it->second);
  }
  return std::nullopt;
}

Json SessionResponse(const StoredSession& s) {
  Json j = StoredSessionToJson(s);
  std::vector<elicitation::Violation> v;
  try {
    v = elicitation::check_consistency(elicitation::SessionFromJson(s.session));
  } catch (const Error& e) {
    v.push_back({"malformed_session", e.what()});
  }
  j["feedback"] = elicitation::ViolationsToJson(v);
  j["complete"] = v.empty();
  return j;
}

std::uint64_t RequireVersion(const Json& body) {
  const Json& v = RequireField(body, "version", "request");
  Require(v.is_number_unsigned(), ErrorCode::kValidation, "request.version: expected a positive integer");
  return v.get<std::uint64_t>();
}

}  // namespace

ProfileSet StoreProfiles(const Store& store, const mcda::CriteriaTree& tree) {
  return BuildProfiles(tree, store.Records());
}

std::string FormatReport(const mcda::CriteriaTree& tree, const Report& r, const std::string& format) {
  if (format == "json") return DumpJson(ReportToJson(tree, r));
  if (format == "markdown" || format == "md") return RenderReport(tree, r);
  Fail(ErrorCode::kValidation, "unknown report format '" + format + "' (json, markdown)");
}

explanation::ExplanationReport ExplainAlternative(const mcda::CriteriaTree& tree,
                                                  const std::vector<mcda::MeasurementProfile>& profiles,
                                                  const std::string& alternative,
                                                  explanation::ReferenceKind reference) {
  const auto metrics = tree.metrics();
  std::vector<mcda::MeasurementProfile> complete;
  const mcda::MeasurementProfile* target = nullptr;
  for (const auto& p : profiles) {
    const bool ok = std::all_of(metrics.begin(), metrics.end(),
                                [&](const std::string& m) { return p.values.count(m) > 0; });
    if (!ok) {
      Require(p.alternative_id != alternative, ErrorCode::kValidation,
              "alternative '" + alternative + "' lacks a metric used by the model");
      continue;
    }
    complete.push_back(p);
  }
  for (const auto& p : complete) {
    if (p.alternative_id == alternative) target = &p;
  }
  Require(target != nullptr, ErrorCode::kNotFound, "alternative '" + alternative + "' not found");
  return explanation::hierarchical_explanation(tree, *target, reference, complete);
}

std::string FormatExplanation(const mcda::CriteriaTree& tree,
                              const explanation::ExplanationReport& r, const std::string& format) {
  if (format == "json") return DumpJson(explanation::ExplanationToJson(tree, r));
  if (format == "markdown" || format == "md") return explanation::RenderExplanation(tree, r);
  Fail(ErrorCode::kValidation, "unknown explanation format '" + format + "' (json, markdown)");
}

mcda::CriteriaTree ApplyOverrides(const mcda::CriteriaTree& tree, const Json& nodes) {
  Require(nodes.is_array(), ErrorCode::kValidation, "overrides: 'nodes' must be an array");
  mcda::CriteriaTree out = tree;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const mcda::Node n = mcda::NodeFromJson(nodes[i], "nodes[" + std::to_string(i) + "]");
    Require(seen.insert(n.id).second, ErrorCode::kValidation,
            "overrides: node '" + n.id + "' given twice");
    out = out.WithNode(n);
  }
  return out;
}

Json FinalizeSession(Store& store, const StoredSession& s) {
  const elicitation::Session session = elicitation::SessionFromJson(s.session);
  const auto violations = elicitation::check_consistency(session);
  if (!violations.empty()) {
    std::vector<std::string> text;
    for (const auto& v : violations) text.push_back(v.code + ": " + v.message);
    throw ConsistencyError("session '" + s.id + "' is not consistent", text);
  }
  Json params;
  std::optional<mcda::Node> replacement;
  std::optional<mcda::CriteriaTree> tree;
  if (s.model) tree = store.GetModel(*s.model);
  const std::string node_id = s.node.value_or("");
  if (s.model) Require(!node_id.empty(), ErrorCode::kValidation, "session targets a model but no node");

  if (const auto* u = std::get_if<elicitation::UtilitySession>(&session)) {
    const mcda::UtilityFunction f = elicitation::derive_utility_function(*u);
    params = mcda::UtilityToJson(f);
    if (tree) {
      mcda::Node n = tree->node(node_id);
      Require(n.is_criterion(), ErrorCode::kValidation,
              "node '" + node_id + "' is not a criterion; a utility session cannot finalize into it");
      mcda::Criterion c = n.criterion();
      c.utility = f;
      n.payload = c;
      replacement = n;
    }
  } else {
    const auto& cs = std::get<elicitation::CapacitySession>(session);
    const mcda::ChoquetParams p = elicitation::derive_capacity(cs);
    params = mcda::ParamsToJson(p);
    if (tree) {
      mcda::Node n = tree->node(node_id);
      Require(!n.is_criterion(), ErrorCode::kValidation,
              "node '" + node_id + "' is a criterion; a capacity session cannot finalize into it");
      std::set<std::string> want(n.params().children().begin(), n.params().children().end());
      std::set<std::string> got(p.children().begin(), p.children().end());
      Require(want == got, ErrorCode::kValidation,
              "session children do not match the children of node '" + node_id + "'");
      n.payload = p;
      replacement = n;
    }
  }
  if (tree) store.PutModel(*s.model, tree->WithNode(*replacement));
  return params;
}

int HttpStatusFor(int code) {
  switch (static_cast<ErrorCode>(code)) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kValidation:
    case ErrorCode::kProtocol: return 400;
    case ErrorCode::kNotFound: return 404;
    case ErrorCode::kConflict: return 409;
    case ErrorCode::kConsistency: return 422;
    case ErrorCode::kUnsupported: return 501;
    case ErrorCode::kTimeout: return 504;
    default: return 500;
  }
}

HttpResponse ApiRouter::Handle(const std::string& method, const std::string& target,
                               const std::string& body) const {
  std::string path_part = target;
  std::map<std::string, std::string> query;
  if (const auto q = target.find('?'); q != std::string::npos) {
    path_part = target.substr(0, q);
    std::string rest = target.substr(q + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto amp = rest.find('&', pos);
      const std::string item = rest.substr(pos, amp == std::string::npos ? std::string::npos : amp - pos);
      if (!item.empty()) {
        const auto eq = item.find('=');
        query[PercentDecode(item.substr(0, eq))] =
            eq == std::string::npos ? "" : PercentDecode(item.substr(eq + 1));
      }
      if (amp == std::string::npos) break;
      pos = amp + 1;
    }
  }
  std::vector<std::string> segments;
  std::size_t pos = 0;
  while (pos < path_part.size()) {
    const auto slash = path_part.find('/', pos);
    const std::string seg = path_part.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos);
    if (!seg.empty()) segments.push_back(PercentDecode(seg));
    if (slash == std::string::npos) break;
    pos = slash + 1;
  }
  try {
    return Route(method, segments, query, body);
  } catch (const ConsistencyError& e) {
    Json v = Json::array();
    for (const auto& s : e.violations()) v.push_back(s);
    return ErrorResponse(422, ErrorCodeName(ErrorCode::kConsistency), e.what(), v);
  } catch (const Error& e) {
    return ErrorResponse(HttpStatusFor(static_cast<int>(e.code())), ErrorCodeName(e.code()), e.what());
  } catch (const std::exception& e) {
    return ErrorResponse(500, "internal", e.what());
  }
}

HttpResponse ApiRouter::Route(const std::string& method, const std::vector<std::string>& p,
                              const std::map<std::string, std::string>& query,
                              const std::string& body) const {
  auto not_found = [&] { return ErrorResponse(404, "not_found", "no route for " + method + " /" + [&] {
                                                std::string s;
                                                for (const auto& x : p) s += (s.empty() ? "" : "/") + x;
                                                return s;
                                              }()); };
  if (p.empty() || p[0] != "v1") return not_found();
  const std::size_t n = p.size();

  if (n == 2 && p[1] == "health" && method == "GET") {
    return JsonResponse(Json{{"status", "ok"}, {"store", store_.root()}});
  }

  if (n >= 2 && p[1] == "models") {
    if (n == 2) {
      if (method != "GET") return not_found();
      return JsonResponse(Json{{"models", store_.ModelNames()}});
    }
    const std::string& name = p[2];
    if (n == 3) {
      if (method == "GET") return HttpResponse{200, "application/json", store_.GetModelText(name)};
      if (method == "PUT") {
        const mcda::CriteriaTree tree = mcda::LoadModel(body);
        const bool existed = store_.HasModel(name);
        store_.PutModel(name, tree);
        return JsonResponse(Json{{"model", name}, {"created", !existed}}, existed ? 200 : 201);
      }
      if (method == "DELETE") {
        Require(store_.DeleteModel(name), ErrorCode::kNotFound, "model '" + name + "' not found");
        return JsonResponse(Json{{"model", name}, {"deleted", true}});
      }
      return not_found();
    }
    if (n == 4) {
      const std::string& action = p[3];
      if (action == "describe" && method == "GET") {
        return HttpResponse{200, "text/plain; charset=utf-8", mcda::DescribeModel(store_.GetModel(name))};
      }
      if (action == "report" && method == "GET") {
        const auto tree = store_.GetModel(name);
        const ProfileSet ps = StoreProfiles(store_, tree);
        const auto format = query.count("format") ? query.at("format") : std::string("json");
        const Report r = evaluate_and_report(tree, ps.profiles, {ReferenceFrom(Json::object(), query)}, ps.warnings);
        return HttpResponse{200, format == "json" ? "application/json" : "text/markdown; charset=utf-8",
                            FormatReport(tree, r, format)};
      }
      if ((action == "evaluate" || action == "whatif") && method == "POST") {
        const Json req = ParseBody(body);
        auto tree = store_.GetModel(name);
        if (action == "whatif") tree = ApplyOverrides(tree, req.contains("nodes") ? req["nodes"] : Json::array());
        ProfileSet ps;
        if (req.contains("profiles")) {
          ps.profiles = mcda::ProfilesFromJson(req["profiles"]);
        } else {
          ps = StoreProfiles(store_, tree);
        }
        const Report r = evaluate_and_report(tree, ps.profiles, {ReferenceFrom(req, query)}, ps.warnings);
        return JsonResponse(ReportToJson(tree, r));
      }
      if (action == "explain" && method == "POST") {
        const Json req = ParseBody(body);
        const auto tree = store_.GetModel(name);
        const std::string alt = RequireString(req, "alternative", "request");
        const auto ref = ReferenceFrom(req, query).value_or(explanation::ReferenceKind::kWorst);
        std::vector<mcda::MeasurementProfile> profiles =
            req.contains("profiles") ? mcda::ProfilesFromJson(req["profiles"]) : StoreProfiles(store_, tree).profiles;
        const std::string format = req.contains("format") ? AsString(req["format"], "format") : "json";
        return HttpResponse{200, format == "json" ? "application/json" : "text/markdown; charset=utf-8",
                            FormatExplanation(tree, ExplainAlternative(tree, profiles, alt, ref), format)};
      }
    }
    return not_found();
  }

  if (n == 2 && p[1] == "records") {
    if (method == "GET") {
      Json out = Json::array();
      for (const auto& r : store_.Records()) {
        if (query.count("alternative") && r.alternative_id != query.at("alternative")) continue;
        if (query.count("family") && r.family != query.at("family")) continue;
        out.push_back(RecordToJson(r));
      }
      return JsonResponse(Json{{"records", std::move(out)}});
    }
    if (method == "POST") {
      const IngestReport rep = store_.Ingest(ParseRecordDocument(body));
      return JsonResponse(IngestReportToJson(rep));
    }
    return not_found();
  }

  if (n >= 2 && p[1] == "sessions") {
    if (n == 2 && method == "POST") {
      const Json req = ParseBody(body);
      StoredSession s;
      s.session = RequireField(req, "session", "request");
      elicitation::SessionFromJson(s.session);  // shape check only
      if (req.contains("model") && !req["model"].is_null()) {
        s.model = AsString(req["model"], "request.model");
        store_.GetModel(*s.model);
      }
      if (req.contains("node") && !req["node"].is_null()) s.node = AsString(req["node"], "request.node");
      return JsonResponse(SessionResponse(store_.CreateSession(std::move(s))), 201);
    }
    if (n == 3 && method == "GET") return JsonResponse(SessionResponse(store_.GetSession(p[2])));
    if (n == 3 && method == "PUT") {
      const Json req = ParseBody(body);
      const std::uint64_t version = RequireVersion(req);
      const Json session = RequireField(req, "session", "request");
      elicitation::SessionFromJson(session);
      const StoredSession s = store_.UpdateSession(p[2], version, [&](StoredSession& cur) {
        Require(cur.state == "open", ErrorCode::kConflict, "session '" + cur.id + "' is finalized");
        cur.session = session;
      });
      return JsonResponse(SessionResponse(s));
    }
    if (n == 4 && p[3] == "finalize" && method == "POST") {
      const Json req = ParseBody(body);
      const std::uint64_t version = RequireVersion(req);
      const StoredSession cur = store_.GetSession(p[2]);
      Require(cur.state == "open", ErrorCode::kConflict, "session '" + cur.id + "' is already finalized");
      Require(cur.version == version, ErrorCode::kConflict,
              "session '" + cur.id + "' is at version " + std::to_string(cur.version));
      const Json params = FinalizeSession(store_, cur);
      const StoredSession s = store_.UpdateSession(p[2], version, [&](StoredSession& x) {
        x.state = "finalized";
        x.result = params;
      });
      return JsonResponse(SessionResponse(s));
    }
    return not_found();
  }
  return not_found();
}

}  // namespace benchagg::service
