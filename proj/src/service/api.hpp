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

#ifndef BENCHAGG_SERVICE_API_HPP_
#define BENCHAGG_SERVICE_API_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "common/json_util.hpp"
#include "explanation/explanation.hpp"
#include "mcda/tree.hpp"
#include "service/report.hpp"
#include "service/store.hpp"

namespace benchagg::service {

// Engine entry points shared by the CLI (through the C API) and the HTTP
// routes, so that both render identical documents.

// Profiles built from the store's records.
ProfileSet StoreProfiles(const Store& store, const mcda::CriteriaTree& tree);

// "json" or "markdown".
std::string FormatReport(const mcda::CriteriaTree& tree, const Report& r, const std::string& format);

// The evaluation set for the Ideal reference is every profile covering the
// model's metrics. Throws kNotFound when the alternative is not among them.
explanation::ExplanationReport ExplainAlternative(const mcda::CriteriaTree& tree,
                                                  const std::vector<mcda::MeasurementProfile>& profiles,
                                                  const std::string& alternative,
                                                  explanation::ReferenceKind reference);
std::string FormatExplanation(const mcda::CriteriaTree& tree,
                              const explanation::ExplanationReport& r, const std::string& format);

// Applies node overrides ({"nodes": [node documents]}) to a copy of `tree`.
mcda::CriteriaTree ApplyOverrides(const mcda::CriteriaTree& tree, const Json& nodes);

// Derives parameters from a complete session and, when the session targets
// a model node, writes them into that model. Returns the parameter document.
Json FinalizeSession(Store& store, const StoredSession& s);

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// Status for an ErrorCode: validation 400, not found 404, conflict 409,
// consistency 422, unsupported 501, timeout 504, the rest 500.
int HttpStatusFor(int error_code);

// Pure request -> response mapping over a store; the HTTP server is a thin
// wrapper around Handle. Routes (all JSON unless noted):
//   GET    /v1/health
//   GET    /v1/models                       list
//   GET    /v1/models/{name}                stored document
//   PUT    /v1/models/{name}                create / replace
//   DELETE /v1/models/{name}
//   GET    /v1/models/{name}/describe       text/plain
//   GET    /v1/models/{name}/report?format=json|markdown&reference=worst|ideal
//   POST   /v1/models/{name}/evaluate       {"profiles"?, "reference"?}
//   POST   /v1/models/{name}/explain        {"alternative", "reference"?, "profiles"?, "format"?}
//   POST   /v1/models/{name}/whatif         {"nodes": [...], "profiles"?, "reference"?}
//   GET    /v1/records?alternative=&family=
//   POST   /v1/records                      ingest document
//   POST   /v1/sessions                     {"session", "model"?, "node"?}
//   GET    /v1/sessions/{id}
//   PUT    /v1/sessions/{id}                {"version", "session"}
//   POST   /v1/sessions/{id}/finalize       {"version"}
class ApiRouter {
 public:
  explicit ApiRouter(Store& store) : store_(store) {}

  HttpResponse Handle(const std::string& method, const std::string& target,
                      const std::string& body) const;

 private:
  HttpResponse Route(const std::string& method, const std::vector<std::string>& path,
                     const std::map<std::string, std::string>& query, const std::string& body) const;

  Store& store_;
};

}  // namespace benchagg::service

#endif  // BENCHAGG_SERVICE_API_HPP_
