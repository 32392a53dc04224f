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

#include "elicitation/session_io.hpp"

#include "common/error.hpp"

namespace benchagg::elicitation {

namespace {

Json GapsToJson(const std::vector<Intensity>& gaps) {
  Json out = Json::array();
  for (auto g : gaps) out.push_back(IntensityName(g));
  return out;
}

std::vector<Intensity> GapsFromJson(const Json& j, const std::string& path) {
  if (!j.is_array()) Fail(ErrorCode::kValidation, path + ": expected an array");
  std::vector<Intensity> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (j[i].is_number_integer()) {
      out.push_back(IntensityFromValue(j[i].get<int>()));
    } else {
      try {
        out.push_back(ParseIntensity(AsString(j[i], p)));
      } catch (const Error& e) {
        throw Error(ErrorCode::kValidation, p + ": " + e.what());
      }
    }
  }
  return out;
}

}  // namespace

Json SessionToJson(const Session& s) {
  Json j;
  j["schema_version"] = kSessionSchemaVersion;
  if (const auto* u = std::get_if<UtilitySession>(&s)) {
    j["kind"] = "utility_session";
    j["metric"] = u->metric_id;
    j["elements"] = u->elements;
    j["gaps"] = GapsToJson(u->gaps);
    j["bad"] = u->bad;
    j["good"] = u->good;
  } else {
    const auto& c = std::get<CapacitySession>(s);
    j["kind"] = "capacity_session";
    j["node"] = c.node_id;
    j["children"] = c.children;
    j["ranking"] = c.ranking;
    j["gaps"] = GapsToJson(c.gaps);
  }
  return j;
}

Session SessionFromJson(const Json& j) {
  const std::string path = "session";
  if (j.contains("schema_version") &&
      (!j["schema_version"].is_number_integer() || j["schema_version"] != kSessionSchemaVersion)) {
    Fail(ErrorCode::kValidation, "session.schema_version: unsupported version");
  }
  const std::string kind = RequireString(j, "kind", path);
  const std::vector<Intensity> gaps =
      j.contains("gaps") ? GapsFromJson(j["gaps"], path + ".gaps") : std::vector<Intensity>{};
  if (kind == "utility_session") {
    UtilitySession u;
    u.metric_id = RequireString(j, "metric", path);
    const Json& elements = RequireField(j, "elements", path);
    if (!elements.is_array()) Fail(ErrorCode::kValidation, "session.elements: expected an array");
    for (std::size_t i = 0; i < elements.size(); ++i) {
      u.elements.push_back(AsNumber(elements[i], "session.elements[" + std::to_string(i) + "]"));
    }
    u.gaps = gaps;
    u.bad = j.contains("bad") ? AsNumber(j["bad"], "session.bad")
                              : (u.elements.empty() ? 0.0 : u.elements.front());
    u.good = RequireNumber(j, "good", path);
    return u;
  }
  if (kind == "capacity_session") {
    CapacitySession c;
    c.node_id = RequireString(j, "node", path);
    const Json& children = RequireField(j, "children", path);
    if (!children.is_array()) Fail(ErrorCode::kValidation, "session.children: expected an array");
    for (std::size_t i = 0; i < children.size(); ++i) {
      c.children.push_back(AsString(children[i], "session.children[" + std::to_string(i) + "]"));
    }
    const Json& ranking = j.contains("ranking") ? j["ranking"] : Json::array();
    if (!ranking.is_array()) Fail(ErrorCode::kValidation, "session.ranking: expected an array");
    for (std::size_t k = 0; k < ranking.size(); ++k) {
      const std::string p = "session.ranking[" + std::to_string(k) + "]";
      if (!ranking[k].is_array()) Fail(ErrorCode::kValidation, p + ": expected an array of ids");
      std::vector<std::string> good;
      for (const auto& id : ranking[k]) good.push_back(AsString(id, p));
      c.ranking.push_back(std::move(good));
    }
    c.gaps = gaps;
    return c;
  }
  Fail(ErrorCode::kValidation,
       "session.kind: expected 'utility_session' or 'capacity_session', got '" + kind + "'");
}

std::vector<Violation> check_consistency(const Session& s) {
  return std::visit([](const auto& v) { return check_consistency(v); }, s);
}

Json ViolationsToJson(const std::vector<Violation>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back({{"code", x.code}, {"message", x.message}});
  return out;
}

}  // namespace benchagg::elicitation
