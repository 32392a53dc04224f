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

#include "mcda/model_io.hpp"

#include <iomanip>
#include <sstream>

#include "common/error.hpp"

namespace benchagg::mcda {

Json UtilityToJson(const UtilityFunction& f) {
  Json j;
  j["metric"] = f.metric_id();
  j["direction"] = DirectionName(f.direction());
  Json bps = Json::array();
  for (const auto& b : f.breakpoints()) bps.push_back({{"value", b.value}, {"utility", b.utility}});
  j["breakpoints"] = std::move(bps);
  j["bad_index"] = f.bad_index();
  j["good_index"] = f.good_index();
  return j;
}

UtilityFunction UtilityFromJson(const Json& j, const std::string& path) {
  const std::string metric = RequireString(j, "metric", path);
  const Direction direction = ParseDirection(RequireString(j, "direction", path));
  const Json& bps = RequireField(j, "breakpoints", path);
  if (!bps.is_array()) Fail(ErrorCode::kValidation, path + ".breakpoints: expected an array");
  std::vector<Breakpoint> breakpoints;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const std::string p = path + ".breakpoints[" + std::to_string(i) + "]";
    breakpoints.push_back({RequireNumber(bps[i], "value", p), RequireNumber(bps[i], "utility", p)});
  }
  const auto bad = static_cast<std::size_t>(RequireNumber(j, "bad_index", path));
  const auto good = static_cast<std::size_t>(RequireNumber(j, "good_index", path));
  try {
    return UtilityFunction(metric, direction, std::move(breakpoints), bad, good);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

Json ParamsToJson(const ChoquetParams& p) {
  Json j;
  j["children"] = p.children();
  Json weights = Json::object();
  for (std::size_t i = 0; i < p.size(); ++i) weights[p.children()[i]] = p.singleton_weights()[i];
  j["weights"] = std::move(weights);
  Json pairs = Json::array();
  for (const auto& pr : p.pairs()) {
    pairs.push_back({{"children", {p.children()[pr.first], p.children()[pr.second]}},
                     {"min", pr.min_weight},
                     {"max", pr.max_weight}});
  }
  j["pairs"] = std::move(pairs);
  return j;
}

ChoquetParams ParamsFromJson(const Json& j, const std::string& path) {
  const Json& children_j = RequireField(j, "children", path);
  if (!children_j.is_array()) Fail(ErrorCode::kValidation, path + ".children: expected an array");
  std::vector<std::string> children;
  for (std::size_t i = 0; i < children_j.size(); ++i) {
    children.push_back(AsString(children_j[i], path + ".children[" + std::to_string(i) + "]"));
  }
  const Json& weights_j = RequireField(j, "weights", path);
  if (!weights_j.is_object()) Fail(ErrorCode::kValidation, path + ".weights: expected an object");
  std::vector<double> weights(children.size(), 0.0);
  for (auto it = weights_j.begin(); it != weights_j.end(); ++it) {
    auto pos = std::find(children.begin(), children.end(), it.key());
    if (pos == children.end()) {
      Fail(ErrorCode::kValidation, path + ".weights." + it.key() + ": not a child of this node");
    }
    weights[pos - children.begin()] = AsNumber(it.value(), path + ".weights." + it.key());
  }
  std::vector<PairTerm> pairs;
  if (j.contains("pairs")) {
    const Json& pairs_j = j["pairs"];
    for (std::size_t i = 0; i < pairs_j.size(); ++i) {
      const std::string p = path + ".pairs[" + std::to_string(i) + "]";
      const Json& ids = RequireField(pairs_j[i], "children", p);
      if (!ids.is_array() || ids.size() != 2) {
        Fail(ErrorCode::kValidation, p + ".children: expected two child ids");
      }
      PairTerm term;
      for (int k = 0; k < 2; ++k) {
        const std::string id = AsString(ids[k], p + ".children");
        auto pos = std::find(children.begin(), children.end(), id);
        if (pos == children.end()) {
          Fail(ErrorCode::kValidation, p + ": '" + id + "' is not a child of this node");
        }
        (k == 0 ? term.first : term.second) = static_cast<std::size_t>(pos - children.begin());
      }
      term.min_weight = pairs_j[i].contains("min") ? AsNumber(pairs_j[i]["min"], p + ".min") : 0.0;
      term.max_weight = pairs_j[i].contains("max") ? AsNumber(pairs_j[i]["max"], p + ".max") : 0.0;
      pairs.push_back(term);
    }
  }
  try {
    return ChoquetParams(std::move(children), std::move(weights), std::move(pairs));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

Json NodeToJson(const Node& n) {
  Json j;
  j["id"] = n.id;
  j["label"] = n.label;
  if (n.is_criterion()) {
    j["kind"] = "criterion";
    j["record_aggregation"] = RecordAggregationName(n.criterion().record_aggregation);
    const Json u = UtilityToJson(n.criterion().utility);
    for (const auto& [k, v] : u.items()) j[k] = v;
  } else {
    j["kind"] = "aggregation";
    const Json params = ParamsToJson(n.params());
    for (const auto& [k, v] : params.items()) j[k] = v;
  }
  return j;
}

Node NodeFromJson(const Json& j, const std::string& path) {
  const std::string id = RequireString(j, "id", path);
  const std::string p = path + "(" + id + ")";
  const std::string label = j.contains("label") ? AsString(j["label"], p + ".label") : id;
  const std::string kind = RequireString(j, "kind", p);
  if (kind == "criterion") {
    Criterion c{UtilityFromJson(j, p), RecordAggregation::kMean};
    if (j.contains("record_aggregation")) {
      c.record_aggregation =
          ParseRecordAggregation(AsString(j["record_aggregation"], p + ".record_aggregation"));
    }
    return Node{id, label, std::move(c)};
  }
  if (kind == "aggregation") return Node{id, label, ParamsFromJson(j, p)};
  Fail(ErrorCode::kValidation, p + ".kind: expected 'criterion' or 'aggregation'");
}

Json ModelToJson(const CriteriaTree& tree) {
  Json j;
  j["schema_version"] = kModelSchemaVersion;
  j["kind"] = "benchagg.model";
  j["scope"] = tree.scope_label();
  j["root"] = tree.root();
  Json nodes = Json::array();
  for (const auto& n : tree.nodes()) nodes.push_back(NodeToJson(n));
  j["nodes"] = std::move(nodes);
  return j;
}

CriteriaTree ModelFromJson(const Json& j) {
  const std::string path = "model";
  const Json& version = RequireField(j, "schema_version", path);
  if (!version.is_number_integer() || version.get<int>() != kModelSchemaVersion) {
    Fail(ErrorCode::kValidation, "model.schema_version: unsupported version (expected " +
                                     std::to_string(kModelSchemaVersion) + ")");
  }
  if (j.contains("kind") && j["kind"] != "benchagg.model") {
    Fail(ErrorCode::kValidation, "model.kind: expected 'benchagg.model'");
  }
  const Json& nodes_j = RequireField(j, "nodes", path);
  if (!nodes_j.is_array()) Fail(ErrorCode::kValidation, "model.nodes: expected an array");
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < nodes_j.size(); ++i) {
    nodes.push_back(NodeFromJson(nodes_j[i], "model.nodes[" + std::to_string(i) + "]"));
  }
  const std::string scope = j.contains("scope") ? AsString(j["scope"], "model.scope") : "";
  return CriteriaTree(std::move(nodes), RequireString(j, "root", path), scope);
}

CriteriaTree LoadModel(std::string_view text) { return ModelFromJson(ParseJson(text, "model")); }

std::string SaveModel(const CriteriaTree& tree) { return DumpJson(ModelToJson(tree)); }

Json ProfileToJson(const MeasurementProfile& p) {
  Json j;
  j["alternative"] = p.alternative_id;
  Json values = Json::object();
  for (const auto& [k, v] : p.values) values[k] = v;
  j["values"] = std::move(values);
  if (!p.intervals.empty()) {
    Json iv = Json::object();
    for (const auto& [k, v] : p.intervals) iv[k] = {v.lo, v.hi};
    j["intervals"] = std::move(iv);
  }
  return j;
}

MeasurementProfile ProfileFromJson(const Json& j, const std::string& path) {
  MeasurementProfile p;
  p.alternative_id = RequireString(j, "alternative", path);
  if (j.contains("values")) {
    const Json& values = j["values"];
    if (!values.is_object()) Fail(ErrorCode::kValidation, path + ".values: expected an object");
    for (auto it = values.begin(); it != values.end(); ++it) {
      p.values[it.key()] = AsNumber(it.value(), path + ".values." + it.key());
    }
  }
  if (j.contains("intervals")) {
    const Json& iv = j["intervals"];
    if (!iv.is_object()) Fail(ErrorCode::kValidation, path + ".intervals: expected an object");
    for (auto it = iv.begin(); it != iv.end(); ++it) {
      const std::string p2 = path + ".intervals." + it.key();
      if (!it.value().is_array() || it.value().size() != 2) {
        Fail(ErrorCode::kValidation, p2 + ": expected [lo, hi]");
      }
      const Interval in{AsNumber(it.value()[0], p2), AsNumber(it.value()[1], p2)};
      if (in.lo > in.hi) Fail(ErrorCode::kValidation, p2 + ": lo > hi");
      p.intervals[it.key()] = in;
    }
  }
  return p;
}

std::vector<MeasurementProfile> ProfilesFromJson(const Json& j) {
  const Json* list = &j;
  if (j.is_object()) list = &RequireField(j, "alternatives", "profiles");
  if (!list->is_array()) Fail(ErrorCode::kValidation, "profiles: expected an array");
  std::vector<MeasurementProfile> out;
  for (std::size_t i = 0; i < list->size(); ++i) {
    out.push_back(ProfileFromJson((*list)[i], "alternatives[" + std::to_string(i) + "]"));
  }
  return out;
}

Json EvaluationToJson(const CriteriaTree& tree, const EvaluationResult& r) {
  Json j;
  j["root_score"] = r.root_score;
  Json nodes = Json::object();
  for (const auto& n : tree.nodes()) nodes[n.id] = r.node_scores.at(n.id);
  j["node_scores"] = std::move(nodes);
  return j;
}

Json IntervalEvaluationToJson(const CriteriaTree& tree, const IntervalResult& r) {
  Json j;
  j["root_score"] = {r.root_score.lo, r.root_score.hi};
  Json nodes = Json::object();
  for (const auto& n : tree.nodes()) {
    const Interval& in = r.node_scores.at(n.id);
    nodes[n.id] = {in.lo, in.hi};
  }
  j["node_scores"] = std::move(nodes);
  return j;
}

std::string DescribeModel(const CriteriaTree& tree) {
  std::ostringstream out;
  out << std::setprecision(4);
  out << "scope: " << (tree.scope_label().empty() ? "(unspecified)" : tree.scope_label()) << "\n";
  auto print = [&](auto&& self, const std::string& id, int depth) -> void {
    const Node& n = tree.node(id);
    out << std::string(depth * 2, ' ');
    if (n.is_criterion()) {
      const auto& u = n.criterion().utility;
      out << "[C] " << n.id << " \"" << n.label << "\" metric=" << u.metric_id() << " ("
          << DirectionName(u.direction()) << ", Bad=" << u.bad_value()
          << ", Good=" << u.good_value() << ")\n";
      return;
    }
    const auto& p = n.params();
    const auto idx = importance_and_interaction(p);
    out << "[A] " << n.id << " \"" << n.label << "\"\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
      out << std::string(depth * 2 + 4, ' ') << "importance(" << p.children()[i]
          << ") = " << idx.importance[i] << "\n";
    }
    for (const auto& in : idx.interaction) {
      out << std::string(depth * 2 + 4, ' ') << "interaction(" << p.children()[in.first] << ", "
          << p.children()[in.second] << ") = " << in.value << "\n";
    }
    for (const auto& c : p.children()) self(self, c, depth + 1);
  };
  print(print, tree.root(), 0);
  return out.str();
}

}  // namespace benchagg::mcda
