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

#include "explanation/explanation.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "common/error.hpp"
#include "explanation/shapley.hpp"

namespace benchagg::explanation {

using mcda::CriteriaTree;
using mcda::MeasurementProfile;
using mcda::Node;

const char* ReferenceKindName(ReferenceKind k) {
  return k == ReferenceKind::kWorst ? "worst" : "ideal";
}

ReferenceKind ParseReferenceKind(const std::string& name) {
  if (name == "worst") return ReferenceKind::kWorst;
  if (name == "ideal") return ReferenceKind::kIdeal;
  Fail(ErrorCode::kValidation, "unknown reference kind '" + name + "' (expected worst|ideal)");
}

ReferenceProfile reference_profile(ReferenceKind kind, const CriteriaTree& tree,
                                   const std::vector<MeasurementProfile>& evaluation_set) {
  ReferenceProfile out;
  out.kind = kind;
  if (kind == ReferenceKind::kIdeal) {
    Require(!evaluation_set.empty(), ErrorCode::kInvalidArgument,
            "ideal reference: the evaluation set is empty");
  }
  for (const auto& id : tree.criteria()) {
    const auto& u = tree.node(id).criterion().utility;
    if (out.values.count(u.metric_id())) continue;
    if (kind == ReferenceKind::kWorst) {
      out.values[u.metric_id()] = u.bad_value();
      continue;
    }
    bool have = false;
    double best = 0.0;
    for (const auto& p : evaluation_set) {
      auto it = p.values.find(u.metric_id());
      if (it == p.values.end()) {
        Fail(ErrorCode::kValidation, "ideal reference: alternative '" + p.alternative_id +
                                         "' has no value for metric '" + u.metric_id() + "'");
      }
      if (!have || u.Prefers(it->second, best)) best = it->second;
      have = true;
    }
    out.values[u.metric_id()] = best;
  }
  return out;
}

ExplanationReport hierarchical_explanation(const CriteriaTree& tree,
                                           const MeasurementProfile& alternative,
                                           const ReferenceProfile& reference) {
  MeasurementProfile ref;
  ref.alternative_id = std::string("reference:") + ReferenceKindName(reference.kind);
  ref.values = reference.values;
  const auto x = mcda::evaluate_tree(tree, alternative);
  const auto r = mcda::evaluate_tree(tree, ref);

  ExplanationReport report;
  report.alternative_id = alternative.alternative_id;
  report.reference = reference.kind;
  report.reference_profile = reference;
  report.alternative_score = x.root_score;
  report.reference_score = r.root_score;
  auto& contribution = report.contribution;
  contribution[tree.root()] = x.root_score - r.root_score;

  const auto& order = tree.bottom_up();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Node& n = tree.node(*it);
    if (n.is_criterion()) continue;
    const auto& p = n.params();
    std::vector<double> xs(p.size()), rs(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      xs[i] = x.node_scores.at(p.children()[i]);
      rs[i] = r.node_scores.at(p.children()[i]);
    }
    const auto phi = shapley_contributions(p, xs, rs);
    const double local = x.node_scores.at(n.id) - r.node_scores.at(n.id);
    const double share = contribution.at(n.id);
    for (std::size_t i = 0; i < p.size(); ++i) {
      contribution[p.children()[i]] =
          std::abs(local) > 1e-12 ? share * phi[i] / local : share / static_cast<double>(p.size());
    }
  }

  const double total = contribution.at(tree.root());
  if (std::abs(total) > 1e-12) {
    std::map<std::string, double> pct;
    for (const auto& [id, c] : contribution) pct[id] = 100.0 * c / total;
    report.percentage = std::move(pct);
  }
  return report;
}

ExplanationReport hierarchical_explanation(const CriteriaTree& tree,
                                           const MeasurementProfile& alternative,
                                           ReferenceKind kind,
                                           const std::vector<MeasurementProfile>& evaluation_set) {
  return hierarchical_explanation(tree, alternative,
                                  reference_profile(kind, tree, evaluation_set));
}

Json ExplanationToJson(const CriteriaTree& tree, const ExplanationReport& r) {
  Json j;
  j["alternative"] = r.alternative_id;
  j["reference"] = ReferenceKindName(r.reference);
  Json ref = Json::object();
  for (const auto& [k, v] : r.reference_profile.values) ref[k] = v;
  j["reference_values"] = std::move(ref);
  j["alternative_score"] = r.alternative_score;
  j["reference_score"] = r.reference_score;
  Json nodes = Json::array();
  for (const auto& n : tree.nodes()) {
    Json e;
    e["node"] = n.id;
    e["parent"] = tree.parent(n.id);
    e["contribution"] = r.contribution.at(n.id);
    if (r.percentage) {
      e["percentage"] = r.percentage->at(n.id);
    } else {
      e["percentage"] = nullptr;
    }
    nodes.push_back(std::move(e));
  }
  j["nodes"] = std::move(nodes);
  return j;
}

std::string RenderExplanation(const CriteriaTree& tree, const ExplanationReport& r) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  out << "Explanation of '" << r.alternative_id << "' against the "
      << ReferenceKindName(r.reference) << " reference\n";
  out << "score " << r.alternative_score << " vs reference " << r.reference_score << "\n\n";
  out << "| node | contribution | share |\n|---|---:|---:|\n";
  auto walk = [&](auto&& self, const std::string& id, int depth) -> void {
    const Node& n = tree.node(id);
    out << "| " << std::string(depth * 2, ' ') << n.label << " | " << r.contribution.at(id)
        << " | ";
    if (r.percentage) {
      out << std::setprecision(1) << r.percentage->at(id) << "%" << std::setprecision(4);
    } else {
      out << "n/a";
    }
    out << " |\n";
    if (!n.is_criterion()) {
      for (const auto& c : n.params().children()) self(self, c, depth + 1);
    }
  };
  walk(walk, tree.root(), 0);
  return out.str();
}

}  // namespace benchagg::explanation
