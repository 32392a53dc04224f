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

#include "mcda/tree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "common/error.hpp"

namespace benchagg::mcda {

const char* RecordAggregationName(RecordAggregation a) {
  switch (a) {
    case RecordAggregation::kMean: return "mean";
    case RecordAggregation::kMax: return "max";
    case RecordAggregation::kMin: return "min";
  }
  return "mean";
}

RecordAggregation ParseRecordAggregation(const std::string& name) {
  if (name == "mean") return RecordAggregation::kMean;
  if (name == "max") return RecordAggregation::kMax;
  if (name == "min") return RecordAggregation::kMin;
  Fail(ErrorCode::kValidation, "unknown record aggregation '" + name + "'");
}

CriteriaTree::CriteriaTree(std::vector<Node> nodes, std::string root, std::string scope_label)
    : nodes_(std::move(nodes)), root_(std::move(root)), scope_label_(std::move(scope_label)) {
  Require(!nodes_.empty(), ErrorCode::kValidation, "model: no nodes");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    Require(!nodes_[i].id.empty(), ErrorCode::kValidation, "model: node with empty id");
    Require(index_.emplace(nodes_[i].id, i).second, ErrorCode::kValidation,
            "model: duplicate node id '" + nodes_[i].id + "'");
  }
  Require(index_.count(root_) != 0, ErrorCode::kValidation,
          "model: root '" + root_ + "' is not a node");

  for (const auto& n : nodes_) {
    if (n.is_criterion()) continue;
    for (const auto& child : n.params().children()) {
      Require(index_.count(child) != 0, ErrorCode::kValidation,
              "model: node '" + n.id + "' references unknown child '" + child + "'");
      Require(child != root_, ErrorCode::kValidation,
              "model: root '" + root_ + "' is listed as a child of '" + n.id + "'");
      auto [it, inserted] = parent_.emplace(child, n.id);
      Require(inserted, ErrorCode::kValidation,
              "model: node '" + child + "' has two parents ('" + it->second + "', '" + n.id +
                  "')");
    }
  }

  // Post-order walk from the root; also detects cycles and unreachable nodes.
  std::set<std::string> visiting, done;
  std::function<void(const std::string&)> visit = [&](const std::string& id) {
    Require(visiting.insert(id).second, ErrorCode::kValidation,
            "model: cycle through node '" + id + "'");
    const Node& n = nodes_[index_.at(id)];
    if (!n.is_criterion()) {
      for (const auto& child : n.params().children()) visit(child);
    }
    visiting.erase(id);
    done.insert(id);
    bottom_up_.push_back(id);
  };
  visit(root_);
  for (const auto& n : nodes_) {
    Require(done.count(n.id) != 0, ErrorCode::kValidation,
            "model: node '" + n.id + "' is not connected to the root");
  }
}

const Node& CriteriaTree::node(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) Fail(ErrorCode::kNotFound, "model: unknown node '" + id + "'");
  return nodes_[it->second];
}

const std::string& CriteriaTree::parent(const std::string& id) const {
  static const std::string kNone;
  node(id);
  auto it = parent_.find(id);
  return it == parent_.end() ? kNone : it->second;
}

std::vector<std::string> CriteriaTree::criteria() const {
  std::vector<std::string> out;
  for (const auto& n : nodes_) {
    if (n.is_criterion()) out.push_back(n.id);
  }
  return out;
}

std::vector<std::string> CriteriaTree::metrics() const {
  std::vector<std::string> out;
  for (const auto& n : nodes_) {
    if (!n.is_criterion()) continue;
    const auto& m = n.criterion().utility.metric_id();
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

CriteriaTree CriteriaTree::WithNode(const Node& replacement) const {
  std::vector<Node> nodes = nodes_;
  auto it = index_.find(replacement.id);
  if (it == index_.end()) {
    Fail(ErrorCode::kNotFound, "model: unknown node '" + replacement.id + "'");
  }
  nodes[it->second] = replacement;
  return CriteriaTree(std::move(nodes), root_, scope_label_);
}

namespace {

double LookupValue(const Node& n, const MeasurementProfile& profile) {
  const auto& metric = n.criterion().utility.metric_id();
  auto it = profile.values.find(metric);
  if (it == profile.values.end()) {
    Fail(ErrorCode::kValidation, "node '" + n.id + "': alternative '" +
                                     profile.alternative_id + "' has no value for metric '" +
                                     metric + "'");
  }
  return it->second;
}

template <typename LeafFn, typename AggFn, typename T>
void BottomUp(const CriteriaTree& tree, std::map<std::string, T>& scores, LeafFn leaf,
              AggFn agg) {
  for (const auto& id : tree.bottom_up()) {
    const Node& n = tree.node(id);
    if (n.is_criterion()) {
      scores[id] = leaf(n);
    } else {
      scores[id] = agg(n);
    }
  }
}

}  // namespace

EvaluationResult evaluate_tree(const CriteriaTree& tree, const MeasurementProfile& profile) {
  EvaluationResult result;
  auto& scores = result.node_scores;
  BottomUp(
      tree, scores,
      [&](const Node& n) {
        const double v = LookupValue(n, profile);
        if (!std::isfinite(v)) {
          Fail(ErrorCode::kValidation, "node '" + n.id + "': non-finite value for alternative '" +
                                           profile.alternative_id + "'");
        }
        return n.criterion().utility(v);
      },
      [&](const Node& n) {
        const auto& p = n.params();
        std::vector<double> inputs(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) inputs[i] = scores.at(p.children()[i]);
        return p.Evaluate(inputs);
      });
  result.root_score = scores.at(tree.root());
  return result;
}

IntervalResult evaluate_interval(const CriteriaTree& tree, const MeasurementProfile& profile) {
  IntervalResult result;
  auto& scores = result.node_scores;
  BottomUp(
      tree, scores,
      [&](const Node& n) {
        const auto& u = n.criterion().utility;
        auto it = profile.intervals.find(u.metric_id());
        Interval raw;
        if (it != profile.intervals.end()) {
          raw = it->second;
          if (!(raw.lo <= raw.hi)) {
            Fail(ErrorCode::kInvalidArgument, "metric '" + u.metric_id() +
                                                  "': interval lower bound exceeds upper bound");
          }
        } else {
          const double v = LookupValue(n, profile);
          raw = {v, v};
        }
        const double a = u(raw.lo), b = u(raw.hi);
        return Interval{std::min(a, b), std::max(a, b)};
      },
      [&](const Node& n) {
        const auto& p = n.params();
        std::vector<double> lo(p.size()), hi(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
          const Interval& c = scores.at(p.children()[i]);
          lo[i] = c.lo;
          hi[i] = c.hi;
        }
        return Interval{p.Evaluate(lo), p.Evaluate(hi)};
      });
  result.root_score = scores.at(tree.root());
  return result;
}

}  // namespace benchagg::mcda
