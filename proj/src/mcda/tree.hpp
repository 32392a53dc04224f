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

#ifndef BENCHAGG_MCDA_TREE_HPP_
#define BENCHAGG_MCDA_TREE_HPP_

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "mcda/choquet.hpp"
#include "mcda/utility.hpp"

namespace benchagg::mcda {

// How repeated benchmark records of one metric fold into a single profile
// value (declared per criterion in the model file).
enum class RecordAggregation { kMean, kMax, kMin };

const char* RecordAggregationName(RecordAggregation a);
RecordAggregation ParseRecordAggregation(const std::string& name);

struct Criterion {
  UtilityFunction utility;
  RecordAggregation record_aggregation = RecordAggregation::kMean;

  friend bool operator==(const Criterion&, const Criterion&) = default;
};

struct Node {
  std::string id;
  std::string label;
  std::variant<Criterion, ChoquetParams> payload;

  bool is_criterion() const { return std::holds_alternative<Criterion>(payload); }
  const Criterion& criterion() const { return std::get<Criterion>(payload); }
  const ChoquetParams& params() const { return std::get<ChoquetParams>(payload); }

  friend bool operator==(const Node&, const Node&) = default;
};

// Hierarchical model: criterion leaves feed nested 2-additive Choquet nodes up
// to a single root. Immutable once built; construction validates the tree
// shape.
class CriteriaTree {
 public:
  CriteriaTree(std::vector<Node> nodes, std::string root, std::string scope_label);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::string& root() const { return root_; }
  const std::string& scope_label() const { return scope_label_; }

  const Node& node(const std::string& id) const;
  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  // Parent id; empty for the root.
  const std::string& parent(const std::string& id) const;
  // Node ids in children-before-parent order, root last.
  const std::vector<std::string>& bottom_up() const { return bottom_up_; }
  std::vector<std::string> criteria() const;
  // Distinct metric ids referenced by criteria, in node order.
  std::vector<std::string> metrics() const;

  // Copy with one node's payload replaced (what-if and elicitation results).
  CriteriaTree WithNode(const Node& replacement) const;

  friend bool operator==(const CriteriaTree& a, const CriteriaTree& b) {
    return a.nodes_ == b.nodes_ && a.root_ == b.root_ && a.scope_label_ == b.scope_label_;
  }

 private:
  std::vector<Node> nodes_;
  std::string root_;
  std::string scope_label_;
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_map<std::string, std::string> parent_;
  std::vector<std::string> bottom_up_;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct MeasurementProfile {
  std::string alternative_id;
  std::map<std::string, double> values;       // metric id -> raw value
  std::map<std::string, Interval> intervals;  // metric id -> [lo, hi]
};

struct EvaluationResult {
  std::map<std::string, double> node_scores;
  double root_score = 0.0;
};

struct IntervalResult {
  std::map<std::string, Interval> node_scores;
  Interval root_score;
};

EvaluationResult evaluate_tree(const CriteriaTree& tree, const MeasurementProfile& profile);

// Bounds per node for the box of profiles described by `profile.intervals`
// (metrics without an interval use their point value). Utilities are
// monotone per metric and the Choquet integral is monotone in every input, so
// the bounds are attained at the box corners selected per leaf.
IntervalResult evaluate_interval(const CriteriaTree& tree, const MeasurementProfile& profile);

}  // namespace benchagg::mcda

#endif  // BENCHAGG_MCDA_TREE_HPP_
