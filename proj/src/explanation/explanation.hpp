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

#ifndef BENCHAGG_EXPLANATION_EXPLANATION_HPP_
#define BENCHAGG_EXPLANATION_EXPLANATION_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "common/json_util.hpp"
#include "mcda/tree.hpp"

namespace benchagg::explanation {

enum class ReferenceKind { kWorst, kIdeal };

const char* ReferenceKindName(ReferenceKind k);
ReferenceKind ParseReferenceKind(const std::string& name);

struct ReferenceProfile {
  ReferenceKind kind = ReferenceKind::kWorst;
  std::map<std::string, double> values;  // metric id -> raw value
};

// Worst: the Bad anchor of every metric. Ideal: the preference-wise best value
// of every metric over `evaluation_set` (which must be nonempty).
ReferenceProfile reference_profile(ReferenceKind kind, const mcda::CriteriaTree& tree,
                                   const std::vector<mcda::MeasurementProfile>& evaluation_set);

struct ExplanationReport {
  std::string alternative_id;
  ReferenceKind reference = ReferenceKind::kWorst;
  ReferenceProfile reference_profile;
  double alternative_score = 0.0;
  double reference_score = 0.0;
  std::map<std::string, double> contribution;
  // Share of the root contribution in percent; absent when the alternative
  // and the reference score the same.
  std::optional<std::map<std::string, double>> percentage;
};

// Contrastive decomposition of score(alternative) - score(reference). The
// root difference is split among the root's children by Shapley values; each
// node's share is then split among its own children in proportion to their
// Shapley values within that node.
ExplanationReport hierarchical_explanation(const mcda::CriteriaTree& tree,
                                           const mcda::MeasurementProfile& alternative,
                                           const ReferenceProfile& reference);

ExplanationReport hierarchical_explanation(
    const mcda::CriteriaTree& tree, const mcda::MeasurementProfile& alternative,
    ReferenceKind kind, const std::vector<mcda::MeasurementProfile>& evaluation_set);

Json ExplanationToJson(const mcda::CriteriaTree& tree, const ExplanationReport& r);
std::string RenderExplanation(const mcda::CriteriaTree& tree, const ExplanationReport& r);

}  // namespace benchagg::explanation

#endif  // BENCHAGG_EXPLANATION_EXPLANATION_HPP_
