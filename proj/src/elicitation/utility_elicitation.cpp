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

#include "elicitation/utility_elicitation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "common/error.hpp"
#include "elicitation/value_scale.hpp"

namespace benchagg::elicitation {

namespace {

std::string Num(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

}  // namespace

std::vector<Violation> check_consistency(const UtilitySession& s) {
  std::vector<Violation> out;
  if (s.metric_id.empty()) out.push_back({"missing_metric", "the session names no metric"});
  if (s.elements.size() < 2) {
    out.push_back({"too_few_elements", "at least the Bad and Good elements must be ranked"});
    return out;
  }
  for (double e : s.elements) {
    if (!std::isfinite(e)) out.push_back({"non_finite_element", "element values must be finite"});
  }
  if (s.gaps.size() + 1 != s.elements.size()) {
    std::ostringstream msg;
    msg << "expected " << s.elements.size() - 1 << " intensity answers between consecutive "
        << "elements, got " << s.gaps.size();
    out.push_back({"missing_gap", msg.str()});
  }
  if (s.elements.front() != s.bad) {
    out.push_back({"bad_not_worst", "the Bad element " + Num(s.bad) + " must be ranked worst"});
  }
  const auto good_it = std::find(s.elements.begin(), s.elements.end(), s.good);
  if (good_it == s.elements.end()) {
    out.push_back({"good_missing", "the Good element " + Num(s.good) + " is not ranked"});
  } else if (good_it == s.elements.begin()) {
    out.push_back({"anchors_coincide", "Bad and Good must be distinct elements"});
  }
  bool increasing = true, decreasing = true;
  for (std::size_t i = 1; i < s.elements.size(); ++i) {
    if (s.elements[i] == s.elements[i - 1]) {
      out.push_back({"duplicate_element", "element " + Num(s.elements[i]) + " is ranked twice"});
    }
    increasing = increasing && s.elements[i] > s.elements[i - 1];
    decreasing = decreasing && s.elements[i] < s.elements[i - 1];
  }
  if (!increasing && !decreasing) {
    out.push_back({"non_monotone",
                   "the ranking is neither increasing nor decreasing in the metric; it cannot be "
                   "represented by a monotone utility"});
  }
  for (std::size_t i = 0; i < s.gaps.size() && i + 1 < s.elements.size(); ++i) {
    if (s.gaps[i] == Intensity::kTie) {
      out.push_back({"tie_between_distinct_values",
                     "elements " + Num(s.elements[i]) + " and " + Num(s.elements[i + 1]) +
                         " are ranked as indifferent; distinct metric values need a strict "
                         "preference"});
    }
  }
  return out;
}

mcda::UtilityFunction derive_utility_function(const UtilitySession& s) {
  const auto violations = check_consistency(s);
  if (!violations.empty()) {
    std::vector<std::string> messages;
    for (const auto& v : violations) messages.push_back(v.message);
    throw ConsistencyError("utility session for '" + s.metric_id + "' is inconsistent",
                           std::move(messages));
  }
  const std::size_t good_index = static_cast<std::size_t>(
      std::find(s.elements.begin(), s.elements.end(), s.good) - s.elements.begin());
  const auto utilities = derive_value_scale(std::span<const Intensity>(s.gaps), 0, good_index);
  std::vector<mcda::Breakpoint> breakpoints;
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    breakpoints.push_back({s.elements[i], utilities[i]});
  }
  const auto direction = s.elements[1] > s.elements[0] ? mcda::Direction::kHigherIsBetter
                                                       : mcda::Direction::kLowerIsBetter;
  return mcda::UtilityFunction(s.metric_id, direction, std::move(breakpoints), 0, good_index);
}

}  // namespace benchagg::elicitation
