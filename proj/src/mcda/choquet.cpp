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

#include "mcda/choquet.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "common/error.hpp"

namespace benchagg::mcda {

ChoquetParams::ChoquetParams(std::vector<std::string> children,
                             std::vector<double> singleton_weights,
                             std::vector<PairTerm> pairs)
    : children_(std::move(children)),
      singleton_weights_(std::move(singleton_weights)),
      pairs_(std::move(pairs)) {
  Require(!children_.empty(), ErrorCode::kValidation, "choquet params: no children");
  Require(singleton_weights_.size() == children_.size(), ErrorCode::kValidation,
          "choquet params: one singleton weight per child is required");
  std::set<std::string> seen;
  for (const auto& c : children_) {
    Require(!c.empty(), ErrorCode::kValidation, "choquet params: empty child id");
    Require(seen.insert(c).second, ErrorCode::kValidation,
            "choquet params: duplicate child '" + c + "'");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < children_.size(); ++i) {
    const double w = singleton_weights_[i];
    Require(std::isfinite(w) && w >= 0.0, ErrorCode::kValidation,
            "choquet params: weight of '" + children_[i] + "' must be finite and >= 0");
    total += w;
  }
  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;
  for (auto& p : pairs_) {
    Require(p.first < children_.size() && p.second < children_.size(),
            ErrorCode::kValidation, "choquet params: pair index out of range");
    Require(p.first != p.second, ErrorCode::kValidation,
            "choquet params: pair must reference two distinct children");
    if (p.first > p.second) std::swap(p.first, p.second);
    Require(seen_pairs.emplace(p.first, p.second).second, ErrorCode::kValidation,
            "choquet params: duplicate pair {" + children_[p.first] + ", " +
                children_[p.second] + "}");
    Require(std::isfinite(p.min_weight) && p.min_weight >= 0.0 &&
                std::isfinite(p.max_weight) && p.max_weight >= 0.0,
            ErrorCode::kValidation, "choquet params: pair weights must be finite and >= 0");
    total += p.min_weight + p.max_weight;
  }
  std::sort(pairs_.begin(), pairs_.end(), [](const PairTerm& a, const PairTerm& b) {
    return std::tie(a.first, a.second) < std::tie(b.first, b.second);
  });
  if (std::abs(total - 1.0) > kSumToOneTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "choquet params: coefficients sum to " << total << ", expected 1";
    Fail(ErrorCode::kValidation, msg.str());
  }
}

ChoquetParams ChoquetParams::WeightedSum(std::vector<std::string> children,
                                         std::vector<double> weights) {
  return ChoquetParams(std::move(children), std::move(weights), {});
}

std::size_t ChoquetParams::IndexOf(const std::string& child) const {
  auto it = std::find(children_.begin(), children_.end(), child);
  if (it == children_.end()) Fail(ErrorCode::kNotFound, "unknown child '" + child + "'");
  return static_cast<std::size_t>(it - children_.begin());
}

double ChoquetParams::Evaluate(std::span<const double> inputs) const {
  Require(inputs.size() == children_.size(), ErrorCode::kInvalidArgument,
          "choquet: expected one input per child");
  double sum = 0.0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Require(inputs[i] >= 0.0, ErrorCode::kInvalidArgument,
            "choquet: negative input for '" + children_[i] + "'");
    sum += singleton_weights_[i] * inputs[i];
  }
  for (const auto& p : pairs_) {
    const double a = inputs[p.first], b = inputs[p.second];
    sum += p.min_weight * std::min(a, b) + p.max_weight * std::max(a, b);
  }
  return sum;
}

double choquet_2add(const ChoquetParams& p, const std::map<std::string, double>& inputs) {
  std::vector<double> positional(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto it = inputs.find(p.children()[i]);
    Require(it != inputs.end(), ErrorCode::kInvalidArgument,
            "choquet: missing input for child '" + p.children()[i] + "'");
    positional[i] = it->second;
  }
  for (const auto& [id, value] : inputs) {
    Require(std::find(p.children().begin(), p.children().end(), id) != p.children().end(),
            ErrorCode::kInvalidArgument, "choquet: unexpected input '" + id + "'");
  }
  return p.Evaluate(positional);
}

CapacityIndices importance_and_interaction(const ChoquetParams& p) {
  CapacityIndices out;
  out.importance = p.singleton_weights();
  for (const auto& pair : p.pairs()) {
    const double half = 0.5 * (pair.min_weight + pair.max_weight);
    out.importance[pair.first] += half;
    out.importance[pair.second] += half;
    out.interaction.push_back({pair.first, pair.second, pair.min_weight - pair.max_weight});
  }
  return out;
}

}  // namespace benchagg::mcda
