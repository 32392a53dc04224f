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

#ifndef BENCHAGG_MCDA_CHOQUET_HPP_
#define BENCHAGG_MCDA_CHOQUET_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace benchagg::mcda {

inline constexpr double kSumToOneTolerance = 1e-9;

// Pair coefficients of the 2-additive model. Indices refer to
// ChoquetParams::children() and satisfy first < second.
struct PairTerm {
  std::size_t first = 0;
  std::size_t second = 0;
  double min_weight = 0.0;  // complementarity
  double max_weight = 0.0;  // redundancy

  friend bool operator==(const PairTerm&, const PairTerm&) = default;
};

// Coefficients of a 2-additive Choquet integral:
//
//   F(a) = sum_l w_l a_l + sum_{l<m} (w^min_lm min(a_l, a_m) + w^max_lm max(a_l, a_m))
//
// with every coefficient nonnegative and the total equal to one. Construction
// validates; sums off by more than kSumToOneTolerance are rejected rather than
// renormalized.
class ChoquetParams {
 public:
  ChoquetParams(std::vector<std::string> children, std::vector<double> singleton_weights,
                std::vector<PairTerm> pairs);

  static ChoquetParams WeightedSum(std::vector<std::string> children,
                                   std::vector<double> weights);

  const std::vector<std::string>& children() const { return children_; }
  const std::vector<double>& singleton_weights() const { return singleton_weights_; }
  const std::vector<PairTerm>& pairs() const { return pairs_; }
  std::size_t size() const { return children_.size(); }

  // Index of a child id; throws kNotFound.
  std::size_t IndexOf(const std::string& child) const;

  // Positional evaluation; inputs[i] is the score of children()[i].
  double Evaluate(std::span<const double> inputs) const;

  friend bool operator==(const ChoquetParams&, const ChoquetParams&) = default;

 private:
  std::vector<std::string> children_;
  std::vector<double> singleton_weights_;
  std::vector<PairTerm> pairs_;
};

// Keyed evaluation: `inputs` must cover exactly the children of `p`.
double choquet_2add(const ChoquetParams& p, const std::map<std::string, double>& inputs);

struct PairInteraction {
  std::size_t first = 0;
  std::size_t second = 0;
  double value = 0.0;
};

struct CapacityIndices {
  std::vector<double> importance;            // Shapley importance per child
  std::vector<PairInteraction> interaction;  // w^min - w^max per stored pair
};

CapacityIndices importance_and_interaction(const ChoquetParams& p);

}  // namespace benchagg::mcda

#endif  // BENCHAGG_MCDA_CHOQUET_HPP_
