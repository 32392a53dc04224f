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

#ifndef BENCHAGG_EXPLANATION_SHAPLEY_HPP_
#define BENCHAGG_EXPLANATION_SHAPLEY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "mcda/choquet.hpp"

namespace benchagg::explanation {

inline constexpr std::size_t kMaxExactShapleyChildren = 12;

// Exact Shapley values of the contrastive game
//
//   v(S) = F(x on S, r elsewhere) - F(r)
//
// by enumeration of all coalitions. The values sum to F(x) - F(r).
std::vector<double> shapley_contributions(const mcda::ChoquetParams& params,
                                          std::span<const double> x, std::span<const double> r);

}  // namespace benchagg::explanation

#endif  // BENCHAGG_EXPLANATION_SHAPLEY_HPP_
