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

#ifndef BENCHAGG_ELICITATION_VALUE_SCALE_HPP_
#define BENCHAGG_ELICITATION_VALUE_SCALE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "elicitation/intensity.hpp"

namespace benchagg::elicitation {

// Interval-scale values for a preference-ordered list of items, given the
// intensity of preference between consecutive items. Values are the
// cumulative intensity sums, rescaled by the unique affine map sending item
// `anchor_zero` to 0 and item `anchor_one` to 1. Returns one value per item
// (gaps.size() + 1 items).
std::vector<double> derive_value_scale(std::span<const Intensity> gaps, std::size_t anchor_zero,
                                       std::size_t anchor_one);

// Same construction over raw gap magnitudes.
std::vector<double> derive_value_scale(std::span<const double> gaps, std::size_t anchor_zero,
                                       std::size_t anchor_one);

}  // namespace benchagg::elicitation

#endif  // BENCHAGG_ELICITATION_VALUE_SCALE_HPP_
