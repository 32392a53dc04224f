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

#include "elicitation/value_scale.hpp"

#include <cmath>

#include "common/error.hpp"

namespace benchagg::elicitation {

std::vector<double> derive_value_scale(std::span<const double> gaps, std::size_t anchor_zero,
                                       std::size_t anchor_one) {
  const std::size_t count = gaps.size() + 1;
  Require(anchor_zero < count && anchor_one < count, ErrorCode::kInvalidArgument,
          "value scale: anchor index out of range");
  Require(anchor_zero != anchor_one, ErrorCode::kInvalidArgument,
          "value scale: anchors coincide");
  std::vector<double> cumulative(count, 0.0);
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    Require(std::isfinite(gaps[i]) && gaps[i] >= 0.0, ErrorCode::kInvalidArgument,
            "value scale: gaps must be finite and nonnegative");
    cumulative[i + 1] = cumulative[i] + gaps[i];
  }
  const double origin = cumulative[anchor_zero];
  const double span = cumulative[anchor_one] - origin;
  Require(span != 0.0, ErrorCode::kInvalidArgument,
          "value scale: zero total intensity between the anchors");
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = (cumulative[i] - origin) / span;
  // Exact anchors regardless of rounding.
  out[anchor_zero] = 0.0;
  out[anchor_one] = 1.0;
  return out;
}

std::vector<double> derive_value_scale(std::span<const Intensity> gaps, std::size_t anchor_zero,
                                       std::size_t anchor_one) {
  std::vector<double> values;
  values.reserve(gaps.size());
  for (Intensity g : gaps) values.push_back(static_cast<double>(IntensityValue(g)));
  return derive_value_scale(std::span<const double>(values), anchor_zero, anchor_one);
}

}  // namespace benchagg::elicitation
