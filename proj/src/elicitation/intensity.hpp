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

#ifndef BENCHAGG_ELICITATION_INTENSITY_HPP_
#define BENCHAGG_ELICITATION_INTENSITY_HPP_

#include <string>

namespace benchagg::elicitation {

// Strength of preference between two consecutive ranked items. kTie encodes
// indifference (a zero-value gap).
enum class Intensity : int {
  kTie = 0,
  kVeryWeak = 1,
  kWeak = 2,
  kModerate = 3,
  kStrong = 4,
  kVeryStrong = 5,
  kExtreme = 6,
};

inline int IntensityValue(Intensity i) { return static_cast<int>(i); }

Intensity IntensityFromValue(int value);

// snake_case names ("very_weak", ..., "extreme", "tie"); also accepts the
// display forms ("Very weak", "Very strong").
Intensity ParseIntensity(const std::string& name);
const char* IntensityName(Intensity i);

}  // namespace benchagg::elicitation

#endif  // BENCHAGG_ELICITATION_INTENSITY_HPP_
