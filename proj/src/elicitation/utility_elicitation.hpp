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

#ifndef BENCHAGG_ELICITATION_UTILITY_ELICITATION_HPP_
#define BENCHAGG_ELICITATION_UTILITY_ELICITATION_HPP_

#include <string>
#include <vector>

#include "elicitation/intensity.hpp"
#include "mcda/utility.hpp"

namespace benchagg::elicitation {

struct Violation {
  std::string code;     // machine-readable kind, e.g. "missing_gap"
  std::string message;  // text fed back to the decision maker
};

// Answers for one metric: elements ranked from worst to best (the Bad element
// first) and the intensity of preference between consecutive elements.
struct UtilitySession {
  std::string metric_id;
  std::vector<double> elements;
  std::vector<Intensity> gaps;
  double bad = 0.0;
  double good = 0.0;
};

std::vector<Violation> check_consistency(const UtilitySession& s);

// Breakpoints from the interval scale anchored Bad -> 0, Good -> 1. The
// direction is HigherIsBetter when the ranking increases in magnitude and
// LowerIsBetter when it decreases. Throws ConsistencyError listing violations.
mcda::UtilityFunction derive_utility_function(const UtilitySession& s);

}  // namespace benchagg::elicitation

#endif  // BENCHAGG_ELICITATION_UTILITY_ELICITATION_HPP_
