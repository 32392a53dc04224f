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

#ifndef BENCHAGG_ELICITATION_SIMPLEX_HPP_
#define BENCHAGG_ELICITATION_SIMPLEX_HPP_

#include <vector>

namespace benchagg::elicitation {

// Dense two-phase simplex for the small linear programs of capacity
// elicitation:
//
//   minimize c.x  subject to  A x = b,  x >= 0.
//
// Bland's rule is used for both entering and leaving variables, so the method
// terminates on degenerate problems (which fictitious-alternative systems
// routinely are).
struct LinearProgram {
  std::vector<std::vector<double>> a;  // rows of A
  std::vector<double> b;
  std::vector<double> c;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  double objective = 0.0;
};

LpSolution SolveLinearProgram(const LinearProgram& lp, double tolerance = 1e-11);

}  // namespace benchagg::elicitation

#endif  // BENCHAGG_ELICITATION_SIMPLEX_HPP_
