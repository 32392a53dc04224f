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

#ifndef BENCHAGG_ELICITATION_SESSION_IO_HPP_
#define BENCHAGG_ELICITATION_SESSION_IO_HPP_

#include <variant>
#include <vector>

#include "common/json_util.hpp"
#include "elicitation/capacity_elicitation.hpp"
#include "elicitation/utility_elicitation.hpp"

namespace benchagg::elicitation {

inline constexpr int kSessionSchemaVersion = 1;

using Session = std::variant<UtilitySession, CapacitySession>;

// Session documents are shared by batch CLI elicitation and the HTTP session
// endpoints. Partially answered sessions parse; completeness is reported by
// check_consistency.
Json SessionToJson(const Session& s);
Session SessionFromJson(const Json& j);

std::vector<Violation> check_consistency(const Session& s);
Json ViolationsToJson(const std::vector<Violation>& v);

}  // namespace benchagg::elicitation

#endif  // BENCHAGG_ELICITATION_SESSION_IO_HPP_
