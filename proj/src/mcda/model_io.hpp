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

#ifndef BENCHAGG_MCDA_MODEL_IO_HPP_
#define BENCHAGG_MCDA_MODEL_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "common/json_util.hpp"
#include "mcda/tree.hpp"

namespace benchagg::mcda {

inline constexpr int kModelSchemaVersion = 1;

Json UtilityToJson(const UtilityFunction& f);
UtilityFunction UtilityFromJson(const Json& j, const std::string& path);

// `children` supplies the ids for weights keyed by child.
Json ParamsToJson(const ChoquetParams& p);
ChoquetParams ParamsFromJson(const Json& j, const std::string& path);

Json NodeToJson(const Node& n);
Node NodeFromJson(const Json& j, const std::string& path);

Json ModelToJson(const CriteriaTree& tree);
CriteriaTree ModelFromJson(const Json& j);

CriteriaTree LoadModel(std::string_view text);
std::string SaveModel(const CriteriaTree& tree);

Json ProfileToJson(const MeasurementProfile& p);
MeasurementProfile ProfileFromJson(const Json& j, const std::string& path);
std::vector<MeasurementProfile> ProfilesFromJson(const Json& j);

Json EvaluationToJson(const CriteriaTree& tree, const EvaluationResult& r);
Json IntervalEvaluationToJson(const CriteriaTree& tree, const IntervalResult& r);

// Human-readable dump used by `model show`.
std::string DescribeModel(const CriteriaTree& tree);

}  // namespace benchagg::mcda

#endif  // BENCHAGG_MCDA_MODEL_IO_HPP_
