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

#ifndef BENCHAGG_SERVICE_REPORT_HPP_
#define BENCHAGG_SERVICE_REPORT_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "common/json_util.hpp"
#include "explanation/explanation.hpp"
#include "mcda/tree.hpp"
#include "service/record.hpp"

namespace benchagg::service {

inline constexpr const char* kPerJouleSuffix = "_per_joule";

// Profile metric ids are "<family>.<metric>" (e.g. "maxcut.qscore"); an id
// without a family matches that metric in any family. "<...>_per_joule" is
// the metric divided by the record's energy_joules, computed per record
// before aggregation. Records are aggregated with the criterion's rule.
struct ProfileSet {
  std::vector<mcda::MeasurementProfile> profiles;  // ordered by alternative id
  std::vector<std::string> warnings;
};

ProfileSet BuildProfiles(const mcda::CriteriaTree& tree, const std::vector<BenchmarkRecord>& records);

struct ReportOptions {
  std::optional<explanation::ReferenceKind> explain;  // adds contribution columns
};

struct ReportRow {
  std::string alternative_id;
  std::size_t rank = 0;  // 1-based, equal scores share a rank
  std::map<std::string, double> values;  // measured inputs of the model's metrics
  mcda::EvaluationResult result;
  std::optional<explanation::ExplanationReport> explanation;
};

struct Report {
  std::vector<ReportRow> rows;  // by root score descending, then id
  std::vector<std::string> excluded;
  std::vector<std::string> warnings;
  std::optional<explanation::ReferenceKind> reference;
};

// Alternatives lacking a metric used by the model are excluded with a
// warning; everything else is scored and ranked.
Report evaluate_and_report(const mcda::CriteriaTree& tree,
                           const std::vector<mcda::MeasurementProfile>& profiles,
                           const ReportOptions& options = {},
                           std::vector<std::string> warnings = {});

Json ReportToJson(const mcda::CriteriaTree& tree, const Report& r);
std::string RenderReport(const mcda::CriteriaTree& tree, const Report& r);

}  // namespace benchagg::service

#endif  // BENCHAGG_SERVICE_REPORT_HPP_
