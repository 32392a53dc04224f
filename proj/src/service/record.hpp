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

#ifndef BENCHAGG_SERVICE_RECORD_HPP_
#define BENCHAGG_SERVICE_RECORD_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "common/json_util.hpp"

namespace benchagg::service {

enum class ProvenanceKind { kLocal, kExternal };

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::kLocal;
  std::string source;  // required for external records (citation / URL)

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// One measurement of one alternative (backend) on one instance.
struct BenchmarkRecord {
  std::string alternative_id;
  std::string family;
  std::string instance;
  std::uint64_t seed = 0;
  std::map<std::string, double> metrics;
  std::string timestamp;  // ISO 8601 UTC
  Provenance provenance;

  // Identity used for duplicate rejection.
  std::tuple<std::string, std::string, std::string, std::uint64_t> Key() const {
    return {alternative_id, family, instance, seed};
  }

  friend bool operator==(const BenchmarkRecord&, const BenchmarkRecord&) = default;
};

const char* ProvenanceName(ProvenanceKind k);  // local, external

// Throws kValidation naming `path` (e.g. "records[3].metrics.energy_joules").
// Rules: non-empty ids, finite metrics, non-negative wall_clock_seconds,
// positive energy_joules, non-empty timestamp, source present for external.
void ValidateRecord(const BenchmarkRecord& r, const std::string& path);

Json RecordToJson(const BenchmarkRecord& r);
BenchmarkRecord RecordFromJson(const Json& j, const std::string& path);

// metric / energy; throws kInvalidArgument unless energy > 0.
double compute_efficiency(double metric_value, double energy_joules);

// Current UTC time, second resolution.
std::string UtcTimestamp();

}  // namespace benchagg::service

#endif  // BENCHAGG_SERVICE_RECORD_HPP_
