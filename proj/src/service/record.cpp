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

#include "service/record.hpp"

#include <chrono>
#include <cmath>
#include <ctime>

#include "common/error.hpp"

namespace benchagg::service {

const char* ProvenanceName(ProvenanceKind k) {
  return k == ProvenanceKind::kLocal ? "local" : "external";
}

void ValidateRecord(const BenchmarkRecord& r, const std::string& path) {
  auto check = [&](bool ok, const std::string& field, const std::string& msg) {
    if (!ok) Fail(ErrorCode::kValidation, path + "." + field + ": " + msg);
  };
  check(!r.alternative_id.empty(), "alternative_id", "must be a non-empty string");
  check(!r.family.empty(), "family", "must be a non-empty string");
  check(!r.instance.empty(), "instance", "must be a non-empty string");
  check(!r.timestamp.empty(), "timestamp", "must be a non-empty string");
  for (const auto& [name, value] : r.metrics) {
    const std::string field = "metrics." + name;
    check(!name.empty(), "metrics", "empty metric name");
    check(std::isfinite(value), field, "must be finite");
    if (name == "wall_clock_seconds") check(value >= 0.0, field, "must be non-negative");
    if (name == "energy_joules") check(value > 0.0, field, "must be positive");
  }
  if (r.provenance.kind == ProvenanceKind::kExternal) {
    check(!r.provenance.source.empty(), "provenance.source",
          "external records must cite their source");
  }
}

Json RecordToJson(const BenchmarkRecord& r) {
  Json metrics = Json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = v;
  Json prov{{"kind", ProvenanceName(r.provenance.kind)}};
  if (!r.provenance.source.empty()) prov["source"] = r.provenance.source;
  return Json{{"alternative_id", r.alternative_id},
              {"family", r.family},
              {"instance", r.instance},
              {"seed", r.seed},
              {"metrics", std::move(metrics)},
              {"timestamp", r.timestamp},
              {"provenance", std::move(prov)}};
}

BenchmarkRecord RecordFromJson(const Json& j, const std::string& path) {
  Require(j.is_object(), ErrorCode::kValidation, path + ": record must be an object");
  BenchmarkRecord r;
  r.alternative_id = RequireString(j, "alternative_id", path);
  r.family = RequireString(j, "family", path);
  r.instance = RequireString(j, "instance", path);
  if (j.contains("seed")) {
    const Json& s = j["seed"];
    Require(s.is_number_unsigned() || (s.is_number_integer() && s.get<std::int64_t>() >= 0),
            ErrorCode::kValidation, path + ".seed: must be a non-negative integer");
    r.seed = s.get<std::uint64_t>();
  }
  const Json& metrics = RequireField(j, "metrics", path);
  Require(metrics.is_object(), ErrorCode::kValidation, path + ".metrics: must be an object");
  for (const auto& [k, v] : metrics.items()) r.metrics[k] = AsNumber(v, path + ".metrics." + k);
  r.timestamp = RequireString(j, "timestamp", path);
  const Json& prov = RequireField(j, "provenance", path);
  Require(prov.is_object(), ErrorCode::kValidation, path + ".provenance: must be an object");
  const std::string kind = RequireString(prov, "kind", path + ".provenance");
  if (kind == "local") {
    r.provenance.kind = ProvenanceKind::kLocal;
  } else if (kind == "external") {
    r.provenance.kind = ProvenanceKind::kExternal;
  } else {
    Fail(ErrorCode::kValidation,
         path + ".provenance.kind: expected 'local' or 'external', got '" + kind + "'");
  }
  if (prov.contains("source")) r.provenance.source = AsString(prov["source"], path + ".provenance.source");
  ValidateRecord(r, path);
  return r;
}

double compute_efficiency(double metric_value, double energy_joules) {
  Require(std::isfinite(energy_joules) && energy_joules > 0.0, ErrorCode::kInvalidArgument,
          "efficiency: energy must be positive");
  Require(std::isfinite(metric_value), ErrorCode::kInvalidArgument,
          "efficiency: metric value must be finite");
  return metric_value / energy_joules;
}

std::string UtcTimestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  ::gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace benchagg::service
