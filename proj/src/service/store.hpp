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

#ifndef BENCHAGG_SERVICE_STORE_HPP_
#define BENCHAGG_SERVICE_STORE_HPP_

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "common/json_util.hpp"
#include "mcda/tree.hpp"
#include "service/record.hpp"

namespace benchagg::service {

inline constexpr const char* kStoreEnv = "BENCHAGG_STORE";

struct RejectedRecord {
  std::size_t index = 0;  // position in the ingested document
  std::string reason;
};

struct IngestReport {
  std::vector<BenchmarkRecord> accepted;
  std::vector<RejectedRecord> rejected;
};

Json IngestReportToJson(const IngestReport& r);

// Parses an ingest document without touching any store. Accepted shapes:
//   {"schema_version": 1, "kind": "benchagg.records", "records": [...]}
//   a bare JSON array of records, a single record object, or JSON Lines.
// An optional "defaults" object in the first shape supplies timestamp and
// provenance to records that omit them. Schema violations throw kValidation
// naming the field path (and the line for JSON Lines).
std::vector<BenchmarkRecord> ParseRecordDocument(std::string_view text);

struct StoredSession {
  std::string id;
  std::uint64_t version = 1;
  std::string state = "open";  // open | finalized
  std::optional<std::string> model;  // finalize writes into this model...
  std::optional<std::string> node;   // ...at this node
  Json session;                      // session document (see session_io)
  Json result;                       // derived parameters once finalized
};

Json StoredSessionToJson(const StoredSession& s);
StoredSession StoredSessionFromJson(const Json& j);

// Plain-file store:
//   <root>/records.jsonl      append-only, one record per line
//   <root>/models/<name>.json
//   <root>/sessions/<id>.json
// One writer at a time (in-process mutex plus an advisory file lock);
// readers see whole files because writes go through rename.
class Store {
 public:
  explicit Store(std::string root);

  // $BENCHAGG_STORE, else ./benchagg-store.
  static std::string DefaultRoot();

  const std::string& root() const { return root_; }

  std::vector<BenchmarkRecord> Records() const;
  // Appends the records whose key is new; duplicates (against the store or
  // earlier in the batch) are reported, not appended.
  IngestReport Ingest(const std::vector<BenchmarkRecord>& records);

  std::vector<std::string> ModelNames() const;
  bool HasModel(const std::string& name) const;
  mcda::CriteriaTree GetModel(const std::string& name) const;  // kNotFound
  std::string GetModelText(const std::string& name) const;
  void PutModel(const std::string& name, const mcda::CriteriaTree& tree);
  bool DeleteModel(const std::string& name);

  StoredSession CreateSession(StoredSession s);  // assigns id and version 1
  StoredSession GetSession(const std::string& id) const;  // kNotFound
  // Replaces the session when `expected_version` matches (kConflict
  // otherwise) and bumps the version.
  StoredSession UpdateSession(const std::string& id, std::uint64_t expected_version,
                              const std::function<void(StoredSession&)>& mutate);

  // FNV-1a over every file path and byte under the root; changes iff the
  // stored state changes.
  std::uint64_t Fingerprint() const;

 private:
  class WriteLock;

  std::string ModelPath(const std::string& name) const;
  std::string SessionPath(const std::string& id) const;

  std::string root_;
  mutable std::mutex mu_;
};

// Names of models and sessions: [A-Za-z0-9_.-]+, not starting with '.'.
void ValidateName(const std::string& name, const std::string& what);

// Writes `contents` to a temporary sibling and renames it over `path`.
void WriteFileAtomic(const std::string& path, std::string_view contents);

}  // namespace benchagg::service

#endif  // BENCHAGG_SERVICE_STORE_HPP_
