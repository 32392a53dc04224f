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

#include "service/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "common/error.hpp"
#include "mcda/model_io.hpp"

namespace fs = std::filesystem;

namespace benchagg::service {
namespace {

constexpr const char* kRecordsFile = "records.jsonl";

BenchmarkRecord RecordWithDefaults(Json j, const Json& defaults, const std::string& path) {
  if (j.is_object() && defaults.is_object()) {
    for (const auto& [k, v] : defaults.items()) {
      if (!j.contains(k)) j[k] = v;
    }
  }
  return RecordFromJson(j, path);
}

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Json IngestReportToJson(const IngestReport& r) {
  Json rejected = Json::array();
  for (const auto& x : r.rejected) rejected.push_back(Json{{"index", x.index}, {"reason", x.reason}});
  return Json{{"accepted", r.accepted.size()}, {"rejected", std::move(rejected)}};
}

std::vector<BenchmarkRecord> ParseRecordDocument(std::string_view text) {
  const std::string body = Trim(text);
  std::vector<BenchmarkRecord> out;
  if (body.empty()) return out;

  Json doc;
  try {
    doc = ParseJson(body, "records document");
  } catch (const Error& whole) {
    // JSON Lines: one record per non-empty line.
    if (body.find('\n') == std::string::npos) throw;
    std::istringstream in(body);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (Trim(line).empty()) continue;
      const std::string where = "line " + std::to_string(lineno);
      Json j;
      try {
        j = Json::parse(line);
      } catch (const nlohmann::json::parse_error&) {
        Fail(ErrorCode::kValidation, "records document: " + where + ": malformed JSON");
      }
      out.push_back(RecordFromJson(j, where));
    }
    return out;
  }

  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      out.push_back(RecordFromJson(doc[i], "[" + std::to_string(i) + "]"));
    }
    return out;
  }
  Require(doc.is_object(), ErrorCode::kValidation,
          "records document: expected an object, an array or JSON Lines");
  if (doc.empty()) return out;
  if (!doc.contains("records")) {
    out.push_back(RecordFromJson(doc, "record"));
    return out;
  }
  if (doc.contains("kind")) {
    Require(doc["kind"] == "benchagg.records", ErrorCode::kValidation,
            "records document: kind must be 'benchagg.records'");
  }
  const Json defaults = doc.contains("defaults") ? doc["defaults"] : Json::object();
  Require(defaults.is_object(), ErrorCode::kValidation, "defaults: expected an object");
  const Json& records = doc["records"];
  Require(records.is_array(), ErrorCode::kValidation, "records: expected an array");
  for (std::size_t i = 0; i < records.size(); ++i) {
    out.push_back(RecordWithDefaults(records[i], defaults, "records[" + std::to_string(i) + "]"));
  }
  return out;
}

Json StoredSessionToJson(const StoredSession& s) {
  Json j{{"id", s.id}, {"version", s.version}, {"state", s.state}};
  j["model"] = s.model ? Json(*s.model) : Json(nullptr);
  j["node"] = s.node ? Json(*s.node) : Json(nullptr);
  j["session"] = s.session;
  j["result"] = s.result;
  return j;
}

StoredSession StoredSessionFromJson(const Json& j) {
  StoredSession s;
  s.id = RequireString(j, "id", "session");
  const Json& v = RequireField(j, "version", "session");
  Require(v.is_number_unsigned(), ErrorCode::kValidation, "session.version: expected an integer");
  s.version = v.get<std::uint64_t>();
  s.state = RequireString(j, "state", "session");
  if (j.contains("model") && !j["model"].is_null()) s.model = AsString(j["model"], "session.model");
  if (j.contains("node") && !j["node"].is_null()) s.node = AsString(j["node"], "session.node");
  s.session = RequireField(j, "session", "session");
  if (j.contains("result")) s.result = j["result"];
  return s;
}

void ValidateName(const std::string& name, const std::string& what) {
  const bool ok = !name.empty() && name.size() <= 128 && name.front() != '.' &&
                  std::all_of(name.begin(), name.end(), [](char c) {
                    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
                           c == '.';
                  });
  Require(ok, ErrorCode::kValidation,
          what + " name '" + name + "' must match [A-Za-z0-9_.-]+ and not start with '.'");
}

void WriteFileAtomic(const std::string& path, std::string_view contents) {
  const std::string tmp = path + ".tmp";
  WriteFile(tmp, contents);
  std::error_code ec;
  fs::rename(tmp, path, ec);
  Require(!ec, ErrorCode::kIo, "cannot replace '" + path + "': " + ec.message());
}

// Process-wide advisory lock on <root>/.lock, on top of the mutex.
class Store::WriteLock {
 public:
  explicit WriteLock(const Store& s) : guard_(s.mu_) {
    fd_ = ::open((fs::path(s.root_) / ".lock").c_str(), O_CREAT | O_RDWR | O_CLOEXEC, 0644);
    if (fd_ >= 0) ::flock(fd_, LOCK_EX);
  }
  ~WriteLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  WriteLock(const WriteLock&) = delete;
  WriteLock& operator=(const WriteLock&) = delete;

 private:
  std::lock_guard<std::mutex> guard_;
  int fd_ = -1;
};

Store::Store(std::string root) : root_(std::move(root)) {
  Require(!root_.empty(), ErrorCode::kInvalidArgument, "store: empty root path");
  std::error_code ec;
  fs::create_directories(fs::path(root_) / "models", ec);
  if (!ec) fs::create_directories(fs::path(root_) / "sessions", ec);
  Require(!ec, ErrorCode::kIo, "store: cannot create '" + root_ + "': " + ec.message());
}

std::string Store::DefaultRoot() {
  const char* env = std::getenv(kStoreEnv);
  return env && *env ? std::string(env) : std::string("benchagg-store");
}

std::vector<BenchmarkRecord> Store::Records() const {
  const auto path = fs::path(root_) / kRecordsFile;
  std::vector<BenchmarkRecord> out;
  if (!fs::exists(path)) return out;
  std::ifstream in(path);
  Require(static_cast<bool>(in), ErrorCode::kIo, "store: cannot read " + path.string());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(lineno);
    out.push_back(RecordFromJson(ParseJson(line, where), where));
  }
  return out;
}

IngestReport Store::Ingest(const std::vector<BenchmarkRecord>& records) {
  WriteLock lock(*this);
  IngestReport report;
  std::set<decltype(BenchmarkRecord{}.Key())> keys;
  for (const auto& r : Records()) keys.insert(r.Key());
  std::string appended;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    try {
      ValidateRecord(r, "records[" + std::to_string(i) + "]");
    } catch (const Error& e) {
      report.rejected.push_back({i, e.what()});
      continue;
    }
    if (!keys.insert(r.Key()).second) {
      report.rejected.push_back(
          {i, "duplicate record (alternative '" + r.alternative_id + "', family '" + r.family +
                  "', instance '" + r.instance + "', seed " + std::to_string(r.seed) + ")"});
      continue;
    }
    appended += RecordToJson(r).dump() + "\n";
    report.accepted.push_back(r);
  }
  if (!appended.empty()) {
    std::ofstream out(fs::path(root_) / kRecordsFile, std::ios::app | std::ios::binary);
    out << appended;
    out.flush();
    Require(static_cast<bool>(out), ErrorCode::kIo, "store: cannot append records");
  }
  return report;
}

std::string Store::ModelPath(const std::string& name) const {
  ValidateName(name, "model");
  return (fs::path(root_) / "models" / (name + ".json")).string();
}

std::string Store::SessionPath(const std::string& id) const {
  ValidateName(id, "session");
  return (fs::path(root_) / "sessions" / (id + ".json")).string();
}

std::vector<std::string> Store::ModelNames() const {
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(fs::path(root_) / "models")) {
    if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

bool Store::HasModel(const std::string& name) const { return fs::exists(ModelPath(name)); }

std::string Store::GetModelText(const std::string& name) const {
  const std::string path = ModelPath(name);
  Require(fs::exists(path), ErrorCode::kNotFound, "model '" + name + "' not found");
  return ReadFile(path);
}

mcda::CriteriaTree Store::GetModel(const std::string& name) const {
  return mcda::LoadModel(GetModelText(name));
}

void Store::PutModel(const std::string& name, const mcda::CriteriaTree& tree) {
  const std::string path = ModelPath(name);
  WriteLock lock(*this);
  WriteFileAtomic(path, mcda::SaveModel(tree));
}

bool Store::DeleteModel(const std::string& name) {
  const std::string path = ModelPath(name);
  WriteLock lock(*this);
  return fs::remove(path);
}

StoredSession Store::CreateSession(StoredSession s) {
  WriteLock lock(*this);
  std::uint64_t next = 1;
  for (const auto& e : fs::directory_iterator(fs::path(root_) / "sessions")) {
    const std::string stem = e.path().stem().string();
    if (e.path().extension() == ".json" && stem.size() > 1 && stem[0] == 's' &&
        std::all_of(stem.begin() + 1, stem.end(), ::isdigit)) {
      next = std::max<std::uint64_t>(next, std::stoull(stem.substr(1)) + 1);
    }
  }
  s.id = "s" + std::to_string(next);
  s.version = 1;
  WriteFileAtomic(SessionPath(s.id), DumpJson(StoredSessionToJson(s)));
  return s;
}

StoredSession Store::GetSession(const std::string& id) const {
  const std::string path = SessionPath(id);
  Require(fs::exists(path), ErrorCode::kNotFound, "session '" + id + "' not found");
  return StoredSessionFromJson(ParseJson(ReadFile(path), path));
}

StoredSession Store::UpdateSession(const std::string& id, std::uint64_t expected_version,
                                   const std::function<void(StoredSession&)>& mutate) {
  WriteLock lock(*this);
  StoredSession s = GetSession(id);
  Require(s.version == expected_version, ErrorCode::kConflict,
          "session '" + id + "' is at version " + std::to_string(s.version) + ", update was for " +
              std::to_string(expected_version));
  mutate(s);
  s.id = id;
  s.version = expected_version + 1;
  WriteFileAtomic(SessionPath(id), DumpJson(StoredSessionToJson(s)));
  return s;
}

std::uint64_t Store::Fingerprint() const {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(root_)) {
    if (e.is_regular_file() && e.path().filename() != ".lock") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::string_view bytes) {
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
  };
  for (const auto& f : files) {
    mix(fs::relative(f, root_).string());
    mix(ReadFile(f.string()));
  }
  return h;
}

}  // namespace benchagg::service
