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

#include "common/json_util.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "common/error.hpp"

namespace benchagg {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kConsistency: return "consistency";
    case ErrorCode::kNotFound: return "not_found";
    case ErrorCode::kConflict: return "conflict";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kProtocol: return "protocol";
    case ErrorCode::kTimeout: return "timeout";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

Json ParseJson(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    size_t line = 1, column = 1;
    const size_t limit = std::min<size_t>(e.byte, text.size());
    for (size_t i = 0; i + 1 < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    msg << what << ": malformed JSON at line " << line << ", column " << column;
    throw Error(ErrorCode::kValidation, msg.str());
  }
}

std::string DumpJson(const Json& doc) { return doc.dump(2) + "\n"; }

const Json& RequireField(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) Fail(ErrorCode::kValidation, path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    Fail(ErrorCode::kValidation, path + "." + key + ": missing field");
  }
  return *it;
}

double AsNumber(const Json& value, const std::string& path) {
  if (!value.is_number()) Fail(ErrorCode::kValidation, path + ": expected a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) Fail(ErrorCode::kValidation, path + ": not finite");
  return v;
}

std::string AsString(const Json& value, const std::string& path) {
  if (!value.is_string()) Fail(ErrorCode::kValidation, path + ": expected a string");
  return value.get<std::string>();
}

double RequireNumber(const Json& obj, const char* key, const std::string& path) {
  return AsNumber(RequireField(obj, key, path), path + "." + key);
}

std::string RequireString(const Json& obj, const char* key, const std::string& path) {
  return AsString(RequireField(obj, key, path), path + "." + key);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorCode::kIo, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) Fail(ErrorCode::kIo, "write failed for '" + path + "'");
}

}  // namespace benchagg
