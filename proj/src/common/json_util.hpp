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

#ifndef BENCHAGG_COMMON_JSON_UTIL_HPP_
#define BENCHAGG_COMMON_JSON_UTIL_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

namespace benchagg {

using Json = nlohmann::ordered_json;

// Parses a document; syntax errors become Error(kValidation) with the line and
// column of the failure.
Json ParseJson(std::string_view text, std::string_view what);

// Canonical text form: two-space indentation, trailing newline. Every document
// the project writes goes through this so that save/load/save is stable.
std::string DumpJson(const Json& doc);

// Field accessors raising Error(kValidation) that name the offending path.
const Json& RequireField(const Json& obj, const char* key, const std::string& path);
double RequireNumber(const Json& obj, const char* key, const std::string& path);
std::string RequireString(const Json& obj, const char* key, const std::string& path);
double AsNumber(const Json& value, const std::string& path);
std::string AsString(const Json& value, const std::string& path);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace benchagg

#endif  // BENCHAGG_COMMON_JSON_UTIL_HPP_
