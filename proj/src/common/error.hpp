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

#ifndef BENCHAGG_COMMON_ERROR_HPP_
#define BENCHAGG_COMMON_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace benchagg {

// Stable numeric values: mirrored by ba_status in the C API.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kValidation = 2,
  kConsistency = 3,
  kNotFound = 4,
  kConflict = 5,
  kIo = 6,
  kProtocol = 7,
  kTimeout = 8,
  kUnsupported = 9,
  kInternal = 10,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised when elicitation answers cannot be represented by any admissible
// model. `violations` lists the offending constraints in readable form.
class ConsistencyError : public Error {
 public:
  ConsistencyError(const std::string& message,
                   std::vector<std::string> violations)
      : Error(ErrorCode::kConsistency, message),
        violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void Require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) throw Error(code, message);
}

}  // namespace benchagg

#endif  // BENCHAGG_COMMON_ERROR_HPP_
