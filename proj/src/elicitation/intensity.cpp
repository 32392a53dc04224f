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

#include "elicitation/intensity.hpp"

#include <algorithm>
#include <cctype>

#include "common/error.hpp"

namespace benchagg::elicitation {

Intensity IntensityFromValue(int value) {
  if (value < 0 || value > 6) {
    Fail(ErrorCode::kValidation, "intensity value " + std::to_string(value) + " outside 0..6");
  }
  return static_cast<Intensity>(value);
}

Intensity ParseIntensity(const std::string& name) {
  std::string key;
  // Accepts very_strong, "very strong", very-strong and VeryStrong.
  for (std::size_t i = 0; i < name.size(); ++i) {
    const char c = name[i];
    if (i > 0 && std::isupper(static_cast<unsigned char>(c)) &&
        std::islower(static_cast<unsigned char>(name[i - 1]))) {
      key.push_back('_');
    }
    key.push_back(c == ' ' || c == '-' ? '_' : static_cast<char>(std::tolower(c)));
  }
  if (key == "tie" || key == "indifferent") return Intensity::kTie;
  if (key == "very_weak") return Intensity::kVeryWeak;
  if (key == "weak") return Intensity::kWeak;
  if (key == "moderate") return Intensity::kModerate;
  if (key == "strong") return Intensity::kStrong;
  if (key == "very_strong") return Intensity::kVeryStrong;
  if (key == "extreme") return Intensity::kExtreme;
  Fail(ErrorCode::kValidation, "unknown intensity label '" + name + "'");
}

const char* IntensityName(Intensity i) {
  switch (i) {
    case Intensity::kTie: return "tie";
    case Intensity::kVeryWeak: return "very_weak";
    case Intensity::kWeak: return "weak";
    case Intensity::kModerate: return "moderate";
    case Intensity::kStrong: return "strong";
    case Intensity::kVeryStrong: return "very_strong";
    case Intensity::kExtreme: return "extreme";
  }
  return "tie";
}

}  // namespace benchagg::elicitation
