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

#include "qsim/pauli.hpp"

#include <bit>
#include <cctype>

#include "common/error.hpp"

namespace benchagg::qsim {

PauliString PauliString::Single(char op, int qubit) {
  Require(qubit >= 0 && qubit < kMaxQubits, ErrorCode::kValidation,
          "pauli: qubit " + std::to_string(qubit) + " out of range");
  const std::uint32_t bit = 1U << qubit;
  switch (op) {
    case 'I': return {};
    case 'X': return {bit, 0};
    case 'Y': return {bit, bit};
    case 'Z': return {0, bit};
    default: Fail(ErrorCode::kValidation, std::string("pauli: unknown operator '") + op + "'");
  }
}

PauliString PauliString::Parse(const std::string& label) {
  if (label == "I") return {};
  Require(!label.empty(), ErrorCode::kValidation, "pauli: empty label");
  PauliString p;
  std::size_t i = 0;
  while (i < label.size()) {
    const char op = label[i++];
    Require(op == 'X' || op == 'Y' || op == 'Z', ErrorCode::kValidation,
            "pauli: bad label '" + label + "'");
    std::size_t start = i;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
    Require(i > start && i - start <= 2, ErrorCode::kValidation,
            "pauli: bad label '" + label + "' (expected e.g. X0 or Z1Z3)");
    const int q = std::stoi(label.substr(start, i - start));
    const PauliString s = Single(op, q);
    Require(((p.x | p.z) & (s.x | s.z)) == 0, ErrorCode::kValidation,
            "pauli: qubit " + std::to_string(q) + " repeated in '" + label + "'");
    p.x |= s.x;
    p.z |= s.z;
  }
  return p;
}

std::string PauliString::Label() const {
  if ((x | z) == 0) return "I";
  std::string out;
  for (int q = 0; q < 32; ++q) {
    const bool bx = (x >> q) & 1U;
    const bool bz = (z >> q) & 1U;
    if (!bx && !bz) continue;
    out += bx && bz ? 'Y' : (bx ? 'X' : 'Z');
    out += std::to_string(q);
  }
  return out;
}

int PauliString::Weight() const { return std::popcount(x | z); }

int PauliString::MaxQubit() const { return 31 - std::countl_zero(x | z); }

Complex PauliString::Phase(std::uint64_t b) const {
  static const Complex kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const int k = std::popcount(x & z) + 2 * std::popcount(static_cast<std::uint32_t>(b) & z);
  return kI[k & 3];
}

}  // namespace benchagg::qsim
