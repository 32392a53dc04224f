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

#ifndef BENCHAGG_QSIM_PAULI_HPP_
#define BENCHAGG_QSIM_PAULI_HPP_

#include <complex>
#include <cstdint>
#include <string>

namespace benchagg::qsim {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 14;

// Pauli string as bit masks over qubits, qubit 0 being the least significant
// bit of a basis index: X where x is set, Z where z is set, Y where both are.
// As an operator it is i^{|x & z|} X^x Z^z, so
//   P |b> = i^{|x & z|} (-1)^{|b & z|} |b ^ x>.
struct PauliString {
  std::uint32_t x = 0;
  std::uint32_t z = 0;

  static PauliString Single(char op, int qubit);  // op in I, X, Y, Z

  // "X0", "Z1Z3", "X0Y2" (order free, each qubit at most once), or "I" for
  // the identity. Throws kValidation.
  static PauliString Parse(const std::string& label);

  // Canonical label, qubits ascending, "I" for the identity.
  std::string Label() const;
  int Weight() const;
  // Highest qubit touched, -1 for the identity.
  int MaxQubit() const;

  // Phase of P|b>, i.e. <b ^ x| P |b>.
  Complex Phase(std::uint64_t b) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;
};

}  // namespace benchagg::qsim

#endif  // BENCHAGG_QSIM_PAULI_HPP_
