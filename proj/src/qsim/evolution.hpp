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

#ifndef BENCHAGG_QSIM_EVOLUTION_HPP_
#define BENCHAGG_QSIM_EVOLUTION_HPP_

#include <optional>

#include <Eigen/Dense>

#include "qsim/hamiltonian.hpp"
#include "qsim/state.hpp"

namespace benchagg::qsim {

// Registers up to this size are diagonalized densely; larger ones (up to
// kMaxQubits) use matrix-free Krylov/Lanczos.
inline constexpr int kDenseQubits = 10;
inline constexpr double kDegeneracyGap = 1e-9;

enum class EvolutionMethod { kExact, kTrotter };

struct Evolution {
  EvolutionMethod method = EvolutionMethod::kExact;
  int steps = 100;  // Trotter slices

  static Evolution Exact() { return {}; }
  static Evolution Trotter(int steps) { return {EvolutionMethod::kTrotter, steps}; }
};

// exp(-iHt) with hbar = 1. The dense eigendecomposition is computed once and
// reused for every t.
class ExactPropagator {
 public:
  explicit ExactPropagator(const SpinSystem& h);

  QuantumState Apply(const QuantumState& psi, double t) const;
  bool dense() const { return eigenvalues_.has_value(); }

 private:
  const SpinSystem* h_;
  std::optional<Eigen::VectorXd> eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
};

// Exact or first-order Trotter (terms applied in list order, each as
// cos(c dt) I - i sin(c dt) P). The result is renormalized.
QuantumState evolve(const SpinSystem& h, const QuantumState& psi0, double t,
                    const Evolution& method = Evolution::Exact());

struct GroundState {
  double energy = 0.0;
  QuantumState state;
  double gap = 0.0;  // E1 - E0
  bool degenerate = false;
};

// Dense for n <= 10. Beyond that Lanczos only sees one vector of a degenerate
// ground space, so `degenerate` and `gap` are reliable on the dense path only.
GroundState ground_state(const SpinSystem& h);

// <psi|H|psi>.
double EnergyExpectation(const SpinSystem& h, const QuantumState& psi);

}  // namespace benchagg::qsim

#endif  // BENCHAGG_QSIM_EVOLUTION_HPP_
