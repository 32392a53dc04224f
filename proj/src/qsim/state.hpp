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

#ifndef BENCHAGG_QSIM_STATE_HPP_
#define BENCHAGG_QSIM_STATE_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qsim/pauli.hpp"

namespace benchagg::qsim {

inline constexpr double kNormTolerance = 1e-9;
// Dense density matrices are 4^n complex entries.
inline constexpr int kMaxDensityQubits = 10;

class QuantumState {
 public:
  // Throws kValidation unless |amps| has length 2^n and unit norm (1e-9).
  QuantumState(int num_qubits, Eigen::VectorXcd amps);

  static QuantumState Basis(int num_qubits, std::uint64_t index);
  // One character per qubit, qubit 0 first: '0', '1', '+', '-'.
  static QuantumState Product(const std::string& spec);
  // Haar-like random state (normalized complex Gaussian vector).
  static QuantumState Random(int num_qubits, std::uint64_t seed);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }

 private:
  int n_;
  Eigen::VectorXcd amps_;
};

class DensityMatrix {
 public:
  // Throws kValidation unless rho is Hermitian, has unit trace and no
  // eigenvalue below -1e-9.
  DensityMatrix(int num_qubits, Eigen::MatrixXcd rho);

  static DensityMatrix Pure(const QuantumState& psi);
  static DensityMatrix MaximallyMixed(int num_qubits);
  // (1 - p) |psi><psi| + p I / 2^n, p in [0, 1].
  static DensityMatrix Depolarized(const QuantumState& psi, double p);
  // sum_k p_k |psi_k><psi_k|; probabilities must be non-negative and sum to 1.
  static DensityMatrix Mixture(const std::vector<std::pair<double, QuantumState>>& parts);

  int num_qubits() const { return n_; }
  const Eigen::MatrixXcd& matrix() const { return rho_; }

 private:
  DensityMatrix(int num_qubits, Eigen::MatrixXcd rho, bool trusted);

  int n_;
  Eigen::MatrixXcd rho_;
};

}  // namespace benchagg::qsim

#endif  // BENCHAGG_QSIM_STATE_HPP_
