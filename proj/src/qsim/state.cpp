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

#include "qsim/state.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "common/error.hpp"
#include "common/rng.hpp"

namespace benchagg::qsim {
namespace {

void CheckQubits(int n, int limit) {
  Require(n >= 1 && n <= limit, ErrorCode::kValidation,
          "state: num_qubits must lie in [1, " + std::to_string(limit) + "]");
}

}  // namespace

QuantumState::QuantumState(int num_qubits, Eigen::VectorXcd amps)
    : n_(num_qubits), amps_(std::move(amps)) {
  CheckQubits(n_, kMaxQubits);
  Require(amps_.size() == (Eigen::Index{1} << n_), ErrorCode::kValidation,
          "state: expected " + std::to_string(1 << n_) + " amplitudes");
  Require(amps_.allFinite(), ErrorCode::kValidation, "state: non-finite amplitude");
  Require(std::abs(amps_.norm() - 1.0) <= kNormTolerance, ErrorCode::kValidation,
          "state: norm must be 1 within 1e-9");
}

QuantumState QuantumState::Basis(int num_qubits, std::uint64_t index) {
  CheckQubits(num_qubits, kMaxQubits);
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  Require(index < static_cast<std::uint64_t>(dim), ErrorCode::kValidation,
          "state: basis index out of range");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return QuantumState(num_qubits, std::move(v));
}

QuantumState QuantumState::Product(const std::string& spec) {
  const int n = static_cast<int>(spec.size());
  CheckQubits(n, kMaxQubits);
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(Eigen::Index{1} << n);
  const double h = 1.0 / std::sqrt(2.0);
  for (int q = 0; q < n; ++q) {
    const char c = spec[static_cast<std::size_t>(q)];
    Require(c == '0' || c == '1' || c == '+' || c == '-', ErrorCode::kValidation,
            "state: product spec may only contain 0, 1, + and -");
    for (Eigen::Index b = 0; b < v.size(); ++b) {
      const bool bit = (b >> q) & 1;
      double f = 1.0;
      switch (c) {
        case '0': f = bit ? 0.0 : 1.0; break;
        case '1': f = bit ? 1.0 : 0.0; break;
        case '+': f = h; break;
        case '-': f = bit ? -h : h; break;
      }
      v[b] *= f;
    }
  }
  return QuantumState(n, std::move(v));
}

QuantumState QuantumState::Random(int num_qubits, std::uint64_t seed) {
  CheckQubits(num_qubits, kMaxQubits);
  Rng rng(seed);
  Eigen::VectorXcd v(Eigen::Index{1} << num_qubits);
  for (Eigen::Index b = 0; b < v.size(); ++b) v[b] = Complex(rng.Normal(), rng.Normal());
  v /= v.norm();
  return QuantumState(num_qubits, std::move(v));
}

DensityMatrix::DensityMatrix(int num_qubits, Eigen::MatrixXcd rho)
    : DensityMatrix(num_qubits, std::move(rho), false) {}

DensityMatrix::DensityMatrix(int num_qubits, Eigen::MatrixXcd rho, bool trusted)
    : n_(num_qubits), rho_(std::move(rho)) {
  CheckQubits(n_, kMaxDensityQubits);
  const Eigen::Index dim = Eigen::Index{1} << n_;
  Require(rho_.rows() == dim && rho_.cols() == dim, ErrorCode::kValidation,
          "density matrix: expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
              " matrix");
  if (trusted) return;
  Require(rho_.allFinite(), ErrorCode::kValidation, "density matrix: non-finite entry");
  Require((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() <= 1e-9, ErrorCode::kValidation,
          "density matrix: not Hermitian");
  const Complex tr = rho_.trace();
  Require(std::abs(tr - Complex(1.0)) <= 1e-9, ErrorCode::kValidation,
          "density matrix: trace must be 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
  Require(es.eigenvalues().minCoeff() >= -1e-9, ErrorCode::kValidation,
          "density matrix: not positive semidefinite");
}

DensityMatrix DensityMatrix::Pure(const QuantumState& psi) {
  CheckQubits(psi.num_qubits(), kMaxDensityQubits);
  return DensityMatrix(psi.num_qubits(), psi.amplitudes() * psi.amplitudes().adjoint(), true);
}

DensityMatrix DensityMatrix::MaximallyMixed(int num_qubits) {
  CheckQubits(num_qubits, kMaxDensityQubits);
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
  return DensityMatrix(num_qubits, std::move(rho), true);
}

DensityMatrix DensityMatrix::Depolarized(const QuantumState& psi, double p) {
  Require(p >= 0.0 && p <= 1.0, ErrorCode::kValidation,
          "depolarizing probability must lie in [0, 1]");
  CheckQubits(psi.num_qubits(), kMaxDensityQubits);
  const Eigen::Index dim = static_cast<Eigen::Index>(psi.dim());
  Eigen::MatrixXcd rho = (1.0 - p) * (psi.amplitudes() * psi.amplitudes().adjoint());
  rho.diagonal().array() += p / static_cast<double>(dim);
  return DensityMatrix(psi.num_qubits(), std::move(rho), true);
}

DensityMatrix DensityMatrix::Mixture(const std::vector<std::pair<double, QuantumState>>& parts) {
  Require(!parts.empty(), ErrorCode::kValidation, "mixture: no components");
  const int n = parts.front().second.num_qubits();
  CheckQubits(n, kMaxDensityQubits);
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  double total = 0.0;
  for (const auto& [p, psi] : parts) {
    Require(p >= 0.0, ErrorCode::kValidation, "mixture: negative probability");
    Require(psi.num_qubits() == n, ErrorCode::kValidation, "mixture: qubit count mismatch");
    rho += p * (psi.amplitudes() * psi.amplitudes().adjoint());
    total += p;
  }
  Require(std::abs(total - 1.0) <= 1e-9, ErrorCode::kValidation,
          "mixture: probabilities must sum to 1");
  return DensityMatrix(n, std::move(rho), true);
}

}  // namespace benchagg::qsim
