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

#include "qsim/evolution.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "common/error.hpp"
#include "common/rng.hpp"

namespace benchagg::qsim {
namespace {

constexpr Complex kI{0.0, 1.0};

struct Krylov {
  Eigen::MatrixXcd basis;  // dim x m
  Eigen::VectorXd alpha;
  Eigen::VectorXd beta;    // beta[k] couples k and k+1
};

// Lanczos with full reorthogonalization, starting from a unit vector.
Krylov BuildKrylov(const SpinSystem& h, const Eigen::VectorXcd& start, int max_dim) {
  const Eigen::Index dim = start.size();
  const int m = static_cast<int>(std::min<Eigen::Index>(max_dim, dim));
  Krylov k;
  k.basis.resize(dim, m);
  k.alpha.resize(m);
  k.beta.resize(m);
  k.basis.col(0) = start;
  int used = m;
  for (int j = 0; j < m; ++j) {
    Eigen::VectorXcd w = h.Apply(k.basis.col(j));
    k.alpha[j] = k.basis.col(j).dot(w).real();
    for (int pass = 0; pass < 2; ++pass) {
      w -= k.basis.leftCols(j + 1) * (k.basis.leftCols(j + 1).adjoint() * w);
    }
    const double b = w.norm();
    k.beta[j] = b;
    if (j + 1 == m) break;
    if (b < 1e-13) {
      used = j + 1;
      break;
    }
    k.basis.col(j + 1) = w / b;
  }
  k.basis.conservativeResize(dim, used);
  k.alpha.conservativeResize(used);
  k.beta.conservativeResize(used);
  return k;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> Tridiagonal(const Krylov& k) {
  const Eigen::Index m = k.alpha.size();
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    t(i, i) = k.alpha[i];
    if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = k.beta[i];
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(t);
}

Eigen::VectorXcd KrylovExp(const SpinSystem& h, Eigen::VectorXcd psi, double t) {
  if (t == 0.0) return psi;
  const double bound = std::max(h.NormBound(), 1e-12);
  const int slices = std::max(1, static_cast<int>(std::ceil(std::abs(t) * bound / 4.0)));
  const double dt = t / slices;
  for (int s = 0; s < slices; ++s) {
    const double norm = psi.norm();
    const Krylov k = BuildKrylov(h, psi / norm, 40);
    const auto es = Tridiagonal(k);
    const Eigen::MatrixXd& v = es.eigenvectors();
    Eigen::VectorXcd phase(v.cols());
    for (Eigen::Index i = 0; i < v.cols(); ++i) {
      phase[i] = std::exp(-kI * es.eigenvalues()[i] * dt) * v(0, i);
    }
    const Eigen::VectorXcd coeffs = v.cast<Complex>() * phase;
    psi = norm * (k.basis * coeffs);
  }
  return psi;
}

void CheckState(const SpinSystem& h, const QuantumState& psi) {
  Require(psi.num_qubits() == h.num_qubits(), ErrorCode::kInvalidArgument,
          "state has " + std::to_string(psi.num_qubits()) + " qubits, hamiltonian has " +
              std::to_string(h.num_qubits()));
}

}  // namespace

ExactPropagator::ExactPropagator(const SpinSystem& h) : h_(&h) {
  if (h.num_qubits() <= kDenseQubits) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.Dense());
    Require(es.info() == Eigen::Success, ErrorCode::kInternal, "diagonalization failed");
    eigenvalues_ = es.eigenvalues();
    eigenvectors_ = es.eigenvectors();
  }
}

QuantumState ExactPropagator::Apply(const QuantumState& psi, double t) const {
  CheckState(*h_, psi);
  Eigen::VectorXcd out;
  if (eigenvalues_) {
    Eigen::VectorXcd c = eigenvectors_.adjoint() * psi.amplitudes();
    for (Eigen::Index i = 0; i < c.size(); ++i) c[i] *= std::exp(-kI * (*eigenvalues_)[i] * t);
    out = eigenvectors_ * c;
  } else {
    out = KrylovExp(*h_, psi.amplitudes(), t);
  }
  out /= out.norm();
  return QuantumState(psi.num_qubits(), std::move(out));
}

QuantumState evolve(const SpinSystem& h, const QuantumState& psi0, double t,
                    const Evolution& method) {
  CheckState(h, psi0);
  Require(std::isfinite(t), ErrorCode::kInvalidArgument, "evolve: time must be finite");
  if (method.method == EvolutionMethod::kExact) return ExactPropagator(h).Apply(psi0, t);

  Require(method.steps >= 1, ErrorCode::kInvalidArgument, "trotter: steps must be positive");
  const double dt = t / method.steps;
  Eigen::VectorXcd psi = psi0.amplitudes();
  Eigen::VectorXcd p_psi(psi.size());
  for (int s = 0; s < method.steps; ++s) {
    for (const auto& term : h.terms()) {
      const double angle = term.coefficient * dt;
      ApplyPauli(term.pauli, psi, p_psi);
      psi = std::cos(angle) * psi - kI * std::sin(angle) * p_psi;
    }
  }
  psi /= psi.norm();
  return QuantumState(psi0.num_qubits(), std::move(psi));
}

GroundState ground_state(const SpinSystem& h) {
  if (h.num_qubits() <= kDenseQubits) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.Dense());
    Require(es.info() == Eigen::Success, ErrorCode::kInternal, "diagonalization failed");
    const auto& ev = es.eigenvalues();
    Eigen::VectorXcd v = es.eigenvectors().col(0);
    v /= v.norm();
    const double gap = ev.size() > 1 ? ev[1] - ev[0] : 0.0;
    return GroundState{ev[0], QuantumState(h.num_qubits(), std::move(v)), gap,
                       ev.size() > 1 && gap < kDegeneracyGap};
  }

  Eigen::VectorXcd v = QuantumState::Random(h.num_qubits(), 0x5eed).amplitudes();
  double energy = 0.0;
  double gap = 0.0;
  for (int restart = 0; restart < 50; ++restart) {
    const Krylov k = BuildKrylov(h, v, 120);
    const auto es = Tridiagonal(k);
    energy = es.eigenvalues()[0];
    gap = es.eigenvalues().size() > 1 ? es.eigenvalues()[1] - energy : 0.0;
    v = k.basis * es.eigenvectors().col(0).cast<Complex>();
    v /= v.norm();
    if ((h.Apply(v) - energy * v).norm() < 1e-10) break;
  }
  return GroundState{energy, QuantumState(h.num_qubits(), std::move(v)), gap, gap < kDegeneracyGap};
}

double EnergyExpectation(const SpinSystem& h, const QuantumState& psi) {
  CheckState(h, psi);
  return psi.amplitudes().dot(h.Apply(psi.amplitudes())).real();
}

}  // namespace benchagg::qsim
