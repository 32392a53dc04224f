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

#include "qsim/hamiltonian.hpp"

#include <cmath>

#include "common/error.hpp"

namespace benchagg::qsim {

const char* SpinModelName(SpinModel m) {
  switch (m) {
    case SpinModel::kXY: return "xy";
    case SpinModel::kTransverseFieldIsing: return "tfi";
    case SpinModel::kXXZ: return "xxz";
    case SpinModel::kCustom: return "custom";
  }
  return "custom";
}

SpinModel ParseSpinModel(const std::string& name) {
  for (SpinModel m : {SpinModel::kXY, SpinModel::kTransverseFieldIsing, SpinModel::kXXZ,
                      SpinModel::kCustom}) {
    if (name == SpinModelName(m)) return m;
  }
  Fail(ErrorCode::kValidation, "unknown spin model '" + name + "' (xy, tfi, xxz, custom)");
}

const char* BoundaryName(Boundary b) { return b == Boundary::kOpen ? "open" : "periodic"; }

Boundary ParseBoundary(const std::string& name) {
  if (name == "open") return Boundary::kOpen;
  if (name == "periodic") return Boundary::kPeriodic;
  Fail(ErrorCode::kValidation, "unknown boundary '" + name + "' (open, periodic)");
}

SpinSystem::SpinSystem(ModelSpec spec, std::vector<PauliTerm> terms)
    : spec_(std::move(spec)), terms_(std::move(terms)) {}

double SpinSystem::NormBound() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coefficient);
  return s;
}

void ApplyPauli(const PauliString& p, const Eigen::VectorXcd& psi, Eigen::VectorXcd& out) {
  out.resize(psi.size());
  const auto dim = static_cast<std::uint64_t>(psi.size());
  for (std::uint64_t b = 0; b < dim; ++b) out[static_cast<Eigen::Index>(b ^ p.x)] = p.Phase(b) * psi[static_cast<Eigen::Index>(b)];
}

Eigen::VectorXcd SpinSystem::Apply(const Eigen::VectorXcd& psi) const {
  Require(static_cast<std::size_t>(psi.size()) == dim(), ErrorCode::kInvalidArgument,
          "hamiltonian: state dimension mismatch");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
  const auto d = static_cast<std::uint64_t>(psi.size());
  for (const auto& t : terms_) {
    for (std::uint64_t b = 0; b < d; ++b) {
      out[static_cast<Eigen::Index>(b ^ t.pauli.x)] +=
          t.coefficient * t.pauli.Phase(b) * psi[static_cast<Eigen::Index>(b)];
    }
  }
  return out;
}

Eigen::MatrixXcd SpinSystem::Dense() const {
  const auto d = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& t : terms_) {
    for (std::uint64_t b = 0; b < dim(); ++b) {
      h(static_cast<Eigen::Index>(b ^ t.pauli.x), static_cast<Eigen::Index>(b)) +=
          t.coefficient * t.pauli.Phase(b);
    }
  }
  return h;
}

SpinSystem build_hamiltonian(const ModelSpec& spec) {
  const int n = spec.num_qubits;
  Require(n >= 1 && n <= kMaxQubits, ErrorCode::kValidation,
          "hamiltonian: num_qubits must lie in [1, " + std::to_string(kMaxQubits) + "], got " +
              std::to_string(n));
  std::vector<PauliTerm> terms;
  std::vector<std::pair<int, int>> bonds;
  for (int i = 0; i + 1 < n; ++i) bonds.emplace_back(i, i + 1);
  if (spec.boundary == Boundary::kPeriodic && n > 2) bonds.emplace_back(n - 1, 0);

  auto two = [](char a, int i, char b, int j) {
    PauliString p = PauliString::Single(a, i);
    PauliString q = PauliString::Single(b, j);
    return PauliString{p.x | q.x, p.z | q.z};
  };

  switch (spec.model) {
    case SpinModel::kXY:
      for (auto [i, j] : bonds) {
        terms.push_back({1.0, two('X', i, 'X', j)});
        terms.push_back({1.0, two('Y', i, 'Y', j)});
      }
      break;
    case SpinModel::kTransverseFieldIsing:
      for (auto [i, j] : bonds) terms.push_back({-1.0, two('Z', i, 'Z', j)});
      if (spec.g != 0.0) {
        for (int i = 0; i < n; ++i) terms.push_back({-spec.g, PauliString::Single('X', i)});
      }
      break;
    case SpinModel::kXXZ:
      for (auto [i, j] : bonds) {
        terms.push_back({1.0, two('X', i, 'X', j)});
        terms.push_back({1.0, two('Y', i, 'Y', j)});
        if (spec.delta != 0.0) terms.push_back({spec.delta, two('Z', i, 'Z', j)});
      }
      break;
    case SpinModel::kCustom:
      for (const auto& [c, p] : spec.custom_terms) {
        Require(std::isfinite(c.real()) && std::isfinite(c.imag()), ErrorCode::kValidation,
                "hamiltonian: non-finite coefficient on " + p.Label());
        Require(c.imag() == 0.0, ErrorCode::kValidation,
                "hamiltonian: term " + p.Label() +
                    " has a complex coefficient, the operator would not be Hermitian");
        Require(p.MaxQubit() < n, ErrorCode::kValidation,
                "hamiltonian: term " + p.Label() + " acts outside " + std::to_string(n) + " qubits");
        terms.push_back({c.real(), p});
      }
      break;
  }
  for (const auto& t : terms) {
    Require(std::isfinite(t.coefficient), ErrorCode::kValidation,
            "hamiltonian: non-finite parameter");
  }
  return SpinSystem(spec, std::move(terms));
}

}  // namespace benchagg::qsim
