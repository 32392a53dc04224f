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

#include "qsim/metrics.hpp"

#include <cmath>
#include <set>

#include "common/error.hpp"

namespace benchagg::qsim {

ObservableSet::ObservableSet(std::vector<Observable> observables) : items_(std::move(observables)) {
  std::set<std::string> seen;
  for (const auto& o : items_) {
    Require(seen.insert(o.label).second, ErrorCode::kValidation,
            "observables: duplicate label '" + o.label + "'");
    Require(o.pauli.Weight() >= 1 && o.pauli.Weight() <= 2, ErrorCode::kValidation,
            "observables: '" + o.label + "' must have weight 1 or 2");
  }
}

ObservableSet ObservableSet::FromLabels(const std::vector<std::string>& labels) {
  std::vector<Observable> obs;
  for (const auto& l : labels) {
    const PauliString p = PauliString::Parse(l);
    obs.push_back({p.Label(), p});
  }
  return ObservableSet(std::move(obs));
}

ObservableSet ObservableSet::AllWeightTwo(int num_qubits) {
  Require(num_qubits >= 1 && num_qubits <= kMaxQubits, ErrorCode::kValidation,
          "observables: qubit count out of range");
  static constexpr char kOps[] = {'X', 'Y', 'Z'};
  std::vector<Observable> obs;
  for (int i = 0; i < num_qubits; ++i) {
    for (char a : kOps) {
      const PauliString p = PauliString::Single(a, i);
      obs.push_back({p.Label(), p});
    }
  }
  for (int i = 0; i < num_qubits; ++i) {
    for (int j = i + 1; j < num_qubits; ++j) {
      for (char a : kOps) {
        for (char b : kOps) {
          const PauliString pa = PauliString::Single(a, i);
          const PauliString pb = PauliString::Single(b, j);
          const PauliString p{pa.x | pb.x, pa.z | pb.z};
          obs.push_back({p.Label(), p});
        }
      }
    }
  }
  return ObservableSet(std::move(obs));
}

namespace {

void CheckRange(const PauliString& p, int n) {
  Require(p.MaxQubit() < n, ErrorCode::kInvalidArgument,
          "observable " + p.Label() + " acts outside " + std::to_string(n) + " qubits");
}

}  // namespace

double Expectation(const QuantumState& psi, const PauliString& p) {
  CheckRange(p, psi.num_qubits());
  const auto& a = psi.amplitudes();
  Complex sum = 0.0;
  for (std::uint64_t b = 0; b < psi.dim(); ++b) {
    sum += std::conj(a[static_cast<Eigen::Index>(b ^ p.x)]) * p.Phase(b) *
           a[static_cast<Eigen::Index>(b)];
  }
  return sum.real();
}

double Expectation(const DensityMatrix& rho, const PauliString& p) {
  CheckRange(p, rho.num_qubits());
  // Tr(rho P) = sum_c <c|rho P|c> = sum_c phase(c) rho[c, c ^ x].
  const auto& m = rho.matrix();
  Complex sum = 0.0;
  for (Eigen::Index c = 0; c < m.rows(); ++c) {
    sum += p.Phase(static_cast<std::uint64_t>(c)) * m(c, c ^ static_cast<Eigen::Index>(p.x));
  }
  return sum.real();
}

ExpectationMap expectation_set(const QuantumState& psi, const ObservableSet& obs) {
  ExpectationMap out;
  for (const auto& o : obs.items()) out[o.label] = Expectation(psi, o.pauli);
  return out;
}

ExpectationMap expectation_set(const DensityMatrix& rho, const ObservableSet& obs) {
  ExpectationMap out;
  for (const auto& o : obs.items()) out[o.label] = Expectation(rho, o.pauli);
  return out;
}

double infidelity_proxy(const ExpectationMap& measured, const ExpectationMap& ideal) {
  for (const auto& [label, v] : measured) {
    Require(ideal.count(label) == 1, ErrorCode::kValidation,
            "infidelity proxy: '" + label + "' has no ideal value");
  }
  for (const auto& [label, v] : ideal) {
    Require(measured.count(label) == 1, ErrorCode::kValidation,
            "infidelity proxy: '" + label + "' was not measured");
  }
  double g = 0.0;
  for (const auto& [label, o] : ideal) {
    const double m = measured.at(label);
    Require(std::isfinite(m), ErrorCode::kValidation,
            "infidelity proxy: non-finite measurement for '" + label + "'");
    g += std::abs(m - o);
  }
  return g;
}

double fidelity(const DensityMatrix& rho, const QuantumState& psi) {
  Require(rho.num_qubits() == psi.num_qubits(), ErrorCode::kInvalidArgument,
          "fidelity: qubit count mismatch");
  return psi.amplitudes().dot(rho.matrix() * psi.amplitudes()).real();
}

}  // namespace benchagg::qsim
