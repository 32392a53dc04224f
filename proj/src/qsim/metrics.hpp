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

#ifndef BENCHAGG_QSIM_METRICS_HPP_
#define BENCHAGG_QSIM_METRICS_HPP_

#include <map>
#include <string>
#include <vector>

#include "qsim/pauli.hpp"
#include "qsim/state.hpp"

namespace benchagg::qsim {

struct Observable {
  std::string label;
  PauliString pauli;
};

class ObservableSet {
 public:
  // Throws kValidation on duplicate labels, identity or weight > 2.
  explicit ObservableSet(std::vector<Observable> observables);

  // "X0", "Z1Z3", ... labels, canonicalized.
  static ObservableSet FromLabels(const std::vector<std::string>& labels);

  // X_i, Y_i, Z_i for every qubit, then the 9 products P_i Q_j for each i < j.
  static ObservableSet AllWeightTwo(int num_qubits);

  const std::vector<Observable>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

 private:
  std::vector<Observable> items_;
};

using ExpectationMap = std::map<std::string, double>;

double Expectation(const QuantumState& psi, const PauliString& p);
double Expectation(const DensityMatrix& rho, const PauliString& p);

ExpectationMap expectation_set(const QuantumState& psi, const ObservableSet& obs);
ExpectationMap expectation_set(const DensityMatrix& rho, const ObservableSet& obs);

// G = sum |m - o|; throws kValidation when the label sets differ.
double infidelity_proxy(const ExpectationMap& measured, const ExpectationMap& ideal);

// <psi| rho |psi>. rho is validated on construction.
double fidelity(const DensityMatrix& rho, const QuantumState& psi);

}  // namespace benchagg::qsim

#endif  // BENCHAGG_QSIM_METRICS_HPP_
