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

#ifndef BENCHAGG_QSIM_HAMILTONIAN_HPP_
#define BENCHAGG_QSIM_HAMILTONIAN_HPP_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsim/pauli.hpp"

namespace benchagg::qsim {

enum class SpinModel { kXY, kTransverseFieldIsing, kXXZ, kCustom };
enum class Boundary { kOpen, kPeriodic };

const char* SpinModelName(SpinModel m);  // xy, tfi, xxz, custom
SpinModel ParseSpinModel(const std::string& name);
const char* BoundaryName(Boundary b);  // open, periodic
Boundary ParseBoundary(const std::string& name);

struct PauliTerm {
  double coefficient = 0.0;
  PauliString pauli;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

// Input to build_hamiltonian. Custom terms carry a complex coefficient so that
// non-Hermitian input can be reported instead of silently truncated.
struct ModelSpec {
  SpinModel model = SpinModel::kXY;
  int num_qubits = 2;
  double g = 1.0;      // transverse field (TFI)
  double delta = 1.0;  // anisotropy (XXZ)
  Boundary boundary = Boundary::kOpen;
  std::vector<std::pair<Complex, PauliString>> custom_terms;

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

class SpinSystem {
 public:
  SpinSystem(ModelSpec spec, std::vector<PauliTerm> terms);

  int num_qubits() const { return spec_.num_qubits; }
  std::size_t dim() const { return std::size_t{1} << spec_.num_qubits; }
  const ModelSpec& spec() const { return spec_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }

  // Sum of |coefficient|, an upper bound on the spectral norm.
  double NormBound() const;

  // H |psi>, matrix-free.
  Eigen::VectorXcd Apply(const Eigen::VectorXcd& psi) const;
  // Dense 2^n x 2^n matrix; intended for n <= 10.
  Eigen::MatrixXcd Dense() const;

 private:
  ModelSpec spec_;
  std::vector<PauliTerm> terms_;
};

// XY: sum (X_i X_{i+1} + Y_i Y_{i+1}); TFI: -sum Z_i Z_{i+1} - g sum X_i;
// XXZ: sum (X_i X_{i+1} + Y_i Y_{i+1} + delta Z_i Z_{i+1}); Custom: verbatim.
// Periodic boundaries add the (n-1, 0) bond for n > 2. Throws kValidation for
// n outside [1, 14], terms outside the register or a non-real coefficient.
SpinSystem build_hamiltonian(const ModelSpec& spec);

// Applies a Pauli string: out = P psi.
void ApplyPauli(const PauliString& p, const Eigen::VectorXcd& psi, Eigen::VectorXcd& out);

}  // namespace benchagg::qsim

#endif  // BENCHAGG_QSIM_HAMILTONIAN_HPP_
