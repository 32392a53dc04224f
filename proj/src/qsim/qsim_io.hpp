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

#ifndef BENCHAGG_QSIM_QSIM_IO_HPP_
#define BENCHAGG_QSIM_QSIM_IO_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "common/json_util.hpp"
#include "qsim/evolution.hpp"
#include "qsim/hamiltonian.hpp"
#include "qsim/metrics.hpp"
#include "service/record.hpp"

namespace benchagg::qsim {

// {"model": "xxz", "num_qubits": 6, "boundary": "open", "delta": 1.0}
// "g" is used by tfi, "delta" by xxz; custom models list
// "terms": [{"pauli": "X0Z1", "coef": c | [re, im]}].
Json ModelSpecToJson(const ModelSpec& spec);
ModelSpec ModelSpecFromJson(const Json& j, const std::string& path = "model");

// Ideal values and device measurements share this document:
// {"schema_version": 1, "kind": "benchagg.qsim.observables", "model": {...},
//  "initial_state": "000000", "t": 1.0, "method": "exact" | {"trotter": k},
//  "observables": [{"label": "X0", "value": v}, ...], "fidelity": F (optional,
//  measured documents only)}
struct ObservableDocument {
  ModelSpec model;
  std::string initial_state;
  double t = 0.0;
  Evolution method;
  std::vector<std::pair<std::string, double>> values;
  std::optional<double> fidelity;
};

Json ObservableDocumentToJson(const ObservableDocument& d);
ObservableDocument ObservableDocumentFromJson(const Json& j);

// Evolves the product state and evaluates the observables (all weight <= 2
// Paulis when `labels` is empty).
ObservableDocument ComputeIdeal(const ModelSpec& model, const std::string& initial_state, double t,
                                const Evolution& method, const std::vector<std::string>& labels = {});

struct QsimScore {
  double g = 0.0;
  std::size_t observable_count = 0;
  std::optional<double> fidelity;
};

// Recomputes the ideal values for the measured document's model, state and
// time (exact evolution) and compares label by label.
QsimScore ScoreMeasured(const ObservableDocument& measured);

service::BenchmarkRecord QsimRecord(const ObservableDocument& measured, const QsimScore& score,
                                    const std::string& alternative_id, const std::string& timestamp);

}  // namespace benchagg::qsim

#endif  // BENCHAGG_QSIM_QSIM_IO_HPP_
