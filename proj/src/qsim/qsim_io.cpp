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

#include "qsim/qsim_io.hpp"

#include <cmath>
#include <sstream>

#include "common/error.hpp"

namespace benchagg::qsim {
namespace {

ExpectationMap ToMap(const std::vector<std::pair<std::string, double>>& values) {
  ExpectationMap m;
  for (const auto& [label, v] : values) {
    const std::string canon = PauliString::Parse(label).Label();
    Require(m.emplace(canon, v).second, ErrorCode::kValidation,
            "observables: duplicate label '" + canon + "'");
  }
  return m;
}

std::string FormatTime(double t) {
  std::ostringstream s;
  s.precision(12);
  s << t;
  return s.str();
}

}  // namespace

Json ModelSpecToJson(const ModelSpec& spec) {
  Json j{{"model", SpinModelName(spec.model)},
         {"num_qubits", spec.num_qubits},
         {"boundary", BoundaryName(spec.boundary)}};
  if (spec.model == SpinModel::kTransverseFieldIsing) j["g"] = spec.g;
  if (spec.model == SpinModel::kXXZ) j["delta"] = spec.delta;
  if (spec.model == SpinModel::kCustom) {
    Json terms = Json::array();
    for (const auto& [c, p] : spec.custom_terms) {
      Json coef = c.imag() == 0.0 ? Json(c.real()) : Json::array({c.real(), c.imag()});
      terms.push_back(Json{{"pauli", p.Label()}, {"coef", std::move(coef)}});
    }
    j["terms"] = std::move(terms);
  }
  return j;
}

ModelSpec ModelSpecFromJson(const Json& j, const std::string& path) {
  ModelSpec s;
  s.model = ParseSpinModel(RequireString(j, "model", path));
  const double n = RequireNumber(j, "num_qubits", path);
  Require(n == std::floor(n), ErrorCode::kValidation, path + ".num_qubits: expected an integer");
  s.num_qubits = static_cast<int>(n);
  if (j.contains("boundary")) s.boundary = ParseBoundary(AsString(j["boundary"], path + ".boundary"));
  if (j.contains("g")) s.g = AsNumber(j["g"], path + ".g");
  if (j.contains("delta")) s.delta = AsNumber(j["delta"], path + ".delta");
  if (s.model == SpinModel::kCustom) {
    const Json& terms = RequireField(j, "terms", path);
    Require(terms.is_array(), ErrorCode::kValidation, path + ".terms: expected an array");
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::string tp = path + ".terms[" + std::to_string(k) + "]";
      const PauliString p = PauliString::Parse(RequireString(terms[k], "pauli", tp));
      const Json& c = RequireField(terms[k], "coef", tp);
      Complex coef;
      if (c.is_array()) {
        Require(c.size() == 2, ErrorCode::kValidation, tp + ".coef: expected [re, im]");
        coef = {AsNumber(c[0], tp + ".coef[0]"), AsNumber(c[1], tp + ".coef[1]")};
      } else {
        coef = AsNumber(c, tp + ".coef");
      }
      s.custom_terms.emplace_back(coef, p);
    }
  }
  return s;
}

Json ObservableDocumentToJson(const ObservableDocument& d) {
  Json obs = Json::array();
  for (const auto& [label, v] : d.values) obs.push_back(Json{{"label", label}, {"value", v}});
  Json j{{"schema_version", 1},
         {"kind", "benchagg.qsim.observables"},
         {"model", ModelSpecToJson(d.model)},
         {"initial_state", d.initial_state},
         {"t", d.t},
         {"method", d.method.method == EvolutionMethod::kExact
                        ? Json("exact")
                        : Json{{"trotter", d.method.steps}}},
         {"observables", std::move(obs)}};
  if (d.fidelity) j["fidelity"] = *d.fidelity;
  return j;
}

ObservableDocument ObservableDocumentFromJson(const Json& j) {
  const std::string path = "qsim";
  Require(j.is_object(), ErrorCode::kValidation, "qsim document: expected an object");
  ObservableDocument d;
  d.model = ModelSpecFromJson(RequireField(j, "model", path), path + ".model");
  d.initial_state = j.contains("initial_state")
                        ? AsString(j["initial_state"], path + ".initial_state")
                        : std::string(static_cast<std::size_t>(std::max(d.model.num_qubits, 0)), '0');
  d.t = RequireNumber(j, "t", path);
  if (j.contains("method")) {
    const Json& m = j["method"];
    if (m.is_string() && m.get<std::string>() == "exact") {
      d.method = Evolution::Exact();
    } else if (m.is_object() && m.contains("trotter") && m["trotter"].is_number_integer()) {
      d.method = Evolution::Trotter(m["trotter"].get<int>());
    } else {
      Fail(ErrorCode::kValidation, path + ".method: expected \"exact\" or {\"trotter\": steps}");
    }
  }
  const Json& obs = RequireField(j, "observables", path);
  Require(obs.is_array(), ErrorCode::kValidation, path + ".observables: expected an array");
  for (std::size_t k = 0; k < obs.size(); ++k) {
    const std::string op = path + ".observables[" + std::to_string(k) + "]";
    d.values.emplace_back(RequireString(obs[k], "label", op), RequireNumber(obs[k], "value", op));
  }
  if (j.contains("fidelity") && !j["fidelity"].is_null()) {
    const double f = AsNumber(j["fidelity"], path + ".fidelity");
    Require(f >= -1e-9 && f <= 1.0 + 1e-9, ErrorCode::kValidation,
            path + ".fidelity: must lie in [0, 1]");
    d.fidelity = f;
  }
  return d;
}

ObservableDocument ComputeIdeal(const ModelSpec& model, const std::string& initial_state, double t,
                                const Evolution& method, const std::vector<std::string>& labels) {
  const SpinSystem h = build_hamiltonian(model);
  Require(static_cast<int>(initial_state.size()) == model.num_qubits, ErrorCode::kValidation,
          "initial state must give one character per qubit");
  const QuantumState psi = evolve(h, QuantumState::Product(initial_state), t, method);
  const ObservableSet obs =
      labels.empty() ? ObservableSet::AllWeightTwo(model.num_qubits) : ObservableSet::FromLabels(labels);
  ObservableDocument d;
  d.model = model;
  d.initial_state = initial_state;
  d.t = t;
  d.method = method;
  for (const auto& o : obs.items()) d.values.emplace_back(o.label, Expectation(psi, o.pauli));
  return d;
}

QsimScore ScoreMeasured(const ObservableDocument& measured) {
  std::vector<std::string> labels;
  for (const auto& [label, v] : measured.values) labels.push_back(label);
  Require(!labels.empty(), ErrorCode::kValidation, "qsim score: no observables measured");
  const ObservableDocument ideal = ComputeIdeal(measured.model, measured.initial_state, measured.t,
                                                Evolution::Exact(), labels);
  QsimScore s;
  s.g = infidelity_proxy(ToMap(measured.values), ToMap(ideal.values));
  s.observable_count = labels.size();
  s.fidelity = measured.fidelity;
  return s;
}

service::BenchmarkRecord QsimRecord(const ObservableDocument& measured, const QsimScore& score,
                                    const std::string& alternative_id, const std::string& timestamp) {
  service::BenchmarkRecord r;
  r.alternative_id = alternative_id;
  r.family = "qsim";
  r.instance = std::string(SpinModelName(measured.model.model)) + "/n=" +
               std::to_string(measured.model.num_qubits) + "/t=" + FormatTime(measured.t);
  r.metrics["G"] = score.g;
  r.metrics["observables"] = static_cast<double>(score.observable_count);
  if (score.fidelity) r.metrics["F"] = *score.fidelity;
  r.timestamp = timestamp;
  r.provenance.kind = service::ProvenanceKind::kExternal;
  r.provenance.source = "measured observables";
  return r;
}

}  // namespace benchagg::qsim
