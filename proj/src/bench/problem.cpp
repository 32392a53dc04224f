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

#include "bench/problem.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "common/error.hpp"

namespace benchagg::bench {

const char* FamilyName(Family f) {
  switch (f) {
    case Family::kMaxCut: return "maxcut";
    case Family::kMatching: return "matching";
    case Family::kHobo: return "hobo";
    case Family::kFactorization: return "factorization";
    case Family::kLinearSystem: return "linear_system";
    case Family::kCustom: return "custom";
  }
  return "custom";
}

Family ParseFamily(const std::string& name) {
  for (Family f : {Family::kMaxCut, Family::kMatching, Family::kHobo, Family::kFactorization,
                   Family::kLinearSystem, Family::kCustom}) {
    if (name == FamilyName(f)) return f;
  }
  Fail(ErrorCode::kValidation, "unknown benchmark family '" + name + "'");
}

PseudoBooleanProblem::PseudoBooleanProblem(std::size_t num_vars, Sense sense, Family family,
                                           std::uint64_t seed)
    : num_vars_(num_vars), sense_(sense), family_(family), seed_(seed) {}

void PseudoBooleanProblem::AddTerm(Term vars, double coefficient) {
  Require(std::isfinite(coefficient), ErrorCode::kInvalidArgument,
          "pseudo-boolean problem: non-finite coefficient");
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (auto v : vars) {
    Require(v < num_vars_, ErrorCode::kInvalidArgument,
            "pseudo-boolean problem: variable index " + std::to_string(v) + " out of range");
  }
  if (coefficient == 0.0) return;
  auto [it, inserted] = terms_.emplace(std::move(vars), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0.0) terms_.erase(it);
  }
}

std::size_t PseudoBooleanProblem::degree() const {
  std::size_t d = 0;
  for (const auto& [t, c] : terms_) d = std::max(d, t.size());
  return d;
}

double PseudoBooleanProblem::constant() const {
  auto it = terms_.find(Term{});
  return it == terms_.end() ? 0.0 : it->second;
}

double PseudoBooleanProblem::MaxAbsCoefficient() const {
  double m = 0.0;
  for (const auto& [t, c] : terms_) {
    if (!t.empty()) m = std::max(m, std::abs(c));
  }
  return m;
}

double PseudoBooleanProblem::Evaluate(const Assignment& a) const {
  Require(a.size() == num_vars_, ErrorCode::kInvalidArgument,
          "assignment has " + std::to_string(a.size()) + " bits, problem has " +
              std::to_string(num_vars_) + " variables");
  for (auto b : a) Require(b <= 1, ErrorCode::kInvalidArgument, "assignment entries must be 0 or 1");
  double sum = 0.0;
  for (const auto& [t, c] : terms_) {
    bool on = true;
    for (auto v : t) {
      if (!a[v]) {
        on = false;
        break;
      }
    }
    if (on) sum += c;
  }
  return sum;
}

double evaluate_solution(const PseudoBooleanProblem& p, const Assignment& a) {
  return p.Evaluate(a);
}

void Graph::Validate() const {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (auto [u, v] : edges) {
    Require(u < num_vertices && v < num_vertices, ErrorCode::kValidation,
            "graph: edge endpoint out of range");
    Require(u != v, ErrorCode::kValidation, "graph: self-loop on vertex " + std::to_string(u));
    Require(u < v, ErrorCode::kValidation,
            "graph: edge {" + std::to_string(u) + ", " + std::to_string(v) + "} not stored as u < v");
    Require(seen.emplace(std::min(u, v), std::max(u, v)).second, ErrorCode::kValidation,
            "graph: duplicate edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
  }
  if (side) {
    Require(side->size() == num_vertices, ErrorCode::kValidation,
            "graph: bipartition does not cover every vertex");
    for (auto [u, v] : edges) {
      Require((*side)[u] != (*side)[v], ErrorCode::kValidation,
              "graph: edge {" + std::to_string(u) + ", " + std::to_string(v) +
                  "} does not cross the bipartition");
    }
  }
}

std::size_t Graph::MaxDegree() const {
  std::vector<std::size_t> deg(num_vertices, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

}  // namespace benchagg::bench
