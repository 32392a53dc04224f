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

#include "bench/quadratize.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "common/error.hpp"

namespace benchagg::bench {

double DefaultPenalty(const PseudoBooleanProblem& p) {
  double sum = 0.0;
  for (const auto& [vars, c] : p.terms()) {
    if (!vars.empty()) sum += std::abs(c);
  }
  return 1.0 + sum;
}

Assignment Quadratized::Project(const Assignment& extended) const {
  Require(extended.size() == problem.num_vars(), ErrorCode::kInvalidArgument,
          "assignment length does not match the quadratized problem");
  return Assignment(extended.begin(), extended.begin() + static_cast<std::ptrdiff_t>(original_vars));
}

Assignment Quadratized::Lift(const Assignment& original) const {
  Require(original.size() == original_vars, ErrorCode::kInvalidArgument,
          "assignment length does not match the original problem");
  Assignment out(original);
  out.resize(problem.num_vars(), 0);
  for (const auto& a : ancillas) out[a.var] = out[a.first] & out[a.second];
  return out;
}

Quadratized quadratize(const PseudoBooleanProblem& p, std::optional<double> penalty) {
  Require(p.degree() >= 3, ErrorCode::kInvalidArgument, "quadratize: problem is already quadratic");
  const double m = penalty.value_or(DefaultPenalty(p));
  Require(std::isfinite(m) && m > 0.0, ErrorCode::kInvalidArgument,
          "quadratize: penalty must be positive");

  std::map<Term, double> terms = p.terms();
  std::vector<Ancilla> ancillas;
  auto next_var = static_cast<std::uint32_t>(p.num_vars());

  for (;;) {
    std::size_t top = 0;
    for (const auto& [vars, c] : terms) top = std::max(top, vars.size());
    if (top <= 2) break;

    std::map<std::pair<std::uint32_t, std::uint32_t>, int> counts;
    for (const auto& [vars, c] : terms) {
      if (vars.size() != top) continue;
      for (std::size_t a = 0; a < vars.size(); ++a) {
        for (std::size_t b = a + 1; b < vars.size(); ++b) ++counts[{vars[a], vars[b]}];
      }
    }
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it) {
      if (it->second > best->second) best = it;
    }
    const auto [i, j] = best->first;
    const std::uint32_t y = next_var++;
    ancillas.push_back({y, i, j});

    std::map<Term, double> next;
    for (const auto& [vars, c] : terms) {
      const bool has_i = std::binary_search(vars.begin(), vars.end(), i);
      const bool has_j = std::binary_search(vars.begin(), vars.end(), j);
      if (vars.size() >= 3 && has_i && has_j) {
        Term t;
        for (auto v : vars) {
          if (v != i && v != j) t.push_back(v);
        }
        t.insert(std::upper_bound(t.begin(), t.end(), y), y);
        next[t] += c;
      } else {
        next[vars] += c;
      }
    }
    terms = std::move(next);
  }

  PseudoBooleanProblem out(next_var, p.sense(), p.family(), p.seed());
  for (const auto& [vars, c] : terms) out.AddTerm(vars, c);
  const double sign = p.sense() == Sense::kMinimize ? 1.0 : -1.0;
  for (const auto& a : ancillas) {
    out.AddTerm({a.first, a.second}, sign * m);
    out.AddTerm({a.first, a.var}, -2.0 * sign * m);
    out.AddTerm({a.second, a.var}, -2.0 * sign * m);
    out.AddTerm({a.var}, 3.0 * sign * m);
  }
  return Quadratized{std::move(out), p.num_vars(), m, std::move(ancillas)};
}

}  // namespace benchagg::bench
