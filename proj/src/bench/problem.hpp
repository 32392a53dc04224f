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

#ifndef BENCHAGG_BENCH_PROBLEM_HPP_
#define BENCHAGG_BENCH_PROBLEM_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace benchagg::bench {

enum class Family { kMaxCut, kMatching, kHobo, kFactorization, kLinearSystem, kCustom };

const char* FamilyName(Family f);
Family ParseFamily(const std::string& name);

enum class Sense { kMinimize, kMaximize };

using Assignment = std::vector<std::uint8_t>;
using Term = std::vector<std::uint32_t>;  // sorted, duplicate-free variable indices

// Multilinear polynomial over binary variables. An empty term is the
// constant. Terms are merged on insertion (x_i^2 = x_i) and zero coefficients
// are dropped, so two problems with the same function have the same terms.
class PseudoBooleanProblem {
 public:
  PseudoBooleanProblem(std::size_t num_vars, Sense sense, Family family = Family::kCustom,
                       std::uint64_t seed = 0);

  void AddTerm(Term vars, double coefficient);

  std::size_t num_vars() const { return num_vars_; }
  Sense sense() const { return sense_; }
  Family family() const { return family_; }
  std::uint64_t seed() const { return seed_; }
  const std::map<Term, double>& terms() const { return terms_; }
  // Largest term length (0 for a constant polynomial).
  std::size_t degree() const;
  bool is_qubo() const { return degree() <= 2; }
  double constant() const;
  double MaxAbsCoefficient() const;  // over non-constant terms

  double Evaluate(const Assignment& a) const;

  friend bool operator==(const PseudoBooleanProblem&, const PseudoBooleanProblem&) = default;

 private:
  std::size_t num_vars_;
  Sense sense_;
  Family family_;
  std::uint64_t seed_;
  std::map<Term, double> terms_;
};

double evaluate_solution(const PseudoBooleanProblem& p, const Assignment& a);

// True when `a` is strictly better than `b` under the problem's sense.
inline bool Better(Sense s, double a, double b) { return s == Sense::kMinimize ? a < b : a > b; }

struct Graph {
  std::size_t num_vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // u < v
  std::optional<std::vector<std::uint8_t>> side;               // bipartition, 0/1 per vertex

  // Throws kValidation on self-loops, duplicates, out-of-range vertices, or a
  // bipartition that some edge does not cross.
  void Validate() const;
  std::size_t MaxDegree() const;
};

}  // namespace benchagg::bench

#endif  // BENCHAGG_BENCH_PROBLEM_HPP_
