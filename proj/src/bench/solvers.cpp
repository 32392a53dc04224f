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

#include "bench/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>

#include "bench/external_solver.hpp"
#include "common/error.hpp"
#include "common/rng.hpp"

namespace benchagg::bench {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Term/zero-count bookkeeping shared by the exhaustive and annealing solvers.
// A term is active when none of its variables is zero, so flipping x_i only
// touches terms containing i: 1 -> 0 removes active terms, 0 -> 1 activates
// terms where i was the last zero.
class IncrementalEnergy {
 public:
  explicit IncrementalEnergy(const PseudoBooleanProblem& p) : n_(p.num_vars()), incident_(n_) {
    const double sign = p.sense() == Sense::kMinimize ? 1.0 : -1.0;
    for (const auto& [vars, c] : p.terms()) {
      if (vars.empty()) continue;
      const auto t = static_cast<std::uint32_t>(coef_.size());
      coef_.push_back(sign * c);
      vars_.push_back(vars);
      for (auto v : vars) incident_[v].push_back(t);
    }
    zeros_.resize(coef_.size());
  }

  void Reset(const Assignment& a) {
    x_ = a;
    energy_ = 0.0;
    for (std::size_t t = 0; t < coef_.size(); ++t) {
      int z = 0;
      for (auto v : vars_[t]) z += x_[v] ? 0 : 1;
      zeros_[t] = z;
      if (z == 0) energy_ += coef_[t];
    }
  }

  double Delta(std::size_t i) const {
    double d = 0.0;
    if (x_[i]) {
      for (auto t : incident_[i]) {
        if (zeros_[t] == 0) d -= coef_[t];
      }
    } else {
      for (auto t : incident_[i]) {
        if (zeros_[t] == 1) d += coef_[t];
      }
    }
    return d;
  }

  void Flip(std::size_t i, double delta) {
    const int step = x_[i] ? 1 : -1;
    for (auto t : incident_[i]) zeros_[t] += step;
    x_[i] ^= 1;
    energy_ += delta;
  }

  const Assignment& x() const { return x_; }
  double energy() const { return energy_; }
  std::size_t n() const { return n_; }

  double MinAbsCoefficient() const {
    double m = 0.0;
    for (double c : coef_) {
      if (m == 0.0 || std::abs(c) < m) m = std::abs(c);
    }
    return m;
  }
  double MaxAbsCoefficient() const {
    double m = 0.0;
    for (double c : coef_) m = std::max(m, std::abs(c));
    return m;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<double> coef_;
  std::vector<Term> vars_;
  std::vector<int> zeros_;
  Assignment x_;
  double energy_ = 0.0;
};

}  // namespace

const char* MethodName(Method m) {
  switch (m) {
    case Method::kRandom: return "random";
    case Method::kExhaustive: return "exhaustive";
    case Method::kSimulatedAnnealing: return "sa";
    case Method::kExternal: return "external";
  }
  return "random";
}

Method ParseMethod(const std::string& name) {
  if (name == "random") return Method::kRandom;
  if (name == "exhaustive") return Method::kExhaustive;
  if (name == "sa" || name == "simulated_annealing") return Method::kSimulatedAnnealing;
  if (name == "external") return Method::kExternal;
  Fail(ErrorCode::kValidation, "unknown solver '" + name + "'");
}

SolveResult SolveRandom(const PseudoBooleanProblem& p, std::uint64_t seed) {
  const auto start = Clock::now();
  Rng rng(seed);
  SolveResult r;
  r.assignment.resize(p.num_vars());
  for (auto& b : r.assignment) b = rng.Bernoulli(0.5) ? 1 : 0;
  r.objective = p.Evaluate(r.assignment);
  r.wall_clock_seconds = Seconds(start);
  r.solver = Json{{"name", "random"}, {"seed", seed}};
  return r;
}

SolveResult SolveExhaustive(const PseudoBooleanProblem& p) {
  const std::size_t n = p.num_vars();
  Require(n <= kExhaustiveMaxVars, ErrorCode::kUnsupported,
          "exhaustive solver is limited to " + std::to_string(kExhaustiveMaxVars) +
              " variables, problem has " + std::to_string(n));
  const auto start = Clock::now();
  IncrementalEnergy state(p);
  state.Reset(Assignment(n, 0));
  double best = state.energy();
  std::uint64_t best_code = 0;
  std::uint64_t code = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < total; ++k) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(k));
    state.Flip(bit, state.Delta(bit));
    code ^= std::uint64_t{1} << bit;
    const double e = state.energy();
    const double tol = 1e-9 * std::max(1.0, std::abs(best));
    if (e < best - tol) {
      best = e;
      best_code = code;
    } else if (e <= best + tol && code < best_code) {
      best_code = code;
    }
  }
  SolveResult r;
  r.assignment.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.assignment[i] = (best_code >> i) & 1U;
  r.objective = p.Evaluate(r.assignment);
  r.wall_clock_seconds = Seconds(start);
  r.solver = Json{{"name", "exhaustive"}};
  return r;
}

SolveResult SolveAnnealing(const PseudoBooleanProblem& p, std::size_t sweeps,
                           std::size_t restarts, std::uint64_t seed) {
  Require(sweeps >= 1 && restarts >= 1, ErrorCode::kInvalidArgument,
          "annealing budget must be at least one sweep and one restart");
  const auto start = Clock::now();
  const std::size_t n = p.num_vars();
  IncrementalEnergy state(p);
  Rng rng(seed);

  const double t0 = std::max(state.MaxAbsCoefficient(), 1e-12);
  const double t_end = std::min(t0, std::max(0.05 * state.MinAbsCoefficient(), 1e-12));
  const double alpha = sweeps > 1 ? std::pow(t_end / t0, 1.0 / static_cast<double>(sweeps - 1)) : 1.0;

  Assignment best_x(n, 0);
  double best = 0.0;
  bool have_best = false;
  Assignment x(n);
  for (std::size_t r = 0; r < restarts; ++r) {
    for (auto& b : x) b = rng.Bernoulli(0.5) ? 1 : 0;
    state.Reset(x);
    if (!have_best || state.energy() < best) {
      best = state.energy();
      best_x = state.x();
      have_best = true;
    }
    double temp = t0;
    for (std::size_t s = 0; s < sweeps; ++s, temp *= alpha) {
      for (std::size_t i = 0; i < n; ++i) {
        const double d = state.Delta(i);
        if (d <= 0.0 || rng.Uniform() < std::exp(-d / temp)) {
          state.Flip(i, d);
          if (state.energy() < best - 1e-12) {
            best = state.energy();
            best_x = state.x();
          }
        }
      }
    }
  }
  SolveResult res;
  res.assignment = best_x;
  res.objective = p.Evaluate(best_x);
  res.wall_clock_seconds = Seconds(start);
  res.solver = Json{{"name", "sa"}, {"seed", seed}, {"sweeps", sweeps}, {"restarts", restarts}};
  return res;
}

SolveResult solve(const PseudoBooleanProblem& p, const SolverSpec& spec) {
  switch (spec.method) {
    case Method::kRandom: return SolveRandom(p, spec.seed);
    case Method::kExhaustive: return SolveExhaustive(p);
    case Method::kSimulatedAnnealing: return SolveAnnealing(p, spec.sweeps, spec.restarts, spec.seed);
    case Method::kExternal: return SolveExternal(p, spec.adapter);
  }
  Fail(ErrorCode::kInternal, "unhandled solver method");
}

}  // namespace benchagg::bench
