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

#include "elicitation/simplex.hpp"

#include <cmath>
#include <limits>

#include "common/error.hpp"

namespace benchagg::elicitation {

namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& lp, double tol) : tol_(tol) {
    m_ = lp.b.size();
    n_ = lp.c.size();
    Require(lp.a.size() == m_, ErrorCode::kInvalidArgument, "lp: row count mismatch");
    cols_ = n_ + m_;  // originals then one artificial per row
    t_.assign(m_ + 1, std::vector<double>(cols_ + 1, 0.0));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      Require(lp.a[i].size() == n_, ErrorCode::kInvalidArgument, "lp: column count mismatch");
      const double sign = lp.b[i] < 0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = sign * lp.a[i][j];
      t_[i][n_ + i] = 1.0;
      t_[i][cols_] = sign * lp.b[i];
      basis_[i] = n_ + i;
    }
    allowed_.assign(cols_, true);
  }

  // Phase 1: drive the artificial variables to zero.
  bool FindFeasible() {
    auto& z = t_[m_];
    std::fill(z.begin(), z.end(), 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) z[j] -= t_[i][j];
      z[cols_] -= t_[i][cols_];
    }
    if (Iterate() != LpStatus::kOptimal) return false;
    if (-t_[m_][cols_] > 1e3 * tol_ * (1.0 + MaxRhs())) return false;
    // Pivot remaining zero-level artificials out where possible.
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (std::abs(t_[i][j]) > tol_) {
          Pivot(i, j);
          break;
        }
      }
    }
    for (std::size_t j = n_; j < cols_; ++j) allowed_[j] = false;
    return true;
  }

  LpStatus Optimize(const std::vector<double>& c) {
    auto& z = t_[m_];
    std::fill(z.begin(), z.end(), 0.0);
    for (std::size_t j = 0; j < n_; ++j) z[j] = c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t bj = basis_[i];
      const double cb = bj < n_ ? c[bj] : 0.0;
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) z[j] -= cb * t_[i][j];
    }
    return Iterate();
  }

  std::vector<double> Solution() const {
    std::vector<double> x(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = std::max(0.0, t_[i][cols_]);
    }
    return x;
  }

 private:
  double MaxRhs() const {
    double m = 0.0;
    for (std::size_t i = 0; i < m_; ++i) m = std::max(m, std::abs(t_[i][cols_]));
    return m;
  }

  LpStatus Iterate() {
    const std::size_t max_iter = 50000;
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed_[j] && t_[m_][j] < -tol_) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return LpStatus::kOptimal;
      std::size_t leave = m_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = t_[i][enter];
        if (a <= tol_) continue;
        const double ratio = t_[i][cols_] / a;
        if (leave == m_ || ratio < best - tol_) {
          best = ratio;
          leave = i;
        } else if (ratio <= best + tol_ && basis_[i] < basis_[leave]) {
          leave = i;
        }
      }
      if (leave == m_) return LpStatus::kUnbounded;
      Pivot(leave, enter);
    }
    Fail(ErrorCode::kInternal, "lp: iteration limit reached");
  }

  void Pivot(std::size_t row, std::size_t col) {
    const double p = t_[row][col];
    for (double& v : t_[row]) v /= p;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const double f = t_[i][col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[row][j];
      t_[i][col] = 0.0;
    }
    basis_[row] = col;
  }

  double tol_;
  std::size_t m_ = 0, n_ = 0, cols_ = 0;
  std::vector<std::vector<double>> t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
};

}  // namespace

LpSolution SolveLinearProgram(const LinearProgram& lp, double tolerance) {
  Require(lp.c.size() > 0, ErrorCode::kInvalidArgument, "lp: no variables");
  Tableau tab(lp, tolerance);
  LpSolution sol;
  if (!tab.FindFeasible()) {
    sol.status = LpStatus::kInfeasible;
    return sol;
  }
  sol.status = tab.Optimize(lp.c);
  sol.x = tab.Solution();
  for (std::size_t j = 0; j < lp.c.size(); ++j) sol.objective += lp.c[j] * sol.x[j];
  return sol;
}

}  // namespace benchagg::elicitation
