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

#ifndef BENCHAGG_BENCH_LINEAR_SYSTEM_HPP_
#define BENCHAGG_BENCH_LINEAR_SYSTEM_HPP_

#include <cstdint>

#include <Eigen/Dense>

namespace benchagg::bench {

struct LinearSystem {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
};

// Strictly diagonally dominant random matrix (condition number bounded
// independently of n) and a uniform right-hand side.
LinearSystem GenerateLinearSystem(std::size_t n, std::uint64_t seed);

// ||A x - b||_2 / ||b||_2.
double linear_residual(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                       const Eigen::VectorXd& x);

}  // namespace benchagg::bench

#endif  // BENCHAGG_BENCH_LINEAR_SYSTEM_HPP_
