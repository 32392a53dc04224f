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

#include "bench/linear_system.hpp"

#include "common/error.hpp"
#include "common/rng.hpp"

namespace benchagg::bench {

LinearSystem GenerateLinearSystem(std::size_t n, std::uint64_t seed) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "linear system: size must be positive");
  Rng rng(seed);
  LinearSystem sys{Eigen::MatrixXd(n, n), Eigen::VectorXd(n)};
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      sys.a(i, j) = rng.Uniform(-1.0, 1.0);
      off += std::abs(sys.a(i, j));
    }
    sys.a(i, i) = off + 1.0 + rng.Uniform();
  }
  for (std::size_t i = 0; i < n; ++i) sys.b(i) = rng.Uniform(-1.0, 1.0);
  return sys;
}

double linear_residual(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                       const Eigen::VectorXd& x) {
  Require(a.rows() == b.size() && a.cols() == x.size(), ErrorCode::kInvalidArgument,
          "linear residual: dimension mismatch");
  const double norm_b = b.norm();
  Require(norm_b > 0.0, ErrorCode::kInvalidArgument, "linear residual: right-hand side is zero");
  return (a * x - b).norm() / norm_b;
}

}  // namespace benchagg::bench
