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

#include "explanation/shapley.hpp"

#include <bit>
#include <cstdint>

#include "common/error.hpp"

namespace benchagg::explanation {

std::vector<double> shapley_contributions(const mcda::ChoquetParams& params,
                                          std::span<const double> x, std::span<const double> r) {
  const std::size_t n = params.size();
  Require(x.size() == n && r.size() == n, ErrorCode::kInvalidArgument,
          "shapley: one alternative and one reference score per child are required");
  Require(n <= kMaxExactShapleyChildren, ErrorCode::kUnsupported,
          "shapley: exact enumeration is limited to " +
              std::to_string(kMaxExactShapleyChildren) + " children per node");

  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<double> value(count);
  std::vector<double> point(n);
  for (std::uint32_t s = 0; s < count; ++s) {
    for (std::size_t i = 0; i < n; ++i) point[i] = (s >> i) & 1u ? x[i] : r[i];
    value[s] = params.Evaluate(point);
  }

  // weight[k] = k! (n-k-1)! / n!
  std::vector<double> weight(n);
  for (std::size_t k = 0; k < n; ++k) {
    double w = 1.0 / static_cast<double>(n);
    for (std::size_t j = 1; j <= k; ++j) {
      w *= static_cast<double>(j) / static_cast<double>(n - j);
    }
    weight[k] = w;
  }

  std::vector<double> phi(n, 0.0);
  for (std::uint32_t s = 0; s < count; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      if (s & bit) continue;
      phi[i] += weight[size] * (value[s | bit] - value[s]);
    }
  }
  return phi;
}

}  // namespace benchagg::explanation
