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

#include "bench/factorization.hpp"

#include <cmath>
#include <map>

#include "common/error.hpp"

namespace benchagg::bench {

namespace {

using Poly = std::map<Term, double>;

Poly Multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ta, ca] : a) {
    for (const auto& [tb, cb] : b) {
      Term t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      std::sort(t.begin(), t.end());
      t.erase(std::unique(t.begin(), t.end()), t.end());
      out[t] += ca * cb;
    }
  }
  return out;
}

int WidthFor(std::uint64_t bound) {
  // Smallest m with 2^(m+1) - 1 >= largest odd value <= bound.
  const std::uint64_t max_odd = bound % 2 == 1 ? bound : bound - 1;
  int m = 0;
  while ((std::uint64_t{1} << (m + 1)) - 1 < max_odd) ++m;
  return m;
}

std::uint64_t CeilSqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FactorizationLayout FactorizationLayoutFor(std::uint64_t n) {
  Require(n >= 9, ErrorCode::kInvalidArgument, "factorization: N must be at least 9");
  Require(n % 2 == 1, ErrorCode::kInvalidArgument,
          "factorization: N = " + std::to_string(n) + " is even; only odd N are encoded");
  Require(n < (std::uint64_t{1} << 26), ErrorCode::kInvalidArgument,
          "factorization: N too large for an exact double-precision expansion");
  FactorizationLayout layout;
  layout.n = n;
  layout.p1_bits = WidthFor(CeilSqrt(n));
  layout.p2_bits = WidthFor(n / 3);
  layout.prime = IsPrime(n);
  return layout;
}

PseudoBooleanProblem FactorizationProblem(const FactorizationLayout& layout) {
  PseudoBooleanProblem problem(layout.num_vars(), Sense::kMinimize, Family::kFactorization,
                               layout.n);
  Poly p1{{Term{}, 1.0}}, p2{{Term{}, 1.0}};
  for (int i = 0; i < layout.p1_bits; ++i) {
    p1[Term{static_cast<std::uint32_t>(layout.p1_offset() + i)}] = std::ldexp(1.0, i + 1);
  }
  for (int i = 0; i < layout.p2_bits; ++i) {
    p2[Term{static_cast<std::uint32_t>(layout.p2_offset() + i)}] = std::ldexp(1.0, i + 1);
  }
  Poly residual = Multiply(p1, p2);
  for (auto& [t, c] : residual) c = -c;
  residual[Term{}] += static_cast<double>(layout.n);
  for (const auto& [t, c] : Multiply(residual, residual)) problem.AddTerm(t, c);
  return problem;
}

DecodedFactors decode_factors(const FactorizationLayout& layout, const Assignment& a) {
  Require(a.size() == layout.num_vars(), ErrorCode::kInvalidArgument,
          "factorization: assignment length does not match the layout");
  DecodedFactors out{1, 1, 0.0};
  for (int i = 0; i < layout.p1_bits; ++i) {
    if (a[layout.p1_offset() + i]) out.p1 += std::uint64_t{2} << i;
  }
  for (int i = 0; i < layout.p2_bits; ++i) {
    if (a[layout.p2_offset() + i]) out.p2 += std::uint64_t{2} << i;
  }
  const double diff = static_cast<double>(layout.n) - static_cast<double>(out.p1 * out.p2);
  out.cost = diff * diff;
  return out;
}

Assignment EncodeFactors(const FactorizationLayout& layout, std::uint64_t p1, std::uint64_t p2) {
  Require(p1 % 2 == 1 && p2 % 2 == 1, ErrorCode::kInvalidArgument,
          "factorization: encoded factors must be odd");
  const std::uint64_t b1 = (p1 - 1) / 2, b2 = (p2 - 1) / 2;
  Require(b1 < (std::uint64_t{1} << layout.p1_bits) && b2 < (std::uint64_t{1} << layout.p2_bits),
          ErrorCode::kInvalidArgument, "factorization: factor does not fit the bit layout");
  Assignment a(layout.num_vars(), 0);
  for (int i = 0; i < layout.p1_bits; ++i) a[layout.p1_offset() + i] = (b1 >> i) & 1u;
  for (int i = 0; i < layout.p2_bits; ++i) a[layout.p2_offset() + i] = (b2 >> i) & 1u;
  return a;
}

}  // namespace benchagg::bench
