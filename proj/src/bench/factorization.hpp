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

#ifndef BENCHAGG_BENCH_FACTORIZATION_HPP_
#define BENCHAGG_BENCH_FACTORIZATION_HPP_

#include <cstdint>

#include "bench/problem.hpp"

namespace benchagg::bench {

// Bit layout of the factorization encoding. Both factors are odd:
// p = 1 + 2 * sum_i bit_i 2^i. The p2 bits occupy variables
// [0, p2_bits) and the p1 bits [p2_bits, p2_bits + p1_bits).
struct FactorizationLayout {
  std::uint64_t n = 0;
  int p1_bits = 0;
  int p2_bits = 0;
  bool prime = false;  // no zero-cost solution exists

  std::size_t p2_offset() const { return 0; }
  std::size_t p1_offset() const { return static_cast<std::size_t>(p2_bits); }
  std::size_t num_vars() const { return static_cast<std::size_t>(p1_bits + p2_bits); }
};

// Widths are the smallest able to represent every odd value up to
// ceil(sqrt(N)) for p1 and N/3 for p2, which keeps the trivial 1 x N
// factorization out of reach.
FactorizationLayout FactorizationLayoutFor(std::uint64_t n);

// Minimization of (N - p1 p2)^2 expanded into a multilinear polynomial.
// Throws kInvalidArgument for even N or N < 9.
PseudoBooleanProblem FactorizationProblem(const FactorizationLayout& layout);

struct DecodedFactors {
  std::uint64_t p1 = 0;
  std::uint64_t p2 = 0;
  double cost = 0.0;
};

DecodedFactors decode_factors(const FactorizationLayout& layout, const Assignment& a);

// Bits of an assignment encoding the given odd factors; throws when a factor
// does not fit the layout.
Assignment EncodeFactors(const FactorizationLayout& layout, std::uint64_t p1, std::uint64_t p2);

bool IsPrime(std::uint64_t n);

}  // namespace benchagg::bench

#endif  // BENCHAGG_BENCH_FACTORIZATION_HPP_
