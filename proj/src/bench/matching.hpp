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

#ifndef BENCHAGG_BENCH_MATCHING_HPP_
#define BENCHAGG_BENCH_MATCHING_HPP_

#include <cstddef>

#include "bench/problem.hpp"

namespace benchagg::bench {

// Maximum matching size by Hopcroft-Karp. Requires a bipartition (throws
// kInvalidArgument when absent, kValidation when an edge does not cross it).
std::size_t matching_oracle(const Graph& g);

// True when the selected edges (one bit per edge of `g`) share no vertex.
bool IsMatching(const Graph& g, const Assignment& edges);

}  // namespace benchagg::bench

#endif  // BENCHAGG_BENCH_MATCHING_HPP_
