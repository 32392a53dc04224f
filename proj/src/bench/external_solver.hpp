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

#ifndef BENCHAGG_BENCH_EXTERNAL_SOLVER_HPP_
#define BENCHAGG_BENCH_EXTERNAL_SOLVER_HPP_

#include "bench/problem.hpp"
#include "bench/solvers.hpp"

namespace benchagg::bench {

// Runs the adapter as a child process: the problem document goes to its
// stdin, the assignment document is read from its stdout.
//
// Reply: {"assignment": "0110..." | [0,1,...], "wall_clock_seconds": s,
//         "energy_joules": e (optional), "objective": f (optional),
//         "solver": {...} (optional)}
//
// The objective is always recomputed locally; a reported objective that
// disagrees is a protocol error. Throws kTimeout when the adapter exceeds
// its timeout (the child is killed) and kProtocol on a non-zero exit or a
// malformed reply.
SolveResult SolveExternal(const PseudoBooleanProblem& p, const ExternalAdapter& adapter);

// Validation half of the above, exposed for tests.
SolveResult ParseAdapterReply(const PseudoBooleanProblem& p, std::string_view reply);

}  // namespace benchagg::bench

#endif  // BENCHAGG_BENCH_EXTERNAL_SOLVER_HPP_
