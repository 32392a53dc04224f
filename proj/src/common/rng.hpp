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

#ifndef BENCHAGG_COMMON_RNG_HPP_
#define BENCHAGG_COMMON_RNG_HPP_

#include <cstdint>
#include <random>

namespace benchagg {

// Seeded generator with platform-independent derived distributions.
// std::uniform_*_distribution output differs across standard libraries, which
// would break byte-identical instance generation, so the conversions are done
// here on top of the (fully specified) mt19937_64 engine.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1).
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in [0, bound). Lemire-style rejection keeps it unbiased.
  uint64_t Below(uint64_t bound);

  bool Bernoulli(double p) { return Uniform() < p; }

  double Normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Mixes a base seed with a stream index (splitmix64 finalizer), so that
// per-instance seeds are decorrelated.
uint64_t DeriveSeed(uint64_t base, uint64_t stream);

}  // namespace benchagg

#endif  // BENCHAGG_COMMON_RNG_HPP_
