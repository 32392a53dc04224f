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

#ifndef BENCHAGG_MCDA_UTILITY_HPP_
#define BENCHAGG_MCDA_UTILITY_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace benchagg::mcda {

enum class Direction { kHigherIsBetter, kLowerIsBetter };

struct Breakpoint {
  double value = 0.0;    // raw metric units
  double utility = 0.0;  // unipolar scale [0, +inf)

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Piecewise-linear marginal utility on an unbounded unipolar scale.
//
// Breakpoints are stored in preference order (worst first). The Bad anchor is
// the first breakpoint and maps to exactly 0; the Good anchor maps to exactly
// 1 and may be followed by breakpoints preferred to it. Values worse than Bad
// saturate at 0, values better than the last breakpoint extrapolate with the
// slope of the last segment.
class UtilityFunction {
 public:
  UtilityFunction(std::string metric_id, Direction direction,
                  std::vector<Breakpoint> breakpoints, std::size_t bad_index,
                  std::size_t good_index);

  const std::string& metric_id() const { return metric_id_; }
  Direction direction() const { return direction_; }
  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
  std::size_t bad_index() const { return bad_index_; }
  std::size_t good_index() const { return good_index_; }
  double bad_value() const { return breakpoints_[bad_index_].value; }
  double good_value() const { return breakpoints_[good_index_].value; }

  double operator()(double value) const;

  // True when `a` is strictly preferred to `b` on this metric.
  bool Prefers(double a, double b) const;

  friend bool operator==(const UtilityFunction&, const UtilityFunction&) = default;

 private:
  std::string metric_id_;
  Direction direction_;
  std::vector<Breakpoint> breakpoints_;
  std::size_t bad_index_;
  std::size_t good_index_;
};

double apply_utility(const UtilityFunction& f, double value);

const char* DirectionName(Direction d);
Direction ParseDirection(const std::string& name);

}  // namespace benchagg::mcda

#endif  // BENCHAGG_MCDA_UTILITY_HPP_
