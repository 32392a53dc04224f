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

#include "mcda/utility.hpp"

#include <cmath>
#include <sstream>

#include "common/error.hpp"

namespace benchagg::mcda {

namespace {

// Position along the preference axis: larger is always better.
double PreferenceCoordinate(Direction d, double value) {
  return d == Direction::kHigherIsBetter ? value : -value;
}

}  // namespace

UtilityFunction::UtilityFunction(std::string metric_id, Direction direction,
                                 std::vector<Breakpoint> breakpoints,
                                 std::size_t bad_index, std::size_t good_index)
    : metric_id_(std::move(metric_id)),
      direction_(direction),
      breakpoints_(std::move(breakpoints)),
      bad_index_(bad_index),
      good_index_(good_index) {
  const std::string where = "utility function for metric '" + metric_id_ + "'";
  Require(!metric_id_.empty(), ErrorCode::kValidation, "utility function: empty metric id");
  Require(breakpoints_.size() >= 2, ErrorCode::kValidation,
          where + ": at least two breakpoints (Bad and Good) are required");
  Require(bad_index_ < breakpoints_.size() && good_index_ < breakpoints_.size(),
          ErrorCode::kValidation, where + ": anchor index out of range");
  Require(bad_index_ == 0, ErrorCode::kValidation,
          where + ": the Bad anchor must be the least preferred breakpoint");
  Require(good_index_ != bad_index_, ErrorCode::kValidation,
          where + ": Bad and Good anchors coincide");
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const Breakpoint& b = breakpoints_[i];
    Require(std::isfinite(b.value) && std::isfinite(b.utility), ErrorCode::kValidation,
            where + ": non-finite breakpoint");
    Require(b.utility >= 0.0, ErrorCode::kValidation, where + ": negative utility");
    if (i == 0) continue;
    const Breakpoint& prev = breakpoints_[i - 1];
    if (PreferenceCoordinate(direction_, b.value) <=
        PreferenceCoordinate(direction_, prev.value)) {
      std::ostringstream msg;
      msg << where << ": breakpoints not strictly ordered by preference at index " << i;
      Fail(ErrorCode::kValidation, msg.str());
    }
    if (b.utility <= prev.utility) {
      std::ostringstream msg;
      msg << where << ": utilities not strictly increasing at index " << i;
      Fail(ErrorCode::kValidation, msg.str());
    }
  }
  Require(breakpoints_[bad_index_].utility == 0.0, ErrorCode::kValidation,
          where + ": utility at the Bad anchor must be 0");
  Require(breakpoints_[good_index_].utility == 1.0, ErrorCode::kValidation,
          where + ": utility at the Good anchor must be 1");
}

double UtilityFunction::operator()(double value) const {
  if (!std::isfinite(value)) {
    Fail(ErrorCode::kInvalidArgument,
         "metric '" + metric_id_ + "': cannot score a non-finite value");
  }
  const double s = PreferenceCoordinate(direction_, value);
  auto coord = [&](std::size_t i) {
    return PreferenceCoordinate(direction_, breakpoints_[i].value);
  };
  if (s <= coord(0)) return breakpoints_[0].utility;
  const std::size_t last = breakpoints_.size() - 1;
  for (std::size_t i = 1; i <= last; ++i) {
    if (s <= coord(i)) {
      if (s == coord(i)) return breakpoints_[i].utility;
      const double x0 = coord(i - 1), x1 = coord(i);
      const double u0 = breakpoints_[i - 1].utility, u1 = breakpoints_[i].utility;
      return u0 + (u1 - u0) * (s - x0) / (x1 - x0);
    }
  }
  const double x0 = coord(last - 1), x1 = coord(last);
  const double u0 = breakpoints_[last - 1].utility, u1 = breakpoints_[last].utility;
  return u1 + (u1 - u0) * (s - x1) / (x1 - x0);
}

bool UtilityFunction::Prefers(double a, double b) const {
  return PreferenceCoordinate(direction_, a) > PreferenceCoordinate(direction_, b);
}

double apply_utility(const UtilityFunction& f, double value) { return f(value); }

const char* DirectionName(Direction d) {
  return d == Direction::kHigherIsBetter ? "higher_is_better" : "lower_is_better";
}

Direction ParseDirection(const std::string& name) {
  if (name == "higher_is_better") return Direction::kHigherIsBetter;
  if (name == "lower_is_better") return Direction::kLowerIsBetter;
  Fail(ErrorCode::kValidation, "unknown direction '" + name + "'");
}

}  // namespace benchagg::mcda
