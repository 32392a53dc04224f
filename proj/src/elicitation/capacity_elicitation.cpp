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

#include "elicitation/capacity_elicitation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "common/error.hpp"
#include "elicitation/simplex.hpp"
#include "elicitation/value_scale.hpp"

namespace benchagg::elicitation {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> AllPairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

struct ParsedRanking {
  std::vector<Pattern> patterns;
  std::vector<Violation> violations;
};

ParsedRanking ParseRanking(const CapacitySession& s) {
  ParsedRanking out;
  const std::size_t n = s.children.size();
  std::set<std::string> names;
  for (const auto& c : s.children) {
    if (!names.insert(c).second) {
      out.violations.push_back({"duplicate_child", "child '" + c + "' is listed twice"});
    }
  }
  for (std::size_t k = 0; k < s.ranking.size(); ++k) {
    Pattern p = 0;
    bool ok = true;
    for (const auto& id : s.ranking[k]) {
      auto it = std::find(s.children.begin(), s.children.end(), id);
      if (it == s.children.end()) {
        out.violations.push_back({"unknown_child", "ranked alternative #" + std::to_string(k + 1) +
                                                       " names unknown child '" + id + "'"});
        ok = false;
        continue;
      }
      const Pattern bit = Pattern{1} << (it - s.children.begin());
      if (p & bit) {
        out.violations.push_back({"duplicate_child", "ranked alternative #" + std::to_string(k + 1) +
                                                         " lists '" + id + "' twice"});
      }
      p |= bit;
    }
    const auto size = static_cast<std::size_t>(std::popcount(p));
    if (ok && size > 2 && size != n) {
      out.violations.push_back(
          {"unsupported_pattern", "ranked alternative #" + std::to_string(k + 1) +
                                      " is Good on " + std::to_string(size) +
                                      " inputs; only all-Bad, singletons, pairs and all-Good "
                                      "alternatives are used"});
    }
    out.patterns.push_back(p);
  }
  return out;
}

}  // namespace

std::string DescribePattern(const std::vector<std::string>& children, Pattern p) {
  const Pattern all = children.size() >= 32 ? ~Pattern{0} : (Pattern{1} << children.size()) - 1;
  if (p == 0) return "all-Bad";
  if (p == all) return "all-Good";
  std::string out = "Good on {";
  bool first = true;
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (!(p & (Pattern{1} << i))) continue;
    if (!first) out += ", ";
    out += children[i];
    first = false;
  }
  return out + "}";
}

double PatternValue(const mcda::ChoquetParams& params, Pattern p) {
  std::vector<double> x(params.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = (p >> i) & 1u ? 1.0 : 0.0;
  return params.Evaluate(x);
}

std::vector<Violation> check_consistency(const CapacitySession& s) {
  const std::size_t n = s.children.size();
  std::vector<Violation> out;
  if (n < 2) {
    out.push_back({"too_few_children", "an aggregation node needs at least two inputs"});
    return out;
  }
  if (n > kMaxCapacityChildren) {
    out.push_back({"too_many_children", "at most " + std::to_string(kMaxCapacityChildren) +
                                            " inputs per aggregation node are supported"});
    return out;
  }
  ParsedRanking parsed = ParseRanking(s);
  out = parsed.violations;
  const auto& pats = parsed.patterns;
  const Pattern all = (Pattern{1} << n) - 1;

  if (s.gaps.size() + 1 != pats.size()) {
    std::ostringstream msg;
    msg << "expected " << (pats.empty() ? 0 : pats.size() - 1)
        << " intensity answers between consecutive alternatives, got " << s.gaps.size();
    out.push_back({"missing_gap", msg.str()});
  }
  std::map<Pattern, std::size_t> position;
  for (std::size_t k = 0; k < pats.size(); ++k) {
    if (!position.emplace(pats[k], k).second) {
      out.push_back({"duplicate_alternative",
                     DescribePattern(s.children, pats[k]) + " is ranked more than once"});
    }
  }
  if (!position.count(0)) {
    out.push_back({"missing_all_bad", "the all-Bad alternative is not ranked"});
  } else if (position[0] != 0) {
    out.push_back({"all_bad_not_worst", "all-Bad must be ranked worst"});
  }
  if (!position.count(all)) {
    out.push_back({"missing_all_good", "the all-Good alternative is not ranked"});
  } else if (position[all] + 1 != pats.size()) {
    out.push_back({"all_good_not_best", "all-Good must be ranked best"});
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!position.count(Pattern{1} << i)) {
      out.push_back({"missing_singleton",
                     DescribePattern(s.children, Pattern{1} << i) + " is not ranked"});
    }
  }
  if (n <= kFullPairElicitationLimit) {
    for (auto [i, j] : AllPairs(n)) {
      const Pattern p = (Pattern{1} << i) | (Pattern{1} << j);
      if (!position.count(p)) {
        out.push_back({"missing_pair", DescribePattern(s.children, p) + " is not ranked"});
      }
    }
  }
  if (!out.empty()) return out;

  // A superset can never be worth less than its subsets.
  std::vector<double> cumulative(pats.size(), 0.0);
  for (std::size_t k = 1; k < pats.size(); ++k) {
    cumulative[k] = cumulative[k - 1] + IntensityValue(s.gaps[k - 1]);
  }
  for (std::size_t a = 0; a < pats.size(); ++a) {
    for (std::size_t b = a + 1; b < pats.size(); ++b) {
      const bool a_superset_of_b = (pats[a] & pats[b]) == pats[b] && pats[a] != pats[b];
      if (a_superset_of_b && cumulative[b] > cumulative[a]) {
        out.push_back({"monotonicity", DescribePattern(s.children, pats[b]) +
                                           " is ranked above " +
                                           DescribePattern(s.children, pats[a]) +
                                           ", which is Good on more inputs"});
      }
    }
  }
  if (cumulative.back() <= 0.0) {
    out.push_back({"zero_total_intensity", "all alternatives are ranked as indifferent"});
  }
  if (!out.empty()) return out;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [i, j] : AllPairs(n)) {
    if (n <= kFullPairElicitationLimit ||
        position.count((Pattern{1} << i) | (Pattern{1} << j))) {
      pairs.emplace_back(i, j);
    }
  }
  const CapacityFit fit = fit_capacity(n, pairs, capacity_targets(s));
  if (!fit.feasible) {
    for (const auto& d : fit.binding) {
      std::ostringstream msg;
      msg << DescribePattern(s.children, d.pattern) << ": target " << d.target
          << " cannot be met by a nonnegative model (closest achievable " << d.achieved << ")";
      out.push_back({"infeasible", msg.str()});
    }
  }
  return out;
}

std::vector<PatternTarget> capacity_targets(const CapacitySession& s) {
  ParsedRanking parsed = ParseRanking(s);
  if (!parsed.violations.empty() || parsed.patterns.size() < 2 ||
      s.gaps.size() + 1 != parsed.patterns.size()) {
    Fail(ErrorCode::kValidation, "capacity session for '" + s.node_id + "' is malformed");
  }
  const auto values = derive_value_scale(std::span<const Intensity>(s.gaps), 0,
                                         parsed.patterns.size() - 1);
  std::vector<PatternTarget> out;
  for (std::size_t k = 0; k < parsed.patterns.size(); ++k) {
    out.push_back({parsed.patterns[k], values[k]});
  }
  return out;
}

CapacityFit fit_capacity(std::size_t num_children,
                         const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                         const std::vector<PatternTarget>& targets, double tolerance) {
  const std::size_t n = num_children;
  Require(n >= 1 && n <= kMaxCapacityChildren, ErrorCode::kInvalidArgument,
          "capacity: unsupported number of children");
  const Pattern all = (Pattern{1} << n) - 1;
  std::vector<PatternTarget> constrained;
  for (const auto& t : targets) {
    Require(t.pattern <= all, ErrorCode::kInvalidArgument, "capacity: pattern out of range");
    // The empty pattern is worth 0 and the full one 1 for every admissible model.
    if (t.pattern == 0 || t.pattern == all) continue;
    constrained.push_back(t);
  }
  const std::size_t num_weights = n + 2 * pairs.size();
  const std::size_t k = constrained.size();

  auto pattern_row = [&](Pattern p, std::vector<double>& row) {
    for (std::size_t i = 0; i < n; ++i) row[i] = (p >> i) & 1u ? 1.0 : 0.0;
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      const bool a = (p >> pairs[q].first) & 1u, b = (p >> pairs[q].second) & 1u;
      row[n + 2 * q] = (a && b) ? 1.0 : 0.0;
      row[n + 2 * q + 1] = (a || b) ? 1.0 : 0.0;
    }
  };

  // Layout: weights | dev+_k, dev-_k | slack_k | [t]
  // pattern rows:  value_k(w) - dev+_k + dev-_k = target_k
  // bound rows:    dev+_k + dev-_k + slack_k (- t) = (tau | 0)
  auto build = [&](bool with_t, double tau) {
    const std::size_t cols = num_weights + 3 * k + (with_t ? 1 : 0);
    LinearProgram lp;
    lp.c.assign(cols, 0.0);
    std::vector<double> row(cols, 0.0);
    for (std::size_t j = 0; j < num_weights; ++j) row[j] = 1.0;
    lp.a.push_back(row);
    lp.b.push_back(1.0);
    for (std::size_t r = 0; r < k; ++r) {
      std::fill(row.begin(), row.end(), 0.0);
      pattern_row(constrained[r].pattern, row);
      row[num_weights + 2 * r] = -1.0;
      row[num_weights + 2 * r + 1] = 1.0;
      lp.a.push_back(row);
      lp.b.push_back(constrained[r].target);
    }
    for (std::size_t r = 0; r < k; ++r) {
      std::fill(row.begin(), row.end(), 0.0);
      row[num_weights + 2 * r] = 1.0;
      row[num_weights + 2 * r + 1] = 1.0;
      row[num_weights + 2 * k + r] = 1.0;
      if (with_t) row[cols - 1] = -1.0;
      lp.a.push_back(row);
      lp.b.push_back(with_t ? 0.0 : tau);
    }
    return lp;
  };

  CapacityFit fit;
  // Stage 1: smallest achievable worst-case deviation.
  LinearProgram stage1 = build(true, 0.0);
  stage1.c.back() = 1.0;
  const LpSolution s1 = SolveLinearProgram(stage1);
  Require(s1.status == LpStatus::kOptimal, ErrorCode::kInternal,
          "capacity: deviation program did not reach an optimum");
  fit.max_deviation = s1.objective;
  if (fit.max_deviation > tolerance) {
    std::vector<double> row(stage1.c.size());
    for (std::size_t r = 0; r < k; ++r) {
      std::fill(row.begin(), row.end(), 0.0);
      pattern_row(constrained[r].pattern, row);
      double achieved = 0.0;
      for (std::size_t j = 0; j < num_weights; ++j) achieved += row[j] * s1.x[j];
      if (std::abs(achieved - constrained[r].target) >= fit.max_deviation - 1e-9) {
        fit.binding.push_back({constrained[r].pattern, constrained[r].target, achieved});
      }
    }
    return fit;
  }

  // Stage 2: at that deviation, prefer the most additive model.
  LinearProgram stage2 = build(false, std::max(fit.max_deviation, 0.0) + 1e-13);
  for (std::size_t q = 0; q < pairs.size(); ++q) {
    stage2.c[n + 2 * q] = 1.0;
    stage2.c[n + 2 * q + 1] = 1.0;
  }
  const LpSolution s2 = SolveLinearProgram(stage2);
  Require(s2.status == LpStatus::kOptimal, ErrorCode::kInternal,
          "capacity: parsimony program did not reach an optimum");
  fit.feasible = true;
  fit.coefficients.assign(s2.x.begin(), s2.x.begin() + static_cast<std::ptrdiff_t>(num_weights));
  return fit;
}

mcda::ChoquetParams solve_capacity(const std::vector<std::string>& children,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                   const std::vector<PatternTarget>& targets, double tolerance) {
  const CapacityFit fit = fit_capacity(children.size(), pairs, targets, tolerance);
  if (!fit.feasible) {
    std::vector<std::string> messages;
    for (const auto& d : fit.binding) {
      std::ostringstream msg;
      msg << DescribePattern(children, d.pattern) << ": target " << d.target
          << ", closest achievable " << d.achieved;
      messages.push_back(msg.str());
    }
    std::ostringstream what;
    what << "no nonnegative 2-additive model reproduces the ranked alternatives (worst deviation "
         << fit.max_deviation << ")";
    throw ConsistencyError(what.str(), std::move(messages));
  }
  const std::size_t n = children.size();
  std::vector<double> weights(fit.coefficients.begin(),
                              fit.coefficients.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<mcda::PairTerm> terms;
  for (std::size_t q = 0; q < pairs.size(); ++q) {
    terms.push_back({pairs[q].first, pairs[q].second, fit.coefficients[n + 2 * q],
                     fit.coefficients[n + 2 * q + 1]});
  }
  // Remove simplex round-off so the sum-to-one check sees an exact total.
  double total = 0.0;
  for (double w : fit.coefficients) total += w;
  for (double& w : weights) w /= total;
  for (auto& t : terms) {
    t.min_weight /= total;
    t.max_weight /= total;
  }
  return mcda::ChoquetParams(children, std::move(weights), std::move(terms));
}

mcda::ChoquetParams two_child_capacity(const std::vector<std::string>& children, double t1,
                                       double t2) {
  Require(children.size() == 2, ErrorCode::kInvalidArgument,
          "two-child capacity needs exactly two children");
  Require(t1 >= 0.0 && t1 <= 1.0 && t2 >= 0.0 && t2 <= 1.0, ErrorCode::kInvalidArgument,
          "two-child capacity: singleton targets must lie in [0, 1]");
  const double redundancy = std::max(0.0, t1 + t2 - 1.0);
  const double complementarity = std::max(0.0, 1.0 - t1 - t2);
  // t1 - (t1 + t2 - 1) written as 1 - t2 so rounding cannot push a weight below zero.
  const double w1 = redundancy > 0.0 ? 1.0 - t2 : t1;
  const double w2 = redundancy > 0.0 ? 1.0 - t1 : t2;
  return mcda::ChoquetParams(children, {w1, w2},
                             {{0, 1, complementarity, redundancy}});
}

mcda::ChoquetParams derive_capacity(const CapacitySession& s) {
  const auto violations = check_consistency(s);
  if (!violations.empty()) {
    std::vector<std::string> messages;
    for (const auto& v : violations) messages.push_back(v.message);
    throw ConsistencyError("capacity session for '" + s.node_id + "' is inconsistent",
                           std::move(messages));
  }
  const std::size_t n = s.children.size();
  const auto targets = capacity_targets(s);
  if (n == 2) {
    double t[2] = {0.0, 0.0};
    for (const auto& pt : targets) {
      if (pt.pattern == 1 || pt.pattern == 2) t[pt.pattern - 1] = pt.target;
    }
    return two_child_capacity(s.children, t[0], t[1]);
  }
  std::set<Pattern> ranked;
  for (const auto& t : targets) ranked.insert(t.pattern);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [i, j] : AllPairs(n)) {
    if (n <= kFullPairElicitationLimit || ranked.count((Pattern{1} << i) | (Pattern{1} << j))) {
      pairs.emplace_back(i, j);
    }
  }
  return solve_capacity(s.children, pairs, targets);
}

}  // namespace benchagg::elicitation
