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

#include "service/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "common/error.hpp"
#include "mcda/model_io.hpp"

namespace benchagg::service {
namespace {

bool EndsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Values of one profile metric id across an alternative's records.
std::vector<double> MetricValues(const std::string& key, const std::vector<const BenchmarkRecord*>& records) {
  std::string metric = key;
  bool per_joule = false;
  if (EndsWith(metric, kPerJouleSuffix)) {
    per_joule = true;
    metric.resize(metric.size() - std::string(kPerJouleSuffix).size());
  }
  std::optional<std::string> family;
  if (const auto dot = metric.find('.'); dot != std::string::npos) {
    family = metric.substr(0, dot);
    metric = metric.substr(dot + 1);
  }
  std::vector<double> out;
  for (const auto* r : records) {
    if (family && r->family != *family) continue;
    auto it = r->metrics.find(metric);
    if (it == r->metrics.end()) continue;
    if (per_joule) {
      auto e = r->metrics.find("energy_joules");
      if (e == r->metrics.end()) continue;
      out.push_back(compute_efficiency(it->second, e->second));
    } else {
      out.push_back(it->second);
    }
  }
  return out;
}

double Aggregate(mcda::RecordAggregation a, const std::vector<double>& v) {
  switch (a) {
    case mcda::RecordAggregation::kMax: return *std::max_element(v.begin(), v.end());
    case mcda::RecordAggregation::kMin: return *std::min_element(v.begin(), v.end());
    case mcda::RecordAggregation::kMean: break;
  }
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

ProfileSet BuildProfiles(const mcda::CriteriaTree& tree, const std::vector<BenchmarkRecord>& records) {
  std::map<std::string, std::vector<const BenchmarkRecord*>> by_alt;
  for (const auto& r : records) by_alt[r.alternative_id].push_back(&r);

  // First criterion declaring a metric decides its aggregation rule.
  std::vector<std::pair<std::string, mcda::RecordAggregation>> metrics;
  std::set<std::string> seen;
  for (const auto& id : tree.criteria()) {
    const auto& c = tree.node(id).criterion();
    if (seen.insert(c.utility.metric_id()).second) {
      metrics.emplace_back(c.utility.metric_id(), c.record_aggregation);
    }
  }

  ProfileSet out;
  for (const auto& [alt, recs] : by_alt) {
    mcda::MeasurementProfile p;
    p.alternative_id = alt;
    for (const auto& [metric, agg] : metrics) {
      const auto values = MetricValues(metric, recs);
      if (!values.empty()) p.values[metric] = Aggregate(agg, values);
    }
    out.profiles.push_back(std::move(p));
  }
  return out;
}

Report evaluate_and_report(const mcda::CriteriaTree& tree,
                           const std::vector<mcda::MeasurementProfile>& profiles,
                           const ReportOptions& options, std::vector<std::string> warnings) {
  Report report;
  report.warnings = std::move(warnings);
  report.reference = options.explain;
  const auto metrics = tree.metrics();
  std::vector<mcda::MeasurementProfile> included;
  std::set<std::string> ids;
  for (const auto& p : profiles) {
    Require(ids.insert(p.alternative_id).second, ErrorCode::kValidation,
            "duplicate alternative '" + p.alternative_id + "'");
    std::vector<std::string> missing;
    for (const auto& m : metrics) {
      if (!p.values.count(m)) missing.push_back(m);
    }
    if (!missing.empty()) {
      std::string list;
      for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
      report.excluded.push_back(p.alternative_id);
      report.warnings.push_back("alternative '" + p.alternative_id + "' excluded: no value for " + list);
      continue;
    }
    try {
      ReportRow row;
      row.alternative_id = p.alternative_id;
      row.result = mcda::evaluate_tree(tree, p);
      for (const auto& m : metrics) row.values[m] = p.values.at(m);
      report.rows.push_back(std::move(row));
      included.push_back(p);
    } catch (const Error& e) {
      report.excluded.push_back(p.alternative_id);
      report.warnings.push_back("alternative '" + p.alternative_id + "' excluded: " + e.what());
    }
  }

  if (options.explain) {
    const auto ref = explanation::reference_profile(*options.explain, tree, included);
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      report.rows[i].explanation = explanation::hierarchical_explanation(tree, included[i], ref);
    }
  }

  std::stable_sort(report.rows.begin(), report.rows.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.result.root_score != b.result.root_score) return a.result.root_score > b.result.root_score;
    return a.alternative_id < b.alternative_id;
  });
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    report.rows[i].rank = i > 0 && report.rows[i].result.root_score == report.rows[i - 1].result.root_score
                              ? report.rows[i - 1].rank
                              : i + 1;
  }
  std::sort(report.excluded.begin(), report.excluded.end());
  return report;
}

Json ReportToJson(const mcda::CriteriaTree& tree, const Report& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j{{"rank", row.rank}, {"alternative", row.alternative_id}, {"score", row.result.root_score}};
    Json values = Json::object();
    for (const auto& [m, v] : row.values) values[m] = v;
    j["values"] = std::move(values);
    Json nodes = Json::object();
    for (const auto& n : tree.nodes()) nodes[n.id] = row.result.node_scores.at(n.id);
    j["node_scores"] = std::move(nodes);
    if (row.explanation) j["explanation"] = explanation::ExplanationToJson(tree, *row.explanation);
    rows.push_back(std::move(j));
  }
  return Json{{"schema_version", 1},
              {"kind", "benchagg.report"},
              {"scope", tree.scope_label()},
              {"root", tree.root()},
              {"reference", r.reference ? Json(explanation::ReferenceKindName(*r.reference)) : Json(nullptr)},
              {"alternatives", std::move(rows)},
              {"excluded", r.excluded},
              {"warnings", r.warnings}};
}

std::string RenderReport(const mcda::CriteriaTree& tree, const Report& r) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  out << "# Evaluation";
  if (!tree.scope_label().empty()) out << ": " << tree.scope_label();
  out << "\n\n";

  const auto& root = tree.node(tree.root());
  std::vector<std::string> children;
  if (!root.is_criterion()) children = root.params().children();
  out << "| rank | alternative | " << root.label;
  for (const auto& c : children) out << " | " << tree.node(c).label;
  if (r.reference) {
    for (const auto& c : children) out << " | share " << tree.node(c).label;
  }
  out << " |\n|---:|---";
  for (std::size_t i = 0; i < 1 + children.size() * (r.reference ? 2 : 1); ++i) out << "|---:";
  out << "|\n";
  for (const auto& row : r.rows) {
    out << "| " << row.rank << " | " << row.alternative_id << " | " << row.result.root_score;
    for (const auto& c : children) out << " | " << row.result.node_scores.at(c);
    if (row.explanation) {
      for (const auto& c : children) {
        out << " | ";
        if (row.explanation->percentage) {
          out << std::setprecision(1) << row.explanation->percentage->at(c) << "%" << std::setprecision(4);
        } else {
          out << "n/a";
        }
      }
    }
    out << " |\n";
  }
  if (r.rows.empty()) out << "\n(no alternative could be scored)\n";
  if (r.reference) {
    out << "\nShares are contributions to the score difference against the "
        << explanation::ReferenceKindName(*r.reference) << " reference.\n";
  }
  for (const auto& w : r.warnings) out << "\nwarning: " << w;
  if (!r.warnings.empty()) out << "\n";
  return out.str();
}

}  // namespace benchagg::service
