// Copyright 2026 The Narrative Signals Authors
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

#include "narrative/signals.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_map>

namespace narrative {

const std::set<std::string> &CommonStopwords() {
  static const std::set<std::string> kWords = {"this", "it",  "that",
                                               "some", "so", "thing"};
  return kWords;
}

int ArgColumn(const std::string &role) {
  Role parsed(role);
  if (!parsed.is_arg() || parsed.arg_index() >= kNumArgColumns ||
      parsed.name() != "ARG" + std::to_string(parsed.arg_index())) {
    throw SignalsError(SignalsErrc::kUnknownRole, "unknown role '" + role + "'");
  }
  return parsed.arg_index();
}

std::vector<TermCount> RankCounts(const std::map<std::string, long> &counts) {
  std::vector<TermCount> ranked;
  ranked.reserve(counts.size());
  for (const auto &[term, count] : counts) ranked.push_back({term, count});
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const TermCount &a, const TermCount &b) {
                     return a.count > b.count;
                   });
  return ranked;
}

std::vector<TermCount> CountByRole(const NarrativeTraceTable &table,
                                   const std::string &role,
                                   const std::set<std::string> &stoplist) {
  int column = ArgColumn(role);
  std::map<std::string, long> counts;
  for (const TraceRow &row : table.rows) {
    const std::string &label = row.arg(column);
    if (label.empty() || stoplist.count(label) > 0) continue;
    ++counts[label];
  }
  return RankCounts(counts);
}

std::vector<TermCount> CountPredicates(const NarrativeTraceTable &table,
                                       const VerbOntology *ontology,
                                       const std::set<std::string> &stoplist) {
  std::map<std::string, long> counts;
  for (const TraceRow &row : table.rows) {
    std::string term = row.predicate_frame;
    if (ontology != nullptr) {
      std::string category = ontology->CategoryOf(term);
      if (category != kUnmappedCategory) term = std::move(category);
    }
    if (stoplist.count(term) > 0) continue;
    ++counts[term];
  }
  return RankCounts(counts);
}

namespace {

bool Matches(const std::string &value, const std::string &wanted,
             bool substring) {
  if (substring) return value.find(wanted) != std::string::npos;
  return value == wanted;
}

}  // namespace

std::vector<TraceRow> FilterEvents(const NarrativeTraceTable &table,
                                   const EventFilter &filter,
                                   const VerbOntology *ontology) {
  std::vector<std::pair<int, std::string>> criteria;
  for (const auto &[role, term] : filter.roles) {
    criteria.emplace_back(ArgColumn(role), term);
  }
  if (filter.category && ontology == nullptr) {
    throw std::invalid_argument("category filter requires an ontology");
  }
  std::vector<TraceRow> out;
  for (const TraceRow &row : table.rows) {
    bool keep = true;
    for (const auto &[column, term] : criteria) {
      if (!Matches(row.arg(column), term, filter.substring)) {
        keep = false;
        break;
      }
    }
    if (keep && filter.predicate) {
      keep = Matches(row.predicate_frame, *filter.predicate, filter.substring);
    }
    if (keep && filter.parent_predicate) {
      keep = row.parent_predicate_frame &&
             Matches(*row.parent_predicate_frame, *filter.parent_predicate,
                     filter.substring);
    }
    if (keep && filter.category) {
      keep = ontology->CategoryOf(row.predicate_frame) == *filter.category;
    }
    if (keep) out.push_back(row);
  }
  return out;
}

void DocumentGrouping::Validate() const {
  std::set<std::string> seen;
  for (const auto &[group, documents] : groups) {
    if (documents.empty()) {
      throw SignalsError(SignalsErrc::kInvalidCounts,
                         "group '" + group + "' has no documents");
    }
    for (const std::string &doc : documents) {
      if (!seen.insert(doc).second) {
        throw SignalsError(SignalsErrc::kInvalidCounts,
                           "document '" + doc + "' is in more than one group");
      }
    }
  }
}

std::optional<std::string> DocumentGrouping::GroupOf(
    const std::string &document_id) const {
  for (const auto &[group, documents] : groups) {
    if (documents.count(document_id) > 0) return group;
  }
  return std::nullopt;
}

TermDocumentCounts::TermDocumentCounts(std::vector<std::string> terms,
                                       std::vector<std::string> groups,
                                       std::vector<std::vector<long>> counts)
    : terms_(std::move(terms)),
      groups_(std::move(groups)),
      counts_(std::move(counts)) {
  if (counts_.size() != terms_.size()) {
    throw SignalsError(SignalsErrc::kInvalidCounts, "count rows != terms");
  }
  for (const std::vector<long> &row : counts_) {
    if (row.size() != groups_.size()) {
      throw SignalsError(SignalsErrc::kInvalidCounts, "count columns != groups");
    }
    for (long c : row) {
      if (c < 0) {
        throw SignalsError(SignalsErrc::kInvalidCounts, "negative count");
      }
    }
  }
}

TermDocumentCounts BuildTermCounts(
    const std::vector<TraceRow> &rows, const DocumentGrouping &grouping,
    const std::function<std::string(const TraceRow &)> &term_of) {
  grouping.Validate();
  std::vector<std::string> groups;
  std::unordered_map<std::string, size_t> column_of_document;
  for (const auto &[group, documents] : grouping.groups) {
    for (const std::string &doc : documents) {
      column_of_document[doc] = groups.size();
    }
    groups.push_back(group);
  }
  std::map<std::string, std::vector<long>> by_term;
  for (const TraceRow &row : rows) {
    auto column = column_of_document.find(row.document_id);
    if (column == column_of_document.end()) continue;
    std::string term = term_of(row);
    if (term.empty()) continue;
    auto [it, inserted] = by_term.try_emplace(std::move(term));
    if (inserted) it->second.assign(groups.size(), 0);
    ++it->second[column->second];
  }
  std::vector<std::string> terms;
  std::vector<std::vector<long>> counts;
  for (auto &[term, row] : by_term) {
    terms.push_back(term);
    counts.push_back(std::move(row));
  }
  return TermDocumentCounts(std::move(terms), std::move(groups),
                            std::move(counts));
}

TfidfMatrix Tfidf(const TermDocumentCounts &counts) {
  const size_t m = counts.num_terms();
  const size_t n = counts.num_groups();
  std::vector<long> column_totals(n, 0);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) column_totals[j] += counts.count(i, j);
  }
  for (size_t j = 0; j < n; ++j) {
    if (column_totals[j] == 0) {
      throw SignalsError(SignalsErrc::kEmptyGroup,
                         "group '" + counts.groups()[j] + "' has no terms");
    }
  }
  TfidfMatrix out;
  out.terms = counts.terms();
  out.groups = counts.groups();
  out.tf.assign(m, std::vector<double>(n, 0.0));
  out.score.assign(m, std::vector<double>(n, 0.0));
  out.idf.assign(m, 0.0);
  for (size_t i = 0; i < m; ++i) {
    int containing = 0;
    for (size_t j = 0; j < n; ++j) containing += counts.occurs(i, j);
    // A term that never occurs has no defined idf; its scores are all zero.
    out.idf[i] = containing == 0
                     ? 0.0
                     : std::log(static_cast<double>(n) / containing);
    for (size_t j = 0; j < n; ++j) {
      long c = counts.count(i, j);
      if (c == 0) continue;
      out.tf[i][j] = static_cast<double>(c) / static_cast<double>(column_totals[j]);
      out.score[i][j] = out.tf[i][j] * out.idf[i];
    }
  }
  return out;
}

std::vector<RankedTerm> RankTfidf(const TfidfMatrix &tfidf,
                                  const TermDocumentCounts &counts,
                                  size_t top) {
  std::vector<RankedTerm> out;
  for (size_t j = 0; j < tfidf.groups.size(); ++j) {
    std::vector<RankedTerm> group;
    for (size_t i = 0; i < tfidf.terms.size(); ++i) {
      if (counts.count(i, j) == 0) continue;
      group.push_back({tfidf.groups[j], tfidf.terms[i], tfidf.score[i][j],
                       counts.count(i, j)});
    }
    std::stable_sort(group.begin(), group.end(),
                     [](const RankedTerm &a, const RankedTerm &b) {
                       return a.score > b.score;
                     });
    if (top > 0 && group.size() > top) group.resize(top);
    out.insert(out.end(), group.begin(), group.end());
  }
  return out;
}

std::vector<GoalRecord> ExtractGoals(const NarrativeTraceTable &table,
                                     const std::set<std::string> &actor_aliases,
                                     const VerbOntology &ontology) {
  std::vector<GoalRecord> goals;
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const TraceRow &row = table.rows[r];
    const std::string &agent = row.arg(0);
    if (agent.empty() || actor_aliases.count(agent) == 0) continue;
    bool rule1 = ontology.Classify(row.predicate_frame).is_goal;
    bool rule2 = row.parent_predicate_frame &&
                 ontology.Classify(*row.parent_predicate_frame).is_goal;
    if (!rule1 && !rule2) continue;
    GoalRecord goal;
    goal.actor = agent;
    goal.goal_predicate = row.predicate_frame;
    for (int column = 1; column < kNumArgColumns; ++column) {
      if (!row.arg(column).empty()) {
        goal.goal_args["ARG" + std::to_string(column)] = row.arg(column);
      }
    }
    goal.row_index = r;
    goal.rule = rule1 && rule2 ? GoalRule::kBoth
                : rule1        ? GoalRule::kGoalPredicate
                               : GoalRule::kGoalParent;
    goals.push_back(std::move(goal));
  }
  return goals;
}

double EdgeScore(long beneficial, long adverse) {
  return static_cast<double>(beneficial - adverse) /
         static_cast<double>(beneficial + adverse);
}

double ActantialEdge::alpha() const { return EdgeScore(beneficial, adverse); }

std::optional<size_t> ActantialGraph::VertexIndex(const std::string &label) const {
  auto it = std::find(vertices.begin(), vertices.end(), label);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<size_t>(it - vertices.begin());
}

namespace {

std::string Lower(std::string s) {
  for (char &c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

ActantialGraph BuildActantialGraph(const NarrativeTraceTable &table,
                                   const VerbOntology &ontology,
                                   const ActantialOptions &options) {
  ActantialGraph graph;
  std::unordered_map<std::string, size_t> index;
  auto vertex = [&](const std::string &label) {
    auto [it, inserted] = index.try_emplace(label, graph.vertices.size());
    if (inserted) graph.vertices.push_back(label);
    return it->second;
  };
  std::map<std::pair<size_t, size_t>, ActantialEdge> edges;
  for (const TraceRow &row : table.rows) {
    if (row.arg(0).empty() || row.arg(1).empty()) continue;
    std::string agent = options.lowercase ? Lower(row.arg(0)) : row.arg(0);
    std::string patient = options.lowercase ? Lower(row.arg(1)) : row.arg(1);
    ActionPolarity polarity = ontology.Classify(row.predicate_frame).polarity;
    if (row.predicate_polarity == Polarity::kNegative ||
        polarity == ActionPolarity::kNeutral) {
      ++graph.neutral[{agent, patient}];
      continue;
    }
    size_t i = vertex(agent);
    size_t j = vertex(patient);
    ActantialEdge &edge = edges[{i, j}];
    edge.source = i;
    edge.target = j;
    if (polarity == ActionPolarity::kBeneficial) {
      ++edge.beneficial;
    } else {
      ++edge.adverse;
    }
  }
  for (auto &[key, edge] : edges) graph.edges.push_back(edge);
  return graph;
}

ActantialGraph EgoNetwork(const ActantialGraph &graph, const std::string &actor,
                          long min_weight, SignFilter sign) {
  std::optional<size_t> center = graph.VertexIndex(actor);
  if (!center) {
    throw SignalsError(SignalsErrc::kUnknownActor,
                       "actor '" + actor + "' is not in the graph");
  }
  ActantialGraph ego;
  std::vector<long> remap(graph.vertices.size(), -1);
  auto vertex = [&](size_t old) {
    if (remap[old] < 0) {
      remap[old] = static_cast<long>(ego.vertices.size());
      ego.vertices.push_back(graph.vertices[old]);
    }
    return static_cast<size_t>(remap[old]);
  };
  vertex(*center);
  for (const ActantialEdge &edge : graph.edges) {
    if (edge.source != *center && edge.target != *center) continue;
    if (edge.weight() < min_weight) continue;
    double alpha = edge.alpha();
    if (sign == SignFilter::kPositive && !(alpha > 0)) continue;
    if (sign == SignFilter::kNegative && !(alpha < 0)) continue;
    ActantialEdge copy = edge;
    copy.source = vertex(edge.source);
    copy.target = vertex(edge.target);
    ego.edges.push_back(copy);
  }
  return ego;
}

}  // namespace narrative
