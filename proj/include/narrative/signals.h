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

#ifndef NARRATIVE_SIGNALS_H_
#define NARRATIVE_SIGNALS_H_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "narrative/narrative_extract.h"
#include "narrative/ontology.h"

namespace narrative {

enum class SignalsErrc { kUnknownRole, kEmptyGroup, kUnknownActor, kInvalidCounts };

class SignalsError : public std::runtime_error {
 public:
  SignalsError(SignalsErrc code, const std::string &message)
      : std::runtime_error(message), code_(code) {}
  SignalsErrc code() const { return code_; }

 private:
  SignalsErrc code_;
};

// Pronoun and filler words dropped from the headline actor rankings.
const std::set<std::string> &CommonStopwords();

// Parses "ARG0".."ARG6" into a column index. Throws kUnknownRole.
int ArgColumn(const std::string &role);

struct TermCount {
  std::string term;
  long count = 0;

  bool operator==(const TermCount &other) const = default;
};

// Sorted by descending count, ties by term.
std::vector<TermCount> RankCounts(const std::map<std::string, long> &counts);

// Value counts of the label in `role` (ARG0..ARG6); empty cells are skipped.
std::vector<TermCount> CountByRole(const NarrativeTraceTable &table,
                                   const std::string &role,
                                   const std::set<std::string> &stoplist = {});

// Value counts of predicates. With an ontology, mapped frames are counted by
// their VerbAtlas category and unmapped frames by the frame label.
std::vector<TermCount> CountPredicates(const NarrativeTraceTable &table,
                                       const VerbOntology *ontology = nullptr,
                                       const std::set<std::string> &stoplist = {});

struct EventFilter {
  // Role ("ARG0".."ARG6") to required label.
  std::map<std::string, std::string> roles;
  std::optional<std::string> predicate;
  std::optional<std::string> parent_predicate;
  // Requires `ontology`.
  std::optional<std::string> category;
  bool substring = false;
};

std::vector<TraceRow> FilterEvents(const NarrativeTraceTable &table,
                                   const EventFilter &filter,
                                   const VerbOntology *ontology = nullptr);

// Document grouping for tf-idf: group id -> member document ids.
struct DocumentGrouping {
  std::map<std::string, std::set<std::string>> groups;

  size_t size() const { return groups.size(); }
  // Throws SignalsError(kInvalidCounts) if a group is empty or two groups
  // share a document.
  void Validate() const;
  std::optional<std::string> GroupOf(const std::string &document_id) const;
};

// C (m x n counts) with rows = terms and columns = groups.
class TermDocumentCounts {
 public:
  TermDocumentCounts(std::vector<std::string> terms,
                     std::vector<std::string> groups,
                     std::vector<std::vector<long>> counts);

  const std::vector<std::string> &terms() const { return terms_; }
  const std::vector<std::string> &groups() const { return groups_; }
  long count(size_t term, size_t group) const { return counts_[term][group]; }
  int occurs(size_t term, size_t group) const { return counts_[term][group] > 0 ? 1 : 0; }
  size_t num_terms() const { return terms_.size(); }
  size_t num_groups() const { return groups_.size(); }

 private:
  std::vector<std::string> terms_;
  std::vector<std::string> groups_;
  std::vector<std::vector<long>> counts_;
};

// Counts the term produced by `term_of` for every row whose document belongs
// to a group. Rows for which `term_of` returns an empty string are skipped.
TermDocumentCounts BuildTermCounts(
    const std::vector<TraceRow> &rows, const DocumentGrouping &grouping,
    const std::function<std::string(const TraceRow &)> &term_of);

struct TfidfMatrix {
  std::vector<std::string> terms;
  std::vector<std::string> groups;
  std::vector<std::vector<double>> tf;
  std::vector<double> idf;  // per term
  std::vector<std::vector<double>> score;
};

// tf(i,j) = C_ij / sum_i C_ij, idf(i) = ln(n / sum_j O_ij), score = tf * idf.
// Throws SignalsError(kEmptyGroup) if some group has no counts.
TfidfMatrix Tfidf(const TermDocumentCounts &counts);

struct RankedTerm {
  std::string group;
  std::string term;
  double score = 0;
  long count = 0;
};

// Terms with nonzero count in each group, by descending score then term.
// `top` of 0 keeps everything.
std::vector<RankedTerm> RankTfidf(const TfidfMatrix &tfidf,
                                  const TermDocumentCounts &counts,
                                  size_t top = 0);

enum class GoalRule { kGoalPredicate = 1, kGoalParent = 2, kBoth = 3 };

struct GoalRecord {
  std::string actor;
  std::string goal_predicate;
  std::map<std::string, std::string> goal_args;
  size_t row_index = 0;
  GoalRule rule = GoalRule::kGoalPredicate;
};

// Rows where ARG0 is one of `actor_aliases` and either the predicate
// (rule 1) or the parent predicate (rule 2) has a goal category. A row that
// satisfies both rules is reported once.
std::vector<GoalRecord> ExtractGoals(const NarrativeTraceTable &table,
                                     const std::set<std::string> &actor_aliases,
                                     const VerbOntology &ontology);

struct ActantialEdge {
  size_t source = 0;
  size_t target = 0;
  long beneficial = 0;  // B_ij
  long adverse = 0;     // A_ij
  long weight() const { return beneficial + adverse; }
  double alpha() const;
};

// (B - A) / (B + A); requires B + A > 0.
double EdgeScore(long beneficial, long adverse);

struct ActantialGraph {
  std::vector<std::string> vertices;
  std::vector<ActantialEdge> edges;
  // Neutral or negated ARG0 -> ARG1 actions; reported only.
  std::map<std::pair<std::string, std::string>, long> neutral;

  std::optional<size_t> VertexIndex(const std::string &label) const;
};

struct ActantialOptions {
  bool lowercase = false;
};

// Vertices are actors in order of first appearance as an edge endpoint;
// edges are sorted by (source, target).
ActantialGraph BuildActantialGraph(const NarrativeTraceTable &table,
                                   const VerbOntology &ontology,
                                   const ActantialOptions &options = {});

enum class SignFilter { kPositive, kNegative, kAll };

// Edges incident to `actor` with weight >= min_weight. kPositive keeps
// alpha > 0, kNegative alpha < 0. Throws SignalsError(kUnknownActor).
ActantialGraph EgoNetwork(const ActantialGraph &graph, const std::string &actor,
                          long min_weight, SignFilter sign);

}  // namespace narrative

#endif  // NARRATIVE_SIGNALS_H_
