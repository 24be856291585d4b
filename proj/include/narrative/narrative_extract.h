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

#ifndef NARRATIVE_NARRATIVE_EXTRACT_H_
#define NARRATIVE_NARRATIVE_EXTRACT_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "narrative/amr_graph.h"

namespace narrative {

// Number of ARG columns kept in the trace table (ARG0..ARG6).
inline constexpr int kNumArgColumns = 7;

// One predicate together with everything reachable from it before the next
// predicate. Boundary predicates are members of `nodes` but their outgoing
// edges are not part of `edges`.
struct EventSubgraph {
  NodeId predicate = 0;
  std::vector<NodeId> nodes;   // sorted
  std::vector<size_t> edges;   // indices into the graph's edge list, sorted
  std::optional<NodeId> parent_predicate;
  std::optional<Role> parent_role;

  bool Contains(NodeId id) const;
};

struct ActorSubgraph {
  NodeId actor_root = 0;
  Role role;
  std::vector<NodeId> nodes;  // sorted
  std::vector<size_t> edges;  // sorted
  std::string label;
};

struct TraceRow {
  std::string document_id;
  std::string sentence_id;
  std::string sentence_text;
  std::string predicate_frame;
  Polarity predicate_polarity = Polarity::kPositive;
  std::optional<std::string> parent_predicate_frame;
  std::optional<Role> parent_role;
  // Indexed by ARG number; an empty string means the role is absent.
  std::array<std::string, kNumArgColumns> arg_labels;
  std::array<bool, kNumArgColumns> arg_is_event{};
  std::optional<int> conjunction_index;

  const std::string &arg(int index) const { return arg_labels[index]; }

  bool operator==(const TraceRow &other) const = default;
};

struct NarrativeTraceTable {
  std::vector<TraceRow> rows;
  std::string provenance;
};

struct ExtractionSummary {
  size_t sentences = 0;
  size_t sentences_without_predicates = 0;
  size_t rows = 0;
};

enum class ActorLabelStyle {
  // Every node label of the actor subgraph, e.g. "person Emmanuel Barroso".
  kFull,
  // A node that carries a collapsed name is written as the name alone,
  // e.g. "Emmanuel Barroso".
  kNamesOnly,
};

struct ExtractionOptions {
  ActorLabelStyle label_style = ActorLabelStyle::kFull;
};

// Nodes with at least one outgoing ARG edge, in topological order.
std::vector<NodeId> PredicateNodes(const AmrGraph &g);

std::vector<EventSubgraph> EventSubgraphs(const AmrGraph &g);

// One actor per outgoing ARG edge of the event predicate, in edge order.
// Labels are filled in with FlattenActor.
std::vector<ActorSubgraph> ActorSubgraphs(
    const EventSubgraph &event, const AmrGraph &g,
    const ExtractionOptions &options = {});

// Depth-first label concatenation from the actor root. Children are visited
// name first, then opN ascending, then remaining roles alphabetically.
std::string FlattenActor(const ActorSubgraph &actor, const AmrGraph &g,
                         const ExtractionOptions &options = {});

// Rows for one sentence, conjunctions expanded.
std::vector<TraceRow> ExtractSentenceRows(const AmrGraph &g,
                                          const std::string &sentence_text,
                                          const ExtractionOptions &options = {});

// Replicates `row` once per conjunct of each conjunction-valued argument of
// `event`. Nested conjunctions are expanded recursively; several such roles
// produce their cartesian product. conjunction_index numbers the replicas
// from 1; rows without conjunction arguments are returned unchanged.
std::vector<TraceRow> ExpandConjunctions(const TraceRow &row,
                                         const EventSubgraph &event,
                                         std::span<const ActorSubgraph> actors,
                                         const AmrGraph &g,
                                         const ExtractionOptions &options = {});

struct AnnotatedSentence {
  AmrGraph graph;
  std::string text;
};

NarrativeTraceTable BuildTraceTable(std::span<const AnnotatedSentence> sentences,
                                    const ExtractionOptions &options = {},
                                    ExtractionSummary *summary = nullptr);

}  // namespace narrative

#endif  // NARRATIVE_NARRATIVE_EXTRACT_H_
