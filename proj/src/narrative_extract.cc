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

#include "narrative/narrative_extract.h"

#include <algorithm>
#include <deque>
#include <tuple>
#include <utility>

namespace narrative {

bool EventSubgraph::Contains(NodeId id) const {
  return std::binary_search(nodes.begin(), nodes.end(), id);
}

namespace {

std::vector<char> PredicateMask(const AmrGraph &g) {
  std::vector<char> mask(g.size(), 0);
  for (const AmrNode &node : g.nodes()) {
    mask[node.id] = g.HasOutgoingArg(node.id) ? 1 : 0;
  }
  return mask;
}

struct Reach {
  std::vector<NodeId> nodes;
  std::vector<size_t> edges;
};

// Breadth-first reachability from `root` over edges accepted by
// `edge_allowed`, never expanding nodes rejected by `expand`.
template <typename EdgePred, typename ExpandPred>
Reach ReachFrom(const AmrGraph &g, NodeId root, EdgePred edge_allowed,
                ExpandPred expand) {
  Reach reach;
  std::vector<char> seen(g.size(), 0);
  std::deque<NodeId> queue = {root};
  seen[root] = 1;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    reach.nodes.push_back(u);
    if (!expand(u)) continue;
    for (size_t e : g.out_edges(u)) {
      if (!edge_allowed(e)) continue;
      reach.edges.push_back(e);
      NodeId v = g.edge(e).target;
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  std::sort(reach.nodes.begin(), reach.nodes.end());
  std::sort(reach.edges.begin(), reach.edges.end());
  return reach;
}

// ARG links from enclosing predicates into `node`. An incoming opN edge from a
// conjunction passes on whatever ARG links reach that conjunction.
void CollectParents(const AmrGraph &g, NodeId node,
                    std::vector<std::pair<NodeId, Role>> *parents) {
  for (size_t e : g.in_edges(node)) {
    const AmrEdge &edge = g.edge(e);
    if (edge.role.is_arg()) {
      std::pair<NodeId, Role> link(edge.source, edge.role);
      if (std::find(parents->begin(), parents->end(), link) == parents->end()) {
        parents->push_back(std::move(link));
      }
    } else if (edge.role.is_op() &&
               g.node(edge.source).kind == NodeKind::kConjunction) {
      CollectParents(g, edge.source, parents);
    }
  }
}

std::vector<char> EdgeMask(const AmrGraph &g, std::span<const size_t> edges) {
  std::vector<char> mask(g.edges().size(), 0);
  for (size_t e : edges) mask[e] = 1;
  return mask;
}

ActorSubgraph MakeActor(const AmrGraph &g, NodeId root, const Role &role,
                        const std::vector<char> &event_edges,
                        const ExtractionOptions &options) {
  Reach reach = ReachFrom(
      g, root, [&](size_t e) { return event_edges[e] != 0; },
      [](NodeId) { return true; });
  ActorSubgraph actor;
  actor.actor_root = root;
  actor.role = role;
  actor.nodes = std::move(reach.nodes);
  actor.edges = std::move(reach.edges);
  actor.label = FlattenActor(actor, g, options);
  return actor;
}

struct Conjunct {
  std::string label;
  bool is_event = false;
};

void CollectConjuncts(const AmrGraph &g, NodeId conjunction, const Role &role,
                      const std::vector<char> &event_edges,
                      const std::vector<char> &is_predicate,
                      const ExtractionOptions &options,
                      std::vector<Conjunct> *out) {
  std::vector<size_t> ops;
  for (size_t e : g.out_edges(conjunction)) {
    if (event_edges[e] && g.edge(e).role.is_op()) ops.push_back(e);
  }
  std::stable_sort(ops.begin(), ops.end(), [&](size_t a, size_t b) {
    return g.edge(a).role.op_index() < g.edge(b).role.op_index();
  });
  for (size_t e : ops) {
    NodeId child = g.edge(e).target;
    if (g.node(child).kind == NodeKind::kConjunction) {
      size_t before = out->size();
      CollectConjuncts(g, child, role, event_edges, is_predicate, options, out);
      if (out->size() > before) continue;
    }
    ActorSubgraph actor = MakeActor(g, child, role, event_edges, options);
    out->push_back({std::move(actor.label), is_predicate[child] != 0});
  }
}

}  // namespace

std::vector<NodeId> PredicateNodes(const AmrGraph &g) {
  std::vector<NodeId> predicates;
  for (NodeId id : g.topological_order()) {
    if (g.HasOutgoingArg(id)) predicates.push_back(id);
  }
  return predicates;
}

std::vector<EventSubgraph> EventSubgraphs(const AmrGraph &g) {
  std::vector<char> is_predicate = PredicateMask(g);
  std::vector<EventSubgraph> events;
  for (NodeId p : PredicateNodes(g)) {
    Reach reach = ReachFrom(
        g, p, [](size_t) { return true; },
        [&](NodeId u) { return u == p || !is_predicate[u]; });
    std::vector<std::pair<NodeId, Role>> parents;
    CollectParents(g, p, &parents);

    EventSubgraph event;
    event.predicate = p;
    event.nodes = std::move(reach.nodes);
    event.edges = std::move(reach.edges);
    if (parents.empty()) {
      events.push_back(std::move(event));
      continue;
    }
    for (auto &[parent, role] : parents) {
      EventSubgraph copy = event;
      copy.parent_predicate = parent;
      copy.parent_role = role;
      events.push_back(std::move(copy));
    }
  }
  return events;
}

std::vector<ActorSubgraph> ActorSubgraphs(const EventSubgraph &event,
                                          const AmrGraph &g,
                                          const ExtractionOptions &options) {
  std::vector<char> event_edges = EdgeMask(g, event.edges);
  std::vector<ActorSubgraph> actors;
  for (size_t e : g.out_edges(event.predicate)) {
    const AmrEdge &edge = g.edge(e);
    if (!edge.role.is_arg()) continue;
    actors.push_back(MakeActor(g, edge.target, edge.role, event_edges, options));
  }
  return actors;
}

std::string FlattenActor(const ActorSubgraph &actor, const AmrGraph &g,
                         const ExtractionOptions &options) {
  std::vector<char> allowed = EdgeMask(g, actor.edges);
  std::vector<char> visited(g.size(), 0);
  std::string out;
  auto emit = [&out](const std::string &label) {
    if (label.empty()) return;
    if (!out.empty()) out.push_back(' ');
    out += label;
  };

  auto ordered_children = [&](NodeId u) {
    std::vector<size_t> children;
    for (size_t e : g.out_edges(u)) {
      if (allowed[e]) children.push_back(e);
    }
    auto key = [&](size_t e) {
      const Role &role = g.edge(e).role;
      int rank = role.name() == "name" ? 0 : role.is_op() ? 1 : 2;
      int op = role.is_op() ? role.op_index() : 0;
      return std::tuple<int, int, const std::string &>(rank, op, role.name());
    };
    std::stable_sort(children.begin(), children.end(),
                     [&](size_t a, size_t b) { return key(a) < key(b); });
    return children;
  };

  // Iterative preorder so deep graphs cannot exhaust the stack.
  std::vector<NodeId> stack = {actor.actor_root};
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    if (visited[u]) continue;
    visited[u] = 1;
    std::vector<size_t> children = ordered_children(u);
    bool replaced = false;
    if (options.label_style == ActorLabelStyle::kNamesOnly) {
      for (size_t e : children) {
        const AmrNode &child = g.node(g.edge(e).target);
        if (g.edge(e).role.name() == "name" && child.kind == NodeKind::kName &&
            !child.label.empty() && !visited[child.id]) {
          emit(child.label);
          visited[child.id] = 1;
          replaced = true;
          break;
        }
      }
    }
    if (!replaced) emit(g.node(u).label);
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
      NodeId v = g.edge(*it).target;
      if (!visited[v]) stack.push_back(v);
    }
  }
  return out;
}

std::vector<TraceRow> ExpandConjunctions(const TraceRow &row,
                                         const EventSubgraph &event,
                                         std::span<const ActorSubgraph> actors,
                                         const AmrGraph &g,
                                         const ExtractionOptions &options) {
  std::vector<char> event_edges = EdgeMask(g, event.edges);
  std::vector<char> is_predicate = PredicateMask(g);

  // Conjunction-valued argument columns, in ARG order; the first actor of a
  // column is the one shown in the row.
  std::vector<std::pair<int, std::vector<Conjunct>>> expansions;
  std::array<bool, kNumArgColumns> taken{};
  std::vector<const ActorSubgraph *> by_column(kNumArgColumns, nullptr);
  for (const ActorSubgraph &actor : actors) {
    int column = actor.role.arg_index();
    if (column < 0 || column >= kNumArgColumns || taken[column]) continue;
    taken[column] = true;
    by_column[column] = &actor;
  }
  for (int column = 0; column < kNumArgColumns; ++column) {
    const ActorSubgraph *actor = by_column[column];
    if (actor == nullptr ||
        g.node(actor->actor_root).kind != NodeKind::kConjunction) {
      continue;
    }
    std::vector<Conjunct> conjuncts;
    CollectConjuncts(g, actor->actor_root, actor->role, event_edges,
                     is_predicate, options, &conjuncts);
    if (!conjuncts.empty()) expansions.emplace_back(column, std::move(conjuncts));
  }
  if (expansions.empty()) return {row};

  std::vector<TraceRow> replicas = {row};
  for (const auto &[column, conjuncts] : expansions) {
    std::vector<TraceRow> next;
    next.reserve(replicas.size() * conjuncts.size());
    for (const TraceRow &base : replicas) {
      for (const Conjunct &conjunct : conjuncts) {
        TraceRow copy = base;
        copy.arg_labels[column] = conjunct.label;
        copy.arg_is_event[column] = conjunct.is_event;
        next.push_back(std::move(copy));
      }
    }
    replicas = std::move(next);
  }
  for (size_t i = 0; i < replicas.size(); ++i) {
    replicas[i].conjunction_index = static_cast<int>(i + 1);
  }
  return replicas;
}

std::vector<TraceRow> ExtractSentenceRows(const AmrGraph &g,
                                          const std::string &sentence_text,
                                          const ExtractionOptions &options) {
  std::vector<char> is_predicate = PredicateMask(g);
  std::vector<TraceRow> rows;
  for (const EventSubgraph &event : EventSubgraphs(g)) {
    std::vector<ActorSubgraph> actors = ActorSubgraphs(event, g, options);
    TraceRow row;
    row.document_id = g.document_id();
    row.sentence_id = g.sentence_id();
    row.sentence_text = sentence_text;
    const AmrNode &predicate = g.node(event.predicate);
    row.predicate_frame = predicate.label;
    row.predicate_polarity = predicate.polarity;
    if (event.parent_predicate) {
      row.parent_predicate_frame = g.node(*event.parent_predicate).label;
      row.parent_role = event.parent_role;
    }
    std::array<bool, kNumArgColumns> taken{};
    for (const ActorSubgraph &actor : actors) {
      int column = actor.role.arg_index();
      if (column < 0 || column >= kNumArgColumns || taken[column]) continue;
      taken[column] = true;
      row.arg_labels[column] = actor.label;
      row.arg_is_event[column] = is_predicate[actor.actor_root] != 0;
    }
    for (TraceRow &r : ExpandConjunctions(row, event, actors, g, options)) {
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

NarrativeTraceTable BuildTraceTable(std::span<const AnnotatedSentence> sentences,
                                    const ExtractionOptions &options,
                                    ExtractionSummary *summary) {
  NarrativeTraceTable table;
  ExtractionSummary local;
  for (const AnnotatedSentence &sentence : sentences) {
    std::vector<TraceRow> rows =
        ExtractSentenceRows(sentence.graph, sentence.text, options);
    ++local.sentences;
    if (rows.empty()) ++local.sentences_without_predicates;
    local.rows += rows.size();
    for (TraceRow &row : rows) table.rows.push_back(std::move(row));
  }
  if (summary != nullptr) *summary = local;
  return table;
}

}  // namespace narrative
