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

#include "narrative/amr_graph.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <queue>
#include <unordered_map>

namespace narrative {

namespace {

// Parses the integer after `prefix`, or returns -1.
int SuffixIndex(const std::string &name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) {
    return -1;
  }
  int value = 0;
  for (size_t i = prefix.size(); i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
    if (value > 100000) return -1;
    value = value * 10 + (name[i] - '0');
  }
  return value;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Role::Role(std::string name) : name_(std::move(name)) {
  arg_index_ = SuffixIndex(name_, "ARG");
  op_index_ = SuffixIndex(name_, "op");
  if (op_index_ == 0) op_index_ = -1;
}

bool Role::is_inverse() const {
  if (!EndsWith(name_, "-of") || name_.size() == 3) return false;
  return name_ != "consist-of" && name_ != "prep-out-of" &&
         name_ != "prep-on-behalf-of";
}

Role Role::Inverted() const {
  if (is_inverse()) return Role(name_.substr(0, name_.size() - 3));
  return Role(name_ + "-of");
}

const char *NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kFrame: return "frame";
    case NodeKind::kConcept: return "concept";
    case NodeKind::kName: return "name";
    case NodeKind::kConstant: return "constant";
    case NodeKind::kConjunction: return "conjunction";
  }
  return "unknown";
}

const char *PolarityName(Polarity polarity) {
  return polarity == Polarity::kNegative ? "negative" : "positive";
}

bool IsFrameLabel(std::string_view label) {
  if (label.size() < 4) return false;
  size_t n = label.size();
  return label[n - 3] == '-' &&
         std::isdigit(static_cast<unsigned char>(label[n - 2])) &&
         std::isdigit(static_cast<unsigned char>(label[n - 1]));
}

AmrGraph::AmrGraph(std::vector<AmrNode> nodes, std::vector<AmrEdge> edges,
                   NodeId root, std::string sentence_id,
                   std::string document_id)
    : nodes_(std::move(nodes)),
      edges_(std::move(edges)),
      root_(root),
      sentence_id_(std::move(sentence_id)),
      document_id_(std::move(document_id)) {
  const NodeId n = static_cast<NodeId>(nodes_.size());
  if (n == 0 || root_ < 0 || root_ >= n) {
    throw AmrGraphError(AmrGraphErrc::kInvalidGraph, "root out of range");
  }
  for (NodeId i = 0; i < n; ++i) nodes_[i].id = i;
  out_.assign(n, {});
  in_.assign(n, {});
  for (size_t e = 0; e < edges_.size(); ++e) {
    const AmrEdge &edge = edges_[e];
    if (edge.source < 0 || edge.source >= n || edge.target < 0 ||
        edge.target >= n) {
      throw AmrGraphError(AmrGraphErrc::kInvalidGraph,
                          "edge endpoint out of range");
    }
    out_[edge.source].push_back(e);
    in_[edge.target].push_back(e);
  }

  std::vector<int> indegree(n, 0);
  for (const AmrEdge &edge : edges_) ++indegree[edge.target];
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (NodeId i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  topo_.reserve(n);
  while (!ready.empty()) {
    NodeId u = ready.top();
    ready.pop();
    topo_.push_back(u);
    for (size_t e : out_[u]) {
      if (--indegree[edges_[e].target] == 0) ready.push(edges_[e].target);
    }
  }
  if (static_cast<NodeId>(topo_.size()) != n) {
    throw AmrGraphError(AmrGraphErrc::kCyclicAfterNormalization,
                        "graph " + sentence_id_ + " contains a directed cycle");
  }
}

bool AmrGraph::HasOutgoingArg(NodeId id) const {
  for (size_t e : out_[id]) {
    if (edges_[e].role.is_arg()) return true;
  }
  return false;
}

namespace {

// Incrementally maintained adjacency used to test whether adding an edge
// closes a cycle.
class CycleGuard {
 public:
  explicit CycleGuard(size_t n) : adjacency_(n) {}

  bool Reaches(NodeId from, NodeId to) const {
    if (from == to) return true;
    std::vector<char> seen(adjacency_.size(), 0);
    std::vector<NodeId> stack = {from};
    seen[from] = 1;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : adjacency_[u]) {
        if (v == to) return true;
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    return false;
  }

  bool WouldCycle(NodeId source, NodeId target) const {
    return Reaches(target, source);
  }

  void Add(NodeId source, NodeId target) { adjacency_[source].push_back(target); }

 private:
  std::vector<std::vector<NodeId>> adjacency_;
};

}  // namespace

AmrGraph BuildAmrGraph(const PenmanGraph &g, std::string sentence_id,
                       std::string document_id,
                       const FrameInventory &inventory) {
  std::vector<AmrNode> nodes;
  std::unordered_map<std::string, NodeId> by_variable;
  nodes.reserve(g.instances.size() + g.attributes.size());
  for (const PenmanInstance &instance : g.instances) {
    AmrNode node;
    node.id = static_cast<NodeId>(nodes.size());
    node.label = instance.concept_label;
    node.variable = instance.variable;
    if (node.label == "and" || node.label == "or") {
      node.kind = NodeKind::kConjunction;
    } else if (IsFrameLabel(node.label) &&
               (inventory.empty() || inventory.count(node.label) > 0)) {
      node.kind = NodeKind::kFrame;
    }
    by_variable.emplace(instance.variable, node.id);
    nodes.push_back(std::move(node));
  }
  auto top = by_variable.find(g.top);
  if (top == by_variable.end()) {
    throw AmrGraphError(AmrGraphErrc::kInvalidGraph,
                        "top variable has no instance");
  }
  auto lookup = [&](const std::string &variable) {
    auto it = by_variable.find(variable);
    if (it == by_variable.end()) {
      throw AmrGraphError(AmrGraphErrc::kInvalidGraph,
                          "unknown variable '" + variable + "'");
    }
    return it->second;
  };

  std::vector<std::string> warnings;
  std::vector<AmrEdge> edges;
  edges.reserve(g.edges.size() + g.attributes.size());
  // Forward edges go in unconditionally; a cycle among them is a property of
  // the input and is reported by the AmrGraph constructor. Inverse edges are
  // then reversed in written order unless that would close a cycle.
  CycleGuard guard(g.instances.size());
  for (const PenmanEdge &pe : g.edges) {
    if (!Role(pe.role).is_inverse()) guard.Add(lookup(pe.source), lookup(pe.target));
  }
  for (const PenmanEdge &pe : g.edges) {
    NodeId s = lookup(pe.source), t = lookup(pe.target);
    Role role(pe.role);
    if (!role.is_inverse()) {
      edges.push_back({s, std::move(role), t, false});
    } else if (!guard.WouldCycle(t, s)) {
      edges.push_back({t, role.Inverted(), s, false});
      guard.Add(t, s);
    } else {
      edges.push_back({s, std::move(role), t, true});
      guard.Add(s, t);
      warnings.push_back("kept inverse role :" + pe.role + " from " +
                         pe.source + " to " + pe.target);
    }
  }

  for (const PenmanAttribute &attribute : g.attributes) {
    NodeId owner = lookup(attribute.source);
    if (attribute.role == "polarity" && attribute.value.value == "-" &&
        attribute.value.kind == ConstantKind::kSymbol) {
      nodes[owner].polarity = Polarity::kNegative;
      continue;
    }
    AmrNode constant;
    constant.id = static_cast<NodeId>(nodes.size());
    constant.label = attribute.value.value;
    constant.kind = NodeKind::kConstant;
    nodes.push_back(std::move(constant));
    Role role(attribute.role);
    bool kept = role.is_inverse();
    if (kept) {
      warnings.push_back("kept inverse role :" + attribute.role +
                         " on constant of " + attribute.source);
    }
    edges.push_back({owner, std::move(role), nodes.back().id, kept});
  }

  AmrGraph graph(std::move(nodes), std::move(edges), top->second,
                 std::move(sentence_id), std::move(document_id));
  for (std::string &w : warnings) graph.AddWarning(std::move(w));
  return graph;
}

AmrGraph CollapseNames(const AmrGraph &g) {
  const size_t n = g.size();
  std::vector<char> removed(n, 0);
  std::vector<AmrNode> nodes = g.nodes();
  std::vector<std::string> warnings = g.warnings();

  for (const AmrNode &node : g.nodes()) {
    if (node.label != "name" || node.kind == NodeKind::kConstant) continue;
    std::vector<std::pair<int, std::string>> parts;
    for (size_t e : g.out_edges(node.id)) {
      const AmrEdge &edge = g.edge(e);
      const AmrNode &target = g.node(edge.target);
      if (!edge.role.is_op() || target.kind != NodeKind::kConstant) continue;
      parts.emplace_back(edge.role.op_index(), target.label);
      removed[target.id] = 1;
    }
    std::stable_sort(parts.begin(), parts.end(),
                     [](const auto &a, const auto &b) { return a.first < b.first; });
    std::string label;
    for (const auto &[index, part] : parts) {
      if (!label.empty()) label.push_back(' ');
      label += part;
    }
    if (parts.empty()) {
      warnings.push_back("name node " + node.variable + " has no op children");
    }
    nodes[node.id].label = std::move(label);
    nodes[node.id].kind = NodeKind::kName;
  }

  std::vector<NodeId> remap(n, -1);
  std::vector<AmrNode> kept;
  kept.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (removed[i]) continue;
    remap[i] = static_cast<NodeId>(kept.size());
    kept.push_back(std::move(nodes[i]));
  }
  std::vector<AmrEdge> edges;
  edges.reserve(g.edges().size());
  for (const AmrEdge &edge : g.edges()) {
    if (removed[edge.target]) continue;
    edges.push_back({remap[edge.source], edge.role, remap[edge.target],
                     edge.inverse_kept});
  }
  AmrGraph out(std::move(kept), std::move(edges), remap[g.root()],
               g.sentence_id(), g.document_id());
  for (std::string &w : warnings) out.AddWarning(std::move(w));
  return out;
}

AmrGraph NormalizeAmr(const PenmanGraph &g, std::string sentence_id,
                      std::string document_id,
                      const FrameInventory &inventory) {
  return CollapseNames(BuildAmrGraph(g, std::move(sentence_id),
                                     std::move(document_id), inventory));
}

std::vector<NodeId> FrameNodes(const AmrGraph &g) {
  std::vector<NodeId> frames;
  for (const AmrNode &node : g.nodes()) {
    if (node.kind == NodeKind::kFrame) frames.push_back(node.id);
  }
  return frames;
}

}  // namespace narrative
