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

#ifndef NARRATIVE_AMR_GRAPH_H_
#define NARRATIVE_AMR_GRAPH_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "narrative/penman.h"

namespace narrative {

// A semantic role label without the leading colon ("ARG0", "mod", "op2").
class Role {
 public:
  Role() = default;
  explicit Role(std::string name);

  const std::string &name() const { return name_; }

  // ARGn roles (n a non-negative integer), never inverted.
  bool is_arg() const { return arg_index_ >= 0; }
  int arg_index() const { return arg_index_; }

  // opN roles, N >= 1.
  bool is_op() const { return op_index_ >= 0; }
  int op_index() const { return op_index_; }

  // True for "-of" roles that denote an inverted relation. A few AMR roles
  // (consist-of, prep-out-of, ...) end in "-of" but are not inversions.
  bool is_inverse() const;
  Role Inverted() const;

  bool operator==(const Role &other) const { return name_ == other.name_; }
  auto operator<=>(const Role &other) const { return name_ <=> other.name_; }

 private:
  std::string name_;
  int arg_index_ = -1;
  int op_index_ = -1;
};

inline Role ArgRole(int index) { return Role("ARG" + std::to_string(index)); }

using NodeId = int;

enum class NodeKind { kFrame, kConcept, kName, kConstant, kConjunction };
enum class Polarity { kPositive, kNegative };

const char *NodeKindName(NodeKind kind);
const char *PolarityName(Polarity polarity);

struct AmrNode {
  NodeId id = 0;
  std::string label;
  NodeKind kind = NodeKind::kConcept;
  Polarity polarity = Polarity::kPositive;
  // PENMAN variable; empty for constants and collapsed names.
  std::string variable;
};

struct AmrEdge {
  NodeId source = 0;
  Role role;
  NodeId target = 0;
  // An inverse role whose reversal would have closed a cycle.
  bool inverse_kept = false;
};

enum class AmrGraphErrc { kCyclicAfterNormalization, kInvalidGraph };

class AmrGraphError : public std::runtime_error {
 public:
  AmrGraphError(AmrGraphErrc code, const std::string &message)
      : std::runtime_error(message), code_(code) {}
  AmrGraphErrc code() const { return code_; }

 private:
  AmrGraphErrc code_;
};

// Set of PropBank frames. When non-empty, a label is a frame only if it has
// the sense suffix and is listed here.
using FrameInventory = std::unordered_set<std::string>;

// True if `label` looks like a PropBank frame: lemma, '-', two digits.
bool IsFrameLabel(std::string_view label);

// Rooted directed acyclic graph for one sentence. Node ids are indices into
// nodes(). Edges are canonical: inverse roles have been reversed unless the
// reversal would close a cycle (see AmrEdge::inverse_kept).
class AmrGraph {
 public:
  AmrGraph() = default;
  // Throws AmrGraphError(kInvalidGraph) on out-of-range ids or
  // kCyclicAfterNormalization if the edges contain a directed cycle.
  AmrGraph(std::vector<AmrNode> nodes, std::vector<AmrEdge> edges,
           NodeId root, std::string sentence_id = {},
           std::string document_id = {});

  const std::vector<AmrNode> &nodes() const { return nodes_; }
  const std::vector<AmrEdge> &edges() const { return edges_; }
  const AmrNode &node(NodeId id) const { return nodes_[id]; }
  const AmrEdge &edge(size_t index) const { return edges_[index]; }
  NodeId root() const { return root_; }
  const std::string &sentence_id() const { return sentence_id_; }
  const std::string &document_id() const { return document_id_; }
  size_t size() const { return nodes_.size(); }

  // Edge indices, in insertion order.
  std::span<const size_t> out_edges(NodeId id) const { return out_[id]; }
  std::span<const size_t> in_edges(NodeId id) const { return in_[id]; }

  bool HasOutgoingArg(NodeId id) const;

  // All node ids in topological order; among ready nodes the smallest id
  // (earliest written) goes first.
  const std::vector<NodeId> &topological_order() const { return topo_; }

  const std::vector<std::string> &warnings() const { return warnings_; }
  void AddWarning(std::string warning) {
    warnings_.push_back(std::move(warning));
  }

 private:
  std::vector<AmrNode> nodes_;
  std::vector<AmrEdge> edges_;
  NodeId root_ = 0;
  std::string sentence_id_;
  std::string document_id_;
  std::vector<std::vector<size_t>> out_;
  std::vector<std::vector<size_t>> in_;
  std::vector<NodeId> topo_;
  std::vector<std::string> warnings_;
};

// Converts a parsed PENMAN graph into an AmrGraph: instances become nodes in
// order, attributes become constant nodes, ":polarity -" marks its owner as
// negative, and inverse roles are reversed where acyclicity allows.
// Name nodes are not collapsed here; see CollapseNames.
AmrGraph BuildAmrGraph(const PenmanGraph &g, std::string sentence_id,
                       std::string document_id,
                       const FrameInventory &inventory = {});

// Replaces every "name" node and its opN constants with one node of kind
// kName whose label is the op strings joined by spaces in op-index order.
AmrGraph CollapseNames(const AmrGraph &g);

// BuildAmrGraph followed by CollapseNames.
AmrGraph NormalizeAmr(const PenmanGraph &g, std::string sentence_id,
                      std::string document_id,
                      const FrameInventory &inventory = {});

std::vector<NodeId> FrameNodes(const AmrGraph &g);

}  // namespace narrative

#endif  // NARRATIVE_AMR_GRAPH_H_
