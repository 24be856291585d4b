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


// Brute-force reference implementations used by the unit and acceptance
// tests. They share nothing with the library beyond reading an AmrGraph's
// node and edge lists.

#ifndef NARRATIVE_TESTS_ORACLE_H_
#define NARRATIVE_TESTS_ORACLE_H_

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "narrative/amr_graph.h"

namespace narrative::testing {

struct OracleEdge {
  int source;
  std::string role;
  int target;
};

struct OracleGraph {
  std::vector<std::string> labels;
  std::vector<OracleEdge> edges;
};

OracleGraph ToOracleGraph(const AmrGraph &g);

// Nodes with an outgoing edge whose role spells ARG<digits>.
std::set<int> OraclePredicates(const OracleGraph &g);

// Every node on some simple path that starts at `predicate` and stops at
// the first other predicate it meets.
std::set<int> OracleEventNodes(const OracleGraph &g, int predicate);

// Nodes reachable from `target` by paths that do not pass through a
// predicate; a predicate target yields just itself.
std::set<int> OracleActorNodes(const OracleGraph &g, int target);

// (parent, role) for every ARG edge entering `node`.
std::set<std::pair<int, std::string>> OracleParents(const OracleGraph &g,
                                                    int node);

// Random DAG with `max_nodes` or fewer nodes, at most two ARG edges leaving
// each node, every node reachable from node 0.
AmrGraph RandomDag(std::uint32_t seed, int max_nodes = 8);

// Compares EventSubgraphs/ActorSubgraphs/PredicateNodes on `g` against the
// oracle. Returns an empty string on agreement, else a description of the
// first difference.
std::string CompareWithOracle(const AmrGraph &g);

}  // namespace narrative::testing

#endif  // NARRATIVE_TESTS_ORACLE_H_
