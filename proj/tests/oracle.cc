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


#include "oracle.h"

#include <functional>
#include <map>
#include <random>
#include <regex>
#include <sstream>

#include "narrative/narrative_extract.h"

namespace narrative::testing {

OracleGraph ToOracleGraph(const AmrGraph &g) {
  OracleGraph og;
  for (const AmrNode &node : g.nodes()) og.labels.push_back(node.label);
  for (const AmrEdge &edge : g.edges()) {
    og.edges.push_back({edge.source, edge.role.name(), edge.target});
  }
  return og;
}

std::set<int> OraclePredicates(const OracleGraph &g) {
  static const std::regex kArg("ARG[0-9]+");
  std::set<int> result;
  for (int v = 0; v < static_cast<int>(g.labels.size()); ++v) {
    for (const OracleEdge &e : g.edges) {
      if (e.source == v && std::regex_match(e.role, kArg)) result.insert(v);
    }
  }
  return result;
}

namespace {

// Walks every simple path from `start`. A node in `stop` (other than the
// start when `expand_start` is set) ends its path.
std::set<int> PathUnion(const OracleGraph &g, int start, bool expand_start,
                        const std::set<int> &stop) {
  std::set<int> seen;
  std::vector<int> path;
  std::function<void(int)> walk = [&](int v) {
    seen.insert(v);
    bool first = path.empty();
    if (stop.count(v) && !(first && expand_start)) return;
    path.push_back(v);
    for (const OracleEdge &e : g.edges) {
      if (e.source != v) continue;
      bool on_path = false;
      for (int u : path) on_path = on_path || u == e.target;
      if (!on_path) walk(e.target);
    }
    path.pop_back();
  };
  walk(start);
  return seen;
}

}  // namespace

std::set<int> OracleEventNodes(const OracleGraph &g, int predicate) {
  return PathUnion(g, predicate, true, OraclePredicates(g));
}

std::set<int> OracleActorNodes(const OracleGraph &g, int target) {
  return PathUnion(g, target, false, OraclePredicates(g));
}

std::set<std::pair<int, std::string>> OracleParents(const OracleGraph &g,
                                                    int node) {
  static const std::regex kArg("ARG[0-9]+");
  std::set<std::pair<int, std::string>> result;
  for (const OracleEdge &e : g.edges) {
    if (e.target == node && std::regex_match(e.role, kArg)) {
      result.emplace(e.source, e.role);
    }
  }
  return result;
}

AmrGraph RandomDag(std::uint32_t seed, int max_nodes) {
  std::mt19937 rng(seed);
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const int n = uniform(1, max_nodes);
  static const char *kConcepts[] = {"boy", "girl", "economy", "state", "crisis"};
  static const char *kFrames[] = {"want-01", "go-02", "help-01", "see-01"};
  static const char *kOther[] = {"mod", "location", "time", "poss", "manner"};

  std::vector<AmrNode> nodes(n);
  for (int i = 0; i < n; ++i) {
    nodes[i].id = i;
    bool frame = uniform(0, 1) == 1;
    nodes[i].label = frame ? kFrames[uniform(0, 3)] : kConcepts[uniform(0, 4)];
    nodes[i].kind = frame ? NodeKind::kFrame : NodeKind::kConcept;
    nodes[i].variable = "v" + std::to_string(i);
  }
  std::vector<AmrEdge> edges;
  std::vector<int> args(n, 0);
  std::set<std::pair<int, int>> used;
  auto add = [&](int source, int target) {
    if (!used.insert({source, target}).second) return;
    std::string role;
    if (args[source] < 2 && uniform(0, 2) > 0) {
      role = "ARG" + std::to_string(args[source]++);
    } else {
      role = kOther[uniform(0, 4)];
    }
    edges.push_back({source, Role(role), target, false});
  };
  // Spanning edges keep every node reachable from 0; extra edges add
  // re-entrancy. Sources always precede targets, so the result is acyclic.
  for (int j = 1; j < n; ++j) add(uniform(0, j - 1), j);
  int extra = uniform(0, n);
  for (int k = 0; k < extra && n > 1; ++k) {
    int a = uniform(0, n - 2);
    add(a, uniform(a + 1, n - 1));
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return AmrGraph(std::move(nodes), std::move(edges), 0,
                  "seed" + std::to_string(seed));
}

namespace {

template <typename Range>
std::string Show(const Range &values) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int v : values) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace

std::string CompareWithOracle(const AmrGraph &g) {
  OracleGraph og = ToOracleGraph(g);
  std::set<int> predicates = OraclePredicates(og);
  std::vector<NodeId> found = PredicateNodes(g);
  if (std::set<int>(found.begin(), found.end()) != predicates) {
    return "predicates " + Show(found) + " vs oracle " + Show(predicates);
  }

  std::map<int, std::set<std::pair<int, std::string>>> parents_seen;
  std::map<int, int> subgraph_count;
  for (const EventSubgraph &event : EventSubgraphs(g)) {
    const int p = event.predicate;
    ++subgraph_count[p];
    std::set<int> expected = OracleEventNodes(og, p);
    if (std::set<int>(event.nodes.begin(), event.nodes.end()) != expected) {
      return "event " + std::to_string(p) + " nodes " + Show(event.nodes) +
             " vs oracle " + Show(expected);
    }
    if (event.parent_predicate) {
      parents_seen[p].emplace(*event.parent_predicate, event.parent_role->name());
    }
    std::multiset<std::pair<std::string, int>> actor_keys;
    for (const ActorSubgraph &actor : ActorSubgraphs(event, g)) {
      actor_keys.emplace(actor.role.name(), actor.actor_root);
      std::set<int> want = OracleActorNodes(og, actor.actor_root);
      if (std::set<int>(actor.nodes.begin(), actor.nodes.end()) != want) {
        return "actor " + actor.role.name() + " of " + std::to_string(p) +
               " nodes " + Show(actor.nodes) + " vs oracle " + Show(want);
      }
    }
    std::multiset<std::pair<std::string, int>> expected_keys;
    for (const OracleEdge &e : og.edges) {
      if (e.source == p && e.role.rfind("ARG", 0) == 0) {
        expected_keys.emplace(e.role, e.target);
      }
    }
    if (actor_keys != expected_keys) {
      return "actor roles of " + std::to_string(p) + " differ from ARG edges";
    }
  }
  for (int p : predicates) {
    auto parents = OracleParents(og, p);
    if (parents_seen[p] != parents) {
      return "parents of " + std::to_string(p) + " differ";
    }
    int want = parents.empty() ? 1 : static_cast<int>(parents.size());
    if (subgraph_count[p] != want) {
      return "predicate " + std::to_string(p) + " has " +
             std::to_string(subgraph_count[p]) + " subgraphs, oracle " +
             std::to_string(want);
    }
  }
  return "";
}

}  // namespace narrative::testing
