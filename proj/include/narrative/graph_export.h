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

#ifndef NARRATIVE_GRAPH_EXPORT_H_
#define NARRATIVE_GRAPH_EXPORT_H_

#include <ostream>
#include <string>
#include <string_view>

#include "narrative/signals.h"

namespace narrative {

// Directed GraphML. Nodes are "n<k>" with a `label` data key; edges carry
// `weight` (int) and `alpha` (double).
void WriteGraphml(const ActantialGraph &graph, std::ostream &out);

// {"nodes":[{"id":label}], "edges":[{"source","target","weight","alpha"}]}
// with source and target given as actor labels.
void WriteGraphJson(const ActantialGraph &graph, std::ostream &out);

std::string XmlEscape(std::string_view text);

// Shortest round-trip decimal form of `value`.
std::string FormatDouble(double value);

}  // namespace narrative

#endif  // NARRATIVE_GRAPH_EXPORT_H_
