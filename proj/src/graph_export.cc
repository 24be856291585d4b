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

#include "narrative/graph_export.h"

#include <array>
#include <charconv>

#include "json.hpp"

namespace narrative {

std::string XmlEscape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string FormatDouble(double value) {
  std::array<char, 32> buffer;
  auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), ptr);
}

void WriteGraphml(const ActantialGraph &graph, std::ostream &out) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\" "
         "xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\" "
         "xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
         "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n"
      << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n"
      << "  <key id=\"alpha\" for=\"edge\" attr.name=\"alpha\" attr.type=\"double\"/>\n"
      << "  <graph id=\"actantial\" edgedefault=\"directed\">\n";
  for (size_t i = 0; i < graph.vertices.size(); ++i) {
    out << "    <node id=\"n" << i << "\"><data key=\"label\">"
        << XmlEscape(graph.vertices[i]) << "</data></node>\n";
  }
  for (size_t e = 0; e < graph.edges.size(); ++e) {
    const ActantialEdge &edge = graph.edges[e];
    out << "    <edge id=\"e" << e << "\" source=\"n" << edge.source
        << "\" target=\"n" << edge.target << "\"><data key=\"weight\">"
        << edge.weight() << "</data><data key=\"alpha\">"
        << FormatDouble(edge.alpha()) << "</data></edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
}

void WriteGraphJson(const ActantialGraph &graph, std::ostream &out) {
  nlohmann::ordered_json doc;
  doc["nodes"] = nlohmann::ordered_json::array();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const std::string &vertex : graph.vertices) {
    doc["nodes"].push_back({{"id", vertex}});
  }
  for (const ActantialEdge &edge : graph.edges) {
    nlohmann::ordered_json e;
    e["source"] = graph.vertices[edge.source];
    e["target"] = graph.vertices[edge.target];
    e["weight"] = edge.weight();
    e["alpha"] = edge.alpha();
    doc["edges"].push_back(std::move(e));
  }
  out << doc.dump(2) << "\n";
}

}  // namespace narrative
