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


#ifndef NARRATIVE_TESTS_TEST_UTIL_H_
#define NARRATIVE_TESTS_TEST_UTIL_H_

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "narrative/amr_graph.h"
#include "narrative/narrative_extract.h"
#include "narrative/penman.h"

namespace narrative::testing {

inline std::filesystem::path DataPath(const std::string &name) {
  return std::filesystem::path(NARRATIVE_TEST_DATA_DIR) / name;
}

inline std::string ReadText(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline AmrGraph Normalize(std::string_view penman, std::string sentence_id = "s",
                          std::string document_id = "d") {
  return NormalizeAmr(ParsePenman(penman), std::move(sentence_id),
                      std::move(document_id));
}

// Normalized graphs of every block in an AMR file.
inline std::vector<AnnotatedSentence> LoadSentences(
    const std::filesystem::path &path, const std::string &document_id) {
  AmrCorpus corpus = ReadAmrCorpus(ReadText(path));
  std::vector<AnnotatedSentence> sentences;
  for (const AmrBlock &block : corpus.blocks) {
    sentences.push_back({NormalizeAmr(block.graph, block.metadata.at("id"),
                                      document_id),
                         block.metadata.at("snt")});
  }
  return sentences;
}

inline const AmrNode *FindLabel(const AmrGraph &g, std::string_view label) {
  for (const AmrNode &node : g.nodes()) {
    if (node.label == label) return &node;
  }
  return nullptr;
}

inline std::vector<std::string> Labels(const AmrGraph &g,
                                       const std::vector<NodeId> &ids) {
  std::vector<std::string> out;
  for (NodeId id : ids) out.push_back(g.node(id).label);
  return out;
}

inline const char kBarrosoSentence[] =
    "(w / want-01 :ARG0 (p / person :name (n / name :op1 \"Emmanuel\" :op2 "
    "\"Barroso\")) :ARG1 (i / invest-01 :ARG0 (o / organization :name (n2 / "
    "name :op1 \"European\" :op2 \"Union\")) :ARG2 (a / and :op1 (i2 / "
    "innovate-01) :op2 (t / technology) :op3 (r / role :poss (s / science))) "
    ":degree (m / more)))";

}  // namespace narrative::testing

#endif  // NARRATIVE_TESTS_TEST_UTIL_H_
