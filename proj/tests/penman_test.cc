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


#include <sstream>

#include "doctest.h"
#include "narrative/penman.h"
#include "test_util.h"

namespace narrative {
namespace {

using testing::kBarrosoSentence;

PenmanErrc ErrorOf(std::string_view text) {
  try {
    ParsePenman(text);
  } catch (const PenmanError &e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return PenmanErrc::kMalformed;
}

TEST_CASE("barroso example: fragment parses into instances, edges and attributes") {
  PenmanGraph g = ParsePenman(
      "(w / want-01 :ARG0 (p / person :name (n / name :op1 \"Emmanuel\" "
      ":op2 \"Barroso\")) :ARG1 (i / invest-01))");
  CHECK(g.top == "w");
  std::vector<PenmanInstance> instances = {
      {"w", "want-01"}, {"p", "person"}, {"n", "name"}, {"i", "invest-01"}};
  CHECK(g.instances == instances);
  std::vector<PenmanEdge> edges = {
      {"w", "ARG0", "p"}, {"p", "name", "n"}, {"w", "ARG1", "i"}};
  CHECK(g.edges == edges);
  std::vector<PenmanAttribute> attributes = {
      {"n", "op1", {"Emmanuel", ConstantKind::kString}},
      {"n", "op2", {"Barroso", ConstantKind::kString}}};
  CHECK(g.attributes == attributes);
}

TEST_CASE("minimal graph") {
  PenmanGraph g = ParsePenman("(a / amr-unknown)");
  CHECK(g.instances.size() == 1);
  CHECK(g.edges.empty());
  CHECK(g.attributes.empty());
  CHECK(SerializePenman(g) == "(a / amr-unknown)");
}

TEST_CASE("re-entrancy does not create instances") {
  PenmanGraph g = ParsePenman("(s / see-01 :ARG0 (b / boy) :ARG1 b)");
  CHECK(g.instances.size() == 2);
  std::vector<PenmanEdge> edges = {{"s", "ARG0", "b"}, {"s", "ARG1", "b"}};
  CHECK(g.edges == edges);
}

TEST_CASE("re-entrancy may precede the definition") {
  PenmanGraph g = ParsePenman("(s / see-01 :ARG1 b :ARG0 (b / boy))");
  CHECK(g.attributes.empty());
  std::vector<PenmanEdge> edges = {{"s", "ARG1", "b"}, {"s", "ARG0", "b"}};
  CHECK(g.edges == edges);
}

TEST_CASE("constants keep their kind") {
  PenmanGraph g = ParsePenman(
      "(d / date-entity :year 2019 :mode imperative :polarity - :wiki \"Q1\")");
  REQUIRE(g.attributes.size() == 4);
  CHECK(g.attributes[0].value == Constant{"2019", ConstantKind::kNumber});
  CHECK(g.attributes[1].value == Constant{"imperative", ConstantKind::kSymbol});
  CHECK(g.attributes[2].value == Constant{"-", ConstantKind::kSymbol});
  CHECK(g.attributes[3].value == Constant{"Q1", ConstantKind::kString});
}

TEST_CASE("escaped quotes inside strings") {
  PenmanGraph g = ParsePenman(R"((s / say-01 :ARG1 "she said \"yes\""))");
  REQUIRE(g.attributes.size() == 1);
  CHECK(g.attributes[0].value.value == "she said \"yes\"");
  CHECK(ParsePenman(SerializePenman(g)).SortedTriples() == g.SortedTriples());
}

TEST_CASE("alignment markers are dropped") {
  PenmanGraph g =
      ParsePenman("(s / see-01~e.2 :ARG0~e.1 (b / boy~e.0) :ARG1 \"x\"~e.4)");
  CHECK(g.instances[0].concept_label == "see-01");
  CHECK(g.edges[0].role == "ARG0");
  CHECK(g.instances[1].concept_label == "boy");
  CHECK(g.attributes[0].value.value == "x");
}

TEST_CASE("comment lines are ignored") {
  PenmanGraph g = ParsePenman("# ::snt hi\n(a / amr-unknown)\n# trailing\n");
  CHECK(g.instances.size() == 1);
}

TEST_CASE("malformed input") {
  CHECK(ErrorOf("(w / want-01 :ARG0") == PenmanErrc::kUnbalancedParens);
  CHECK(ErrorOf("(w / want-01 :ARG0 (b / boy)") == PenmanErrc::kUnbalancedParens);
  CHECK(ErrorOf("(a / amr-unknown))") == PenmanErrc::kUnbalancedParens);
  CHECK(ErrorOf("") == PenmanErrc::kEmptyInput);
  CHECK(ErrorOf("  # only a comment\n") == PenmanErrc::kEmptyInput);
  CHECK(ErrorOf("(a / b :ARG0 (c / d) :ARG1 (c / e))") ==
        PenmanErrc::kDuplicateInstanceDefinition);
  CHECK(ErrorOf("(a / b :ARG0)") == PenmanErrc::kDanglingRole);
  CHECK(ErrorOf("(a / b :ARG0 :ARG1 (c / d))") == PenmanErrc::kDanglingRole);
  CHECK(ErrorOf("a / b") == PenmanErrc::kMalformed);
}

TEST_CASE("serializer rejects unreachable instances") {
  PenmanGraph g = ParsePenman("(a / amr-unknown)");
  g.instances.push_back({"x", "boy"});
  try {
    SerializePenman(g);
    FAIL("expected DisconnectedGraph");
  } catch (const PenmanError &e) {
    CHECK(e.code() == PenmanErrc::kDisconnectedGraph);
  }
}

TEST_CASE("barroso example: round trip keeps triples") {
  PenmanGraph g = ParsePenman(kBarrosoSentence);
  PenmanGraph again = ParsePenman(SerializePenman(g));
  CHECK(again.SortedTriples() == g.SortedTriples());
  CHECK(again.top == g.top);
}

TEST_CASE("metadata lines") {
  std::map<std::string, std::string> metadata;
  ParseMetadataLine("# ::id s1 ::date 2020-01-01", &metadata);
  ParseMetadataLine("# ::snt Hello.", &metadata);
  ParseMetadataLine("# plain comment", &metadata);
  CHECK(metadata.size() == 3);
  CHECK(metadata["id"] == "s1");
  CHECK(metadata["date"] == "2020-01-01");
  CHECK(metadata["snt"] == "Hello.");
}

TEST_CASE("corpus blocks") {
  SUBCASE("two blocks") {
    AmrCorpus corpus = ReadAmrCorpus("(a / b)\n\n(c / d)\n");
    CHECK(corpus.blocks.size() == 2);
    CHECK(corpus.failures.empty());
  }
  SUBCASE("metadata is copied") {
    AmrCorpus corpus = ReadAmrCorpus("# ::id s1\n# ::snt Hello.\n(h / hello)\n");
    REQUIRE(corpus.blocks.size() == 1);
    CHECK(corpus.blocks[0].metadata ==
          std::map<std::string, std::string>{{"id", "s1"}, {"snt", "Hello."}});
  }
  SUBCASE("failures are isolated") {
    AmrCorpus corpus =
        ReadAmrCorpus("(a / b)\n\n(w / want-01 :ARG0\n\n\n(c / d :ARG0 (e / f))\n");
    CHECK(corpus.blocks.size() == 2);
    REQUIRE(corpus.failures.size() == 1);
    CHECK(corpus.failures[0].index == 1);
    CHECK(corpus.blocks[1].index == 2);
  }
  SUBCASE("header comments are not a block") {
    AmrCorpus corpus = ReadAmrCorpus("# a file header\n\n# ::id x\n(a / b)\n");
    REQUIRE(corpus.blocks.size() == 1);
    CHECK(corpus.blocks[0].index == 0);
  }
  SUBCASE("CRLF line endings") {
    AmrCorpus corpus = ReadAmrCorpus("# ::id s1\r\n(a / b)\r\n\r\n(c / d)\r\n");
    REQUIRE(corpus.blocks.size() == 2);
    CHECK(corpus.blocks[0].metadata["id"] == "s1");
  }
}

TEST_CASE("round-trip fixture") {
  std::istringstream in(testing::ReadText(testing::DataPath("roundtrip.txt")));
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    ++count;
    CAPTURE(line);
    PenmanGraph g = ParsePenman(line);
    CHECK(ParsePenman(SerializePenman(g)).SortedTriples() == g.SortedTriples());
  }
  CHECK(count >= 50);
}

}  // namespace
}  // namespace narrative
