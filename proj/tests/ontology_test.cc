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


#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "narrative/ontology.h"
#include "polarity_lists.h"
#include "test_util.h"

namespace narrative {
namespace {

VerbOntology Shipped() { return LoadOntologyDir(NARRATIVE_DEFAULT_ONTOLOGY_DIR); }

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("ontology_test_" + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  void Write(const std::string &name, const std::string &content) const {
    std::ofstream(path / name, std::ios::binary) << content;
  }
};

TEST_CASE("shipped polarity lists") {
  VerbOntology ontology = Shipped();
  for (std::string_view c : testing::kBeneficialCategories) {
    CAPTURE(c);
    CHECK(ontology.PolarityOf(c) == ActionPolarity::kBeneficial);
  }
  for (std::string_view c : testing::kAdverseCategories) {
    CAPTURE(c);
    CHECK(ontology.PolarityOf(c) == ActionPolarity::kAdverse);
  }
  CHECK(ontology.category_polarity().size() ==
        testing::kBeneficialCategories.size() + testing::kAdverseCategories.size());
  CHECK(testing::kBeneficialCategories.size() == 75);
  CHECK(testing::kAdverseCategories.size() == 79);
}

TEST_CASE("classification") {
  VerbOntology ontology = Shipped();
  FrameClass help = ontology.Classify("help-01");
  CHECK(help.category == "HELP_HEAL_CARE_CURE");
  CHECK(help.polarity == ActionPolarity::kBeneficial);
  CHECK_FALSE(help.is_goal);

  FrameClass attack = ontology.Classify("attack-01");
  CHECK(attack.category == "ATTACK_BOMB");
  CHECK(attack.polarity == ActionPolarity::kAdverse);

  FrameClass want = ontology.Classify("want-01");
  CHECK(want.category == "REQUIRE_NEED_WANT_HOPE");
  CHECK(want.is_goal);

  FrameClass oblige = ontology.Classify("oblige-01");
  CHECK(oblige.category == "OBLIGE_FORCE");
  CHECK(oblige.polarity == ActionPolarity::kAdverse);
  CHECK(oblige.is_goal);

  FrameClass unknown = ontology.Classify("unknown-99");
  CHECK(unknown.category == "UNMAPPED");
  CHECK(unknown.polarity == ActionPolarity::kNeutral);
  CHECK_FALSE(unknown.is_goal);

  CHECK(ontology.goal_categories() ==
        std::set<std::string, std::less<>>{"OBLIGE_FORCE", "REQUIRE_NEED_WANT_HOPE"});
}

TEST_CASE("shipped data checksum") {
  // Changing the data files changes every downstream count; update this
  // value deliberately.
  CHECK(OntologyChecksum(Shipped()) == "7c761502511760c9");
}

TEST_CASE("fnv-1a reference values") {
  CHECK(Fnv1a64Hex("") == "cbf29ce484222325");
  CHECK(Fnv1a64Hex("a") == "af63dc4c8601ec8c");
  CHECK(Fnv1a64Hex("foobar") == "85944171f73967e8");
}

TEST_CASE("loader errors") {
  TempDir dir;
  SUBCASE("missing file") {
    try {
      LoadOntologyDir(dir.path);
      FAIL("expected an error");
    } catch (const OntologyError &e) {
      CHECK(e.code() == OntologyErrc::kMissingFile);
    }
  }
  SUBCASE("malformed line") {
    dir.Write("propbank_verbatlas.tsv", "# header\nwant-01\tREQUIRE\nbroken line\n");
    dir.Write("verbatlas_polarity.tsv", "");
    try {
      LoadOntologyDir(dir.path);
      FAIL("expected an error");
    } catch (const OntologyError &e) {
      CHECK(e.code() == OntologyErrc::kMalformedLine);
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("conflicting polarity") {
    dir.Write("propbank_verbatlas.tsv", "");
    dir.Write("verbatlas_polarity.tsv", "KILL\tadverse\nkill\tbeneficial\n");
    try {
      LoadOntologyDir(dir.path);
      FAIL("expected an error");
    } catch (const OntologyError &e) {
      CHECK(e.code() == OntologyErrc::kConflictingPolarity);
    }
  }
  SUBCASE("lower-case categories are normalized") {
    dir.Write("propbank_verbatlas.tsv", "kill-01\tkill\n");
    dir.Write("verbatlas_polarity.tsv", "kill\tadverse\r\n");
    VerbOntology ontology = LoadOntologyDir(dir.path);
    CHECK(ontology.Classify("kill-01").polarity == ActionPolarity::kAdverse);
  }
}

TEST_CASE("environment override") {
  setenv("NARRATIVE_ONTOLOGY_DIR", "/some/where", 1);
  CHECK(DefaultOntologyDir() == std::filesystem::path("/some/where"));
  unsetenv("NARRATIVE_ONTOLOGY_DIR");
  CHECK(DefaultOntologyDir() == std::filesystem::path(NARRATIVE_DEFAULT_ONTOLOGY_DIR));
}

}  // namespace
}  // namespace narrative
