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


#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "narrative/csv.h"
#include "narrative/graph_export.h"
#include "narrative/manifest.h"
#include "narrative/trace_table_io.h"
#include "test_util.h"

namespace narrative {
namespace {

std::vector<std::vector<std::string>> ReadAll(const std::string &text) {
  std::istringstream in(text);
  CsvReader reader(in);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> fields;
  while (reader.ReadRow(&fields)) rows.push_back(fields);
  return rows;
}

TEST_CASE("csv quoting") {
  CHECK(CsvEscape("plain") == "plain");
  CHECK(CsvEscape("a,b") == "\"a,b\"");
  CHECK(CsvEscape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(CsvEscape("two\nlines") == "\"two\nlines\"");
  CHECK(CsvEscape("") == "");

  std::ostringstream out;
  CsvWriter writer(out);
  writer.WriteRow({"a", "b,c", ""});
  writer.WriteRow({"x"});
  CHECK(out.str() == "a,\"b,c\",\r\nx\r\n");
}

TEST_CASE("csv reading") {
  CHECK(ReadAll("a,b\nc,d\n") ==
        std::vector<std::vector<std::string>>{{"a", "b"}, {"c", "d"}});
  CHECK(ReadAll("a,\"b\r\nc\"\r\n,\r\n") ==
        std::vector<std::vector<std::string>>{{"a", "b\r\nc"}, {"", ""}});
  CHECK(ReadAll("\"q\"\"x\"") == std::vector<std::vector<std::string>>{{"q\"x"}});
  CHECK_THROWS_AS(ReadAll("\"open"), CsvError);
}

TEST_CASE("csv round trip of awkward fields") {
  std::vector<std::string> fields = {"", ",", "\"", "a\nb", "é ünïcode", " lead"};
  std::ostringstream out;
  CsvWriter(out).WriteRow(fields);
  CHECK(ReadAll(out.str()) == std::vector<std::vector<std::string>>{fields});
}

NarrativeTraceTable FixtureTable() {
  std::vector<AnnotatedSentence> sentences;
  for (auto name : {"corpus/speech_a.amr", "corpus/speech_b.amr"}) {
    for (AnnotatedSentence &s : testing::LoadSentences(testing::DataPath(name), name)) {
      sentences.push_back(std::move(s));
    }
  }
  return BuildTraceTable(sentences);
}

TEST_CASE("trace table round trip") {
  NarrativeTraceTable table = FixtureTable();
  table.rows[0].sentence_text = "Quotes \"inside\", commas,\nand a newline";
  std::ostringstream out;
  WriteTraceTable(table, out);
  std::istringstream in(out.str());
  NarrativeTraceTable back = ReadTraceTable(in);
  REQUIRE(back.rows.size() == table.rows.size());
  for (size_t i = 0; i < table.rows.size(); ++i) {
    CAPTURE(i);
    CHECK(TraceRowFields(back.rows[i]) == TraceRowFields(table.rows[i]));
    // Event flags are rebuilt from the labels; they agree for predicates.
    for (int k = 0; k < kNumArgColumns; ++k) {
      if (table.rows[i].arg_is_event[k]) CHECK(back.rows[i].arg_is_event[k]);
    }
  }
  std::ostringstream again;
  WriteTraceTable(back, again);
  CHECK(again.str() == out.str());
}

TEST_CASE("trace table schema errors") {
  auto read = [](const std::string &text) {
    std::istringstream in(text);
    return ReadTraceTable(in);
  };
  CHECK_THROWS_AS(read("a,b,c\r\n"), SchemaError);
  CHECK_THROWS_AS(read(""), SchemaError);
  std::ostringstream header;
  CsvWriter(header).WriteRow(TraceTableHeader());
  CHECK(read(header.str()).rows.empty());
  CHECK_THROWS_AS(read(header.str() + "only,three,fields\r\n"), SchemaError);
  std::string bad_polarity =
      "d,s,go-02,maybe,,,we,,,,,,,,text\r\n";
  CHECK_THROWS_AS(read(header.str() + bad_polarity), SchemaError);
  std::string bad_index = "d,s,go-02,positive,,,we,,,,,,,x,text\r\n";
  CHECK_THROWS_AS(read(header.str() + bad_index), SchemaError);
  CHECK_THROWS_AS(read(header.str() + "d,s,go-02,positive,,,\"we\r\n"), SchemaError);
}

TEST_CASE("graph export") {
  ActantialGraph g;
  g.vertices = {"we", "R&D <lab>"};
  g.edges = {{0, 1, 1, 3}, {1, 0, 2, 0}};

  std::ostringstream xml;
  WriteGraphml(g, xml);
  const std::string s = xml.str();
  CHECK(s.find("edgedefault=\"directed\"") != std::string::npos);
  CHECK(s.find("<data key=\"label\">R&amp;D &lt;lab&gt;</data>") != std::string::npos);
  CHECK(s.find("source=\"n0\" target=\"n1\"><data key=\"weight\">4</data>"
               "<data key=\"alpha\">-0.5</data>") != std::string::npos);
  CHECK(s.find("<data key=\"alpha\">1</data>") != std::string::npos);
  CHECK(s.find("attr.name=\"weight\" attr.type=\"int\"") != std::string::npos);

  std::ostringstream js;
  WriteGraphJson(g, js);
  nlohmann::json doc = nlohmann::json::parse(js.str());
  CHECK(doc["nodes"].size() == 2);
  CHECK(doc["nodes"][1]["id"] == "R&D <lab>");
  CHECK(doc["edges"][0]["source"] == "we");
  CHECK(doc["edges"][0]["weight"] == 4);
  CHECK(doc["edges"][0]["alpha"] == -0.5);

  CHECK(FormatDouble(0.1) == "0.1");
  CHECK(FormatDouble(1.0 / 3.0) == "0.3333333333333333");
}

TEST_CASE("manifest") {
  SUBCASE("fixture") {
    CorpusManifest m = LoadManifest(testing::DataPath("corpus/manifest.json"));
    REQUIRE(m.entries.size() == 2);
    CHECK(m.grouping_key == "speaker");
    CHECK(m.entries[0].document_id == "barroso-2010");
    CHECK(m.entries[0].metadata.at("year") == "2010");
    CHECK(std::filesystem::exists(m.entries[1].path));
    DocumentGrouping by_speaker = m.GroupBy("speaker");
    CHECK(by_speaker.groups.at("Juncker") == std::set<std::string>{"juncker-2015"});
    CHECK(m.GroupBy("document_id").size() == 2);
    CHECK(m.GroupBy("missing").size() == 0);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(ParseManifest("{", "."), ManifestError);
    CHECK_THROWS_AS(ParseManifest("[]", "."), ManifestError);
    CHECK_THROWS_AS(ParseManifest(R"({"documents": [{"id": "a"}]})", "."),
                    ManifestError);
    CHECK_THROWS_AS(ParseManifest(R"({"documents": [{"id": "a", "path": "x"},
                                                    {"id": "a", "path": "y"}]})",
                                  "."),
                    ManifestError);
    CHECK_THROWS_AS(
        ParseManifest(R"({"documents": [{"id": "a", "path": "x", "metadata": {"k": []}}]})",
                      "."),
        ManifestError);
    CHECK_THROWS_AS(LoadManifest(testing::DataPath("no_such_manifest.json")),
                    ManifestError);
  }
  SUBCASE("relative paths resolve against the manifest") {
    CorpusManifest m =
        ParseManifest(R"({"documents": [{"id": "a", "path": "x.amr"}]})", "/base");
    CHECK(m.entries[0].path == std::filesystem::path("/base/x.amr"));
    CHECK_FALSE(m.grouping_key);
  }
  SUBCASE("empty") {
    CHECK(ParseManifest("{}", ".").entries.empty());
  }
}

}  // namespace
}  // namespace narrative
