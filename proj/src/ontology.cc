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

#include "narrative/ontology.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace narrative {

const char *ActionPolarityName(ActionPolarity polarity) {
  switch (polarity) {
    case ActionPolarity::kBeneficial: return "beneficial";
    case ActionPolarity::kAdverse: return "adverse";
    case ActionPolarity::kNeutral: return "neutral";
  }
  return "neutral";
}

namespace {

std::string Upper(std::string s) {
  for (char &c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw OntologyError(OntologyErrc::kMissingFile,
                        "cannot open ontology file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Calls `fn(line_number, column0, column1)` for every data line.
template <typename Fn>
void ForEachTsvRow(const std::string &content, const std::filesystem::path &path,
                   Fn fn) {
  std::istringstream in(content);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    std::vector<std::string_view> columns;
    size_t start = 0;
    for (;;) {
      size_t tab = view.find('\t', start);
      columns.push_back(Trim(view.substr(start, tab == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : tab - start)));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (columns.size() != 2 || columns[0].empty() || columns[1].empty()) {
      throw OntologyError(OntologyErrc::kMalformedLine,
                          path.string() + ":" + std::to_string(number) +
                              ": expected two tab-separated columns",
                          number);
    }
    fn(number, columns[0], columns[1]);
  }
}

}  // namespace

VerbOntology::VerbOntology() {
  goal_categories_.emplace(kRequireNeedWantHope);
  goal_categories_.emplace(kObligeForce);
}

void VerbOntology::AddFrame(std::string frame, std::string category) {
  frame_to_category_[std::move(frame)] = Upper(std::move(category));
}

void VerbOntology::SetPolarity(std::string category, ActionPolarity polarity) {
  category = Upper(std::move(category));
  auto it = category_polarity_.find(category);
  if (it != category_polarity_.end() && it->second != polarity &&
      it->second != ActionPolarity::kNeutral &&
      polarity != ActionPolarity::kNeutral) {
    throw OntologyError(OntologyErrc::kConflictingPolarity,
                        "category " + category + " is both " +
                            ActionPolarityName(it->second) + " and " +
                            ActionPolarityName(polarity));
  }
  if (it != category_polarity_.end() && polarity == ActionPolarity::kNeutral) {
    return;
  }
  category_polarity_[std::move(category)] = polarity;
}

std::string VerbOntology::CategoryOf(std::string_view frame) const {
  auto it = frame_to_category_.find(frame);
  if (it == frame_to_category_.end()) return std::string(kUnmappedCategory);
  return it->second;
}

ActionPolarity VerbOntology::PolarityOf(std::string_view category) const {
  auto it = category_polarity_.find(category);
  return it == category_polarity_.end() ? ActionPolarity::kNeutral : it->second;
}

bool VerbOntology::IsGoalCategory(std::string_view category) const {
  return goal_categories_.find(category) != goal_categories_.end();
}

FrameClass VerbOntology::Classify(std::string_view frame) const {
  FrameClass result;
  result.category = CategoryOf(frame);
  result.polarity = PolarityOf(result.category);
  result.is_goal = IsGoalCategory(result.category);
  return result;
}

VerbOntology LoadOntology(const std::filesystem::path &mapping_file,
                          const std::filesystem::path &polarity_file) {
  VerbOntology ontology;
  std::string mapping = ReadFile(mapping_file);
  std::string polarity = ReadFile(polarity_file);
  ontology.mapping_checksum = Fnv1a64Hex(mapping);
  ontology.polarity_checksum = Fnv1a64Hex(polarity);

  ForEachTsvRow(mapping, mapping_file,
                [&](int, std::string_view frame, std::string_view category) {
                  ontology.AddFrame(std::string(frame), std::string(category));
                });
  ForEachTsvRow(polarity, polarity_file,
                [&](int line, std::string_view category, std::string_view value) {
                  ActionPolarity p;
                  if (value == "beneficial") {
                    p = ActionPolarity::kBeneficial;
                  } else if (value == "adverse") {
                    p = ActionPolarity::kAdverse;
                  } else if (value == "neutral") {
                    p = ActionPolarity::kNeutral;
                  } else {
                    throw OntologyError(
                        OntologyErrc::kMalformedLine,
                        polarity_file.string() + ":" + std::to_string(line) +
                            ": unknown polarity '" + std::string(value) + "'",
                        line);
                  }
                  ontology.SetPolarity(std::string(category), p);
                });
  return ontology;
}

VerbOntology LoadOntologyDir(const std::filesystem::path &dir) {
  return LoadOntology(dir / kFrameMappingFile, dir / kPolarityFile);
}

std::filesystem::path DefaultOntologyDir() {
  if (const char *env = std::getenv("NARRATIVE_ONTOLOGY_DIR");
      env != nullptr && *env != '\0') {
    return env;
  }
  return NARRATIVE_DEFAULT_ONTOLOGY_DIR;
}

std::string Fnv1a64Hex(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static const char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = kDigits[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

std::string OntologyChecksum(const VerbOntology &ontology) {
  return Fnv1a64Hex(ontology.mapping_checksum + ontology.polarity_checksum);
}

}  // namespace narrative
