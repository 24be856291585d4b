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

#ifndef NARRATIVE_ONTOLOGY_H_
#define NARRATIVE_ONTOLOGY_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace narrative {

inline constexpr std::string_view kUnmappedCategory = "UNMAPPED";
inline constexpr std::string_view kRequireNeedWantHope = "REQUIRE_NEED_WANT_HOPE";
inline constexpr std::string_view kObligeForce = "OBLIGE_FORCE";

// File names inside an ontology directory.
inline constexpr std::string_view kFrameMappingFile = "propbank_verbatlas.tsv";
inline constexpr std::string_view kPolarityFile = "verbatlas_polarity.tsv";

enum class ActionPolarity { kNeutral, kBeneficial, kAdverse };

const char *ActionPolarityName(ActionPolarity polarity);

enum class OntologyErrc { kMissingFile, kMalformedLine, kConflictingPolarity };

class OntologyError : public std::runtime_error {
 public:
  OntologyError(OntologyErrc code, const std::string &message, int line = 0)
      : std::runtime_error(message), code_(code), line_(line) {}
  OntologyErrc code() const { return code_; }
  // 1-based line number for kMalformedLine, 0 otherwise.
  int line() const { return line_; }

 private:
  OntologyErrc code_;
  int line_;
};

struct FrameClass {
  std::string category;
  ActionPolarity polarity = ActionPolarity::kNeutral;
  bool is_goal = false;
};

// PropBank frame -> VerbAtlas category, plus category polarity and the goal
// categories. Category names are upper-cased on load.
class VerbOntology {
 public:
  VerbOntology();

  void AddFrame(std::string frame, std::string category);
  // Throws OntologyError(kConflictingPolarity) if the category already has a
  // different non-neutral polarity.
  void SetPolarity(std::string category, ActionPolarity polarity);

  FrameClass Classify(std::string_view frame) const;
  std::string CategoryOf(std::string_view frame) const;
  ActionPolarity PolarityOf(std::string_view category) const;
  bool IsGoalCategory(std::string_view category) const;

  const std::map<std::string, std::string, std::less<>> &frame_to_category() const {
    return frame_to_category_;
  }
  const std::map<std::string, ActionPolarity, std::less<>> &category_polarity() const {
    return category_polarity_;
  }
  const std::set<std::string, std::less<>> &goal_categories() const {
    return goal_categories_;
  }

  // Content checksums of the files the ontology was loaded from.
  std::string mapping_checksum;
  std::string polarity_checksum;

 private:
  std::map<std::string, std::string, std::less<>> frame_to_category_;
  std::map<std::string, ActionPolarity, std::less<>> category_polarity_;
  std::set<std::string, std::less<>> goal_categories_;
};

// Loads a two-column TSV frame mapping and a two-column TSV polarity
// lexicon. Blank lines and lines starting with '#' are skipped.
VerbOntology LoadOntology(const std::filesystem::path &mapping_file,
                          const std::filesystem::path &polarity_file);

// Loads both files from `dir`.
VerbOntology LoadOntologyDir(const std::filesystem::path &dir);

// NARRATIVE_ONTOLOGY_DIR if set, else the data directory shipped with the
// build.
std::filesystem::path DefaultOntologyDir();

// 64-bit FNV-1a of `bytes` as 16 lowercase hex digits.
std::string Fnv1a64Hex(std::string_view bytes);

// Combined checksum recorded in run reports.
std::string OntologyChecksum(const VerbOntology &ontology);

}  // namespace narrative

#endif  // NARRATIVE_ONTOLOGY_H_
