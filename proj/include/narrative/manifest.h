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

#ifndef NARRATIVE_MANIFEST_H_
#define NARRATIVE_MANIFEST_H_

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "narrative/signals.h"

namespace narrative {

class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ManifestEntry {
  std::string document_id;
  std::filesystem::path path;  // resolved against the manifest directory
  std::map<std::string, std::string> metadata;
};

// Corpus manifest, a JSON file of the form
//
//   {
//     "grouping_key": "speaker",
//     "documents": [
//       {"id": "speech-2010", "path": "amr/2010.amr",
//        "metadata": {"speaker": "Barroso", "year": "2010"}}
//     ]
//   }
//
// Relative paths are resolved against the manifest's directory. Metadata
// values may be strings or numbers; numbers are kept in their JSON text form.
struct CorpusManifest {
  std::vector<ManifestEntry> entries;
  std::optional<std::string> grouping_key;

  // Documents grouped by the value of metadata `key`. The key "document_id"
  // puts every document in its own group. Documents lacking the key are
  // left out.
  DocumentGrouping GroupBy(const std::string &key) const;
};

// Throws ManifestError on unreadable or malformed JSON, duplicate ids, or
// (when `check_paths`) missing AMR files.
CorpusManifest LoadManifest(const std::filesystem::path &path,
                            bool check_paths = true);

CorpusManifest ParseManifest(const std::string &json_text,
                             const std::filesystem::path &base_dir);

}  // namespace narrative

#endif  // NARRATIVE_MANIFEST_H_
