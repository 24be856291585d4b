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

#include "narrative/manifest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace narrative {

using nlohmann::json;

DocumentGrouping CorpusManifest::GroupBy(const std::string &key) const {
  DocumentGrouping grouping;
  for (const ManifestEntry &entry : entries) {
    if (key == "document_id") {
      grouping.groups[entry.document_id].insert(entry.document_id);
      continue;
    }
    auto it = entry.metadata.find(key);
    if (it == entry.metadata.end()) continue;
    grouping.groups[it->second].insert(entry.document_id);
  }
  return grouping;
}

CorpusManifest ParseManifest(const std::string &json_text,
                             const std::filesystem::path &base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ManifestError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ManifestError("manifest must be a JSON object");

  CorpusManifest manifest;
  if (doc.contains("grouping_key")) {
    if (!doc["grouping_key"].is_string()) {
      throw ManifestError("grouping_key must be a string");
    }
    manifest.grouping_key = doc["grouping_key"].get<std::string>();
  }
  if (!doc.contains("documents")) return manifest;
  if (!doc["documents"].is_array()) {
    throw ManifestError("documents must be an array");
  }
  std::set<std::string> ids;
  size_t index = 0;
  for (const json &item : doc["documents"]) {
    const std::string where = "documents[" + std::to_string(index++) + "]";
    if (!item.is_object() || !item.contains("id") || !item["id"].is_string() ||
        !item.contains("path") || !item["path"].is_string()) {
      throw ManifestError(where + " needs string fields \"id\" and \"path\"");
    }
    ManifestEntry entry;
    entry.document_id = item["id"].get<std::string>();
    if (!ids.insert(entry.document_id).second) {
      throw ManifestError("duplicate document id '" + entry.document_id + "'");
    }
    std::filesystem::path path = item["path"].get<std::string>();
    entry.path = path.is_absolute() ? path : base_dir / path;
    if (item.contains("metadata")) {
      const json &metadata = item["metadata"];
      if (!metadata.is_object()) {
        throw ManifestError(where + ".metadata must be an object");
      }
      for (const auto &[key, value] : metadata.items()) {
        if (value.is_string()) {
          entry.metadata[key] = value.get<std::string>();
        } else if (value.is_number() || value.is_boolean()) {
          entry.metadata[key] = value.dump();
        } else {
          throw ManifestError(where + ".metadata." + key +
                              " must be a string or number");
        }
      }
    }
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

CorpusManifest LoadManifest(const std::filesystem::path &path,
                            bool check_paths) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot open manifest " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  CorpusManifest manifest = ParseManifest(buffer.str(), path.parent_path());
  if (check_paths) {
    for (const ManifestEntry &entry : manifest.entries) {
      if (!std::filesystem::is_regular_file(entry.path)) {
        throw ManifestError("AMR file for document '" + entry.document_id +
                            "' not found: " + entry.path.string());
      }
    }
  }
  return manifest;
}

}  // namespace narrative
