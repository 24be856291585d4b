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

#ifndef NARRATIVE_PENMAN_H_
#define NARRATIVE_PENMAN_H_

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace narrative {

enum class PenmanErrc {
  kEmptyInput,
  kUnbalancedParens,
  kDuplicateInstanceDefinition,
  kDanglingRole,
  kMalformed,
  kDisconnectedGraph,
};

const char *PenmanErrcName(PenmanErrc code);

class PenmanError : public std::runtime_error {
 public:
  PenmanError(PenmanErrc code, const std::string &message)
      : std::runtime_error(std::string(PenmanErrcName(code)) + ": " + message),
        code_(code) {}

  PenmanErrc code() const { return code_; }

 private:
  PenmanErrc code_;
};

enum class ConstantKind { kString, kNumber, kSymbol };

// A constant attribute value. String constants are stored without quotes.
struct Constant {
  std::string value;
  ConstantKind kind = ConstantKind::kSymbol;

  bool operator==(const Constant &other) const = default;
};

struct PenmanInstance {
  std::string variable;
  std::string concept_label;

  bool operator==(const PenmanInstance &other) const = default;
};

// Roles are stored without the leading colon, e.g. "ARG0" or "ARG1-of".
struct PenmanEdge {
  std::string source;
  std::string role;
  std::string target;

  bool operator==(const PenmanEdge &other) const = default;
};

struct PenmanAttribute {
  std::string source;
  std::string role;
  Constant value;

  bool operator==(const PenmanAttribute &other) const = default;
};

// Flat triple form used for order-insensitive comparisons. Instance triples
// use the role "instance"; constant targets are prefixed by their kind.
using PenmanTriple = std::tuple<std::string, std::string, std::string>;

struct PenmanGraph {
  std::string top;
  std::vector<PenmanInstance> instances;
  std::vector<PenmanEdge> edges;
  std::vector<PenmanAttribute> attributes;

  const PenmanInstance *FindInstance(std::string_view variable) const;

  // All triples, sorted.
  std::vector<PenmanTriple> SortedTriples() const;
};

// Parses one PENMAN expression. Lines starting with '#' are ignored and
// alignment markers ("~e.5") are stripped from concepts, roles and constants.
// Throws PenmanError.
PenmanGraph ParsePenman(std::string_view text);

// Single-line serialization. Children of a node are emitted in the order
// their triples appear in `g`: edges first, then attributes. Throws
// PenmanError(kDisconnectedGraph) if some instance is unreachable from top.
std::string SerializePenman(const PenmanGraph &g);

// One block of an AMR corpus file: "# ::key value" metadata plus a graph.
struct AmrBlock {
  std::size_t index = 0;
  std::map<std::string, std::string> metadata;
  PenmanGraph graph;
};

struct AmrBlockFailure {
  std::size_t index = 0;
  std::string message;
};

struct AmrCorpus {
  std::vector<AmrBlock> blocks;
  std::vector<AmrBlockFailure> failures;
};

// Extracts "::key value" pairs from one comment line into `metadata`.
void ParseMetadataLine(std::string_view line,
                       std::map<std::string, std::string> *metadata);

// Reads blank-line separated blocks from a stream, one at a time. Blocks
// that contain only comments without metadata are skipped and not counted.
class AmrBlockReader {
 public:
  explicit AmrBlockReader(std::istream &in) : in_(in) {}

  // Returns false at end of input. On a parse failure `failure` is filled
  // and `block` is left untouched.
  bool Next(AmrBlock *block, std::optional<AmrBlockFailure> *failure);

 private:
  std::istream &in_;
  std::size_t next_index_ = 0;
};

AmrCorpus ReadAmrCorpus(std::string_view text);

}  // namespace narrative

#endif  // NARRATIVE_PENMAN_H_
