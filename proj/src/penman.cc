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

#include "narrative/penman.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace narrative {

const char *PenmanErrcName(PenmanErrc code) {
  switch (code) {
    case PenmanErrc::kEmptyInput: return "EmptyInput";
    case PenmanErrc::kUnbalancedParens: return "UnbalancedParens";
    case PenmanErrc::kDuplicateInstanceDefinition:
      return "DuplicateInstanceDefinition";
    case PenmanErrc::kDanglingRole: return "DanglingRole";
    case PenmanErrc::kMalformed: return "Malformed";
    case PenmanErrc::kDisconnectedGraph: return "DisconnectedGraph";
  }
  return "Unknown";
}

const PenmanInstance *PenmanGraph::FindInstance(
    std::string_view variable) const {
  for (const PenmanInstance &instance : instances) {
    if (instance.variable == variable) return &instance;
  }
  return nullptr;
}

namespace {

std::string ConstantKey(const Constant &c) {
  if (c.kind == ConstantKind::kString) return "\"" + c.value + "\"";
  return c.value;
}

bool IsNumber(std::string_view s) {
  size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ++i;
      ++digits;
    }
  }
  if (digits == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t exp_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ++i;
      ++exp_digits;
    }
    if (exp_digits == 0) return false;
  }
  return i == s.size();
}

enum class TokenType { kLParen, kRParen, kSlash, kRole, kString, kSymbol, kEnd };

struct Token {
  TokenType type = TokenType::kEnd;
  std::string text;
  size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Tokenize() {
    std::vector<Token> tokens;
    for (;;) {
      Token token = NextToken();
      tokens.push_back(token);
      if (token.type == TokenType::kEnd) break;
    }
    return tokens;
  }

 private:
  static bool IsDelimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' ||
           c == ')' || c == '~' || c == '"' || c == '/';
  }

  void SkipSpaceAndComments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        at_line_start_ = true;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' && at_line_start_) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  // Alignment markers such as "~e.5" or "~3" follow tokens directly.
  void SkipAlignment() {
    if (pos_ < text_.size() && text_[pos_] == '~') {
      ++pos_;
      while (pos_ < text_.size() && !IsDelimiter(text_[pos_])) ++pos_;
    }
  }

  Token NextToken() {
    SkipSpaceAndComments();
    Token token;
    token.offset = pos_;
    if (pos_ >= text_.size()) return token;
    at_line_start_ = false;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      token.type = TokenType::kLParen;
    } else if (c == ')') {
      ++pos_;
      token.type = TokenType::kRParen;
    } else if (c == '/') {
      ++pos_;
      token.type = TokenType::kSlash;
    } else if (c == '"') {
      token.type = TokenType::kString;
      ++pos_;
      bool closed = false;
      while (pos_ < text_.size()) {
        char d = text_[pos_++];
        if (d == '\\' && pos_ < text_.size()) {
          token.text.push_back(text_[pos_++]);
        } else if (d == '"') {
          closed = true;
          break;
        } else {
          token.text.push_back(d);
        }
      }
      if (!closed) {
        throw PenmanError(PenmanErrc::kMalformed,
                          "unterminated string at offset " +
                              std::to_string(token.offset));
      }
      SkipAlignment();
    } else if (c == ':') {
      token.type = TokenType::kRole;
      ++pos_;
      while (pos_ < text_.size() && !IsDelimiter(text_[pos_])) {
        token.text.push_back(text_[pos_++]);
      }
      if (token.text.empty()) {
        throw PenmanError(PenmanErrc::kMalformed,
                          "empty role at offset " +
                              std::to_string(token.offset));
      }
      SkipAlignment();
    } else if (c == '~') {
      // A stray alignment with no preceding token.
      SkipAlignment();
      return NextToken();
    } else {
      token.type = TokenType::kSymbol;
      while (pos_ < text_.size() && !IsDelimiter(text_[pos_])) {
        token.text.push_back(text_[pos_++]);
      }
      SkipAlignment();
    }
    return token;
  }

  std::string_view text_;
  size_t pos_ = 0;
  bool at_line_start_ = true;
};

enum class TargetKind { kNode, kString, kSymbol };

struct RawTriple {
  std::string source;
  std::string role;
  TargetKind kind = TargetKind::kSymbol;
  std::string value;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  PenmanGraph Parse() {
    if (Peek().type == TokenType::kEnd) {
      throw PenmanError(PenmanErrc::kEmptyInput, "no PENMAN expression");
    }
    if (Peek().type != TokenType::kLParen) {
      throw PenmanError(PenmanErrc::kMalformed,
                        "expected '(' at offset " +
                            std::to_string(Peek().offset));
    }
    graph_.top = ParseNode();
    const Token &rest = Peek();
    if (rest.type == TokenType::kRParen) {
      throw PenmanError(PenmanErrc::kUnbalancedParens,
                        "unexpected ')' at offset " +
                            std::to_string(rest.offset));
    }
    if (rest.type != TokenType::kEnd) {
      throw PenmanError(PenmanErrc::kMalformed,
                        "trailing content at offset " +
                            std::to_string(rest.offset));
    }
    Resolve();
    return std::move(graph_);
  }

 private:
  const Token &Peek() const { return tokens_[pos_]; }
  const Token &Advance() {
    const Token &token = tokens_[pos_];
    if (token.type != TokenType::kEnd) ++pos_;
    return token;
  }

  [[noreturn]] void Unbalanced() {
    throw PenmanError(PenmanErrc::kUnbalancedParens,
                      "input ended before all parentheses were closed");
  }

  std::string ParseNode() {
    Advance();  // '('
    const Token &var = Advance();
    if (var.type == TokenType::kEnd) Unbalanced();
    if (var.type != TokenType::kSymbol) {
      throw PenmanError(PenmanErrc::kMalformed,
                        "expected variable at offset " +
                            std::to_string(var.offset));
    }
    std::string variable = var.text;
    const Token &slash = Advance();
    if (slash.type == TokenType::kEnd) Unbalanced();
    if (slash.type != TokenType::kSlash) {
      throw PenmanError(PenmanErrc::kMalformed,
                        "expected '/' after variable '" + variable + "'");
    }
    const Token &concept_token = Advance();
    if (concept_token.type == TokenType::kEnd) Unbalanced();
    if (concept_token.type != TokenType::kSymbol &&
        concept_token.type != TokenType::kString) {
      throw PenmanError(PenmanErrc::kMalformed,
                        "missing concept for variable '" + variable + "'");
    }
    if (!defined_.insert(variable).second) {
      throw PenmanError(PenmanErrc::kDuplicateInstanceDefinition,
                        "variable '" + variable + "' defined twice");
    }
    graph_.instances.push_back({variable, concept_token.text});

    for (;;) {
      const Token &token = Peek();
      switch (token.type) {
        case TokenType::kRParen:
          Advance();
          return variable;
        case TokenType::kEnd:
          Unbalanced();
        case TokenType::kRole: {
          std::string role = Advance().text;
          const Token &target = Peek();
          if (target.type == TokenType::kEnd) Unbalanced();
          if (target.type == TokenType::kRParen ||
              target.type == TokenType::kRole) {
            throw PenmanError(PenmanErrc::kDanglingRole,
                              "role ':" + role + "' of '" + variable +
                                  "' has no target");
          }
          if (target.type == TokenType::kLParen) {
            size_t slot = raw_.size();
            raw_.push_back({variable, role, TargetKind::kNode, ""});
            std::string child = ParseNode();
            raw_[slot].value = std::move(child);
          } else if (target.type == TokenType::kString) {
            raw_.push_back({variable, role, TargetKind::kString,
                            Advance().text});
          } else if (target.type == TokenType::kSymbol) {
            raw_.push_back({variable, role, TargetKind::kSymbol,
                            Advance().text});
          } else {
            throw PenmanError(PenmanErrc::kMalformed,
                              "unexpected '/' at offset " +
                                  std::to_string(target.offset));
          }
          break;
        }
        default:
          throw PenmanError(PenmanErrc::kMalformed,
                            "unexpected token '" + token.text +
                                "' at offset " +
                                std::to_string(token.offset));
      }
    }
  }

  // Symbol targets naming a defined variable are re-entrancies; all other
  // symbols are constants.
  void Resolve() {
    for (RawTriple &raw : raw_) {
      switch (raw.kind) {
        case TargetKind::kNode:
          graph_.edges.push_back({raw.source, raw.role, raw.value});
          break;
        case TargetKind::kString:
          graph_.attributes.push_back(
              {raw.source, raw.role, {raw.value, ConstantKind::kString}});
          break;
        case TargetKind::kSymbol:
          if (defined_.count(raw.value) > 0) {
            graph_.edges.push_back({raw.source, raw.role, raw.value});
          } else {
            ConstantKind kind = IsNumber(raw.value) ? ConstantKind::kNumber
                                                    : ConstantKind::kSymbol;
            graph_.attributes.push_back({raw.source, raw.role,
                                         {raw.value, kind}});
          }
          break;
      }
    }
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  PenmanGraph graph_;
  std::unordered_set<std::string> defined_;
  std::vector<RawTriple> raw_;
};

std::string QuoteString(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::vector<PenmanTriple> PenmanGraph::SortedTriples() const {
  std::vector<PenmanTriple> triples;
  triples.reserve(instances.size() + edges.size() + attributes.size());
  for (const PenmanInstance &i : instances) {
    triples.emplace_back(i.variable, ":instance", i.concept_label);
  }
  for (const PenmanEdge &e : edges) {
    triples.emplace_back(e.source, e.role, e.target);
  }
  for (const PenmanAttribute &a : attributes) {
    triples.emplace_back(a.source, a.role, ConstantKey(a.value));
  }
  std::sort(triples.begin(), triples.end());
  return triples;
}

PenmanGraph ParsePenman(std::string_view text) {
  Lexer lexer(text);
  Parser parser(lexer.Tokenize());
  return parser.Parse();
}

namespace {

class Serializer {
 public:
  explicit Serializer(const PenmanGraph &g) : g_(g) {
    for (size_t i = 0; i < g.instances.size(); ++i) {
      concept_of_[g.instances[i].variable] = i;
    }
    for (size_t i = 0; i < g.edges.size(); ++i) {
      const PenmanEdge &e = g.edges[i];
      if (concept_of_.count(e.source) == 0 ||
          concept_of_.count(e.target) == 0) {
        throw PenmanError(PenmanErrc::kMalformed,
                          "edge references undefined variable");
      }
      children_[e.source].push_back({true, i});
    }
    for (size_t i = 0; i < g.attributes.size(); ++i) {
      children_[g.attributes[i].source].push_back({false, i});
    }
  }

  std::string Run() {
    if (concept_of_.count(g_.top) == 0) {
      throw PenmanError(PenmanErrc::kMalformed,
                        "top variable '" + g_.top + "' has no instance");
    }
    Emit(g_.top);
    if (emitted_.size() != g_.instances.size()) {
      throw PenmanError(PenmanErrc::kDisconnectedGraph,
                        "instance unreachable from top");
    }
    for (const PenmanAttribute &a : g_.attributes) {
      if (emitted_.count(a.source) == 0) {
        throw PenmanError(PenmanErrc::kDisconnectedGraph,
                          "attribute owner '" + a.source +
                              "' unreachable from top");
      }
    }
    return out_.str();
  }

 private:
  struct Child {
    bool is_edge;
    size_t index;
  };

  void Emit(const std::string &variable) {
    emitted_.insert(variable);
    out_ << '(' << variable << " / "
         << g_.instances[concept_of_[variable]].concept_label;
    auto it = children_.find(variable);
    if (it != children_.end()) {
      for (const Child &child : it->second) {
        if (child.is_edge) {
          const PenmanEdge &e = g_.edges[child.index];
          out_ << " :" << e.role << ' ';
          if (emitted_.count(e.target) > 0) {
            out_ << e.target;
          } else {
            Emit(e.target);
          }
        } else {
          const PenmanAttribute &a = g_.attributes[child.index];
          out_ << " :" << a.role << ' ';
          if (a.value.kind == ConstantKind::kString) {
            out_ << QuoteString(a.value.value);
          } else {
            out_ << a.value.value;
          }
        }
      }
    }
    out_ << ')';
  }

  const PenmanGraph &g_;
  std::unordered_map<std::string, size_t> concept_of_;
  std::unordered_map<std::string, std::vector<Child>> children_;
  std::unordered_set<std::string> emitted_;
  std::ostringstream out_;
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool IsBlank(std::string_view line) { return Trim(line).empty(); }

bool IsComment(std::string_view line) {
  std::string_view t = Trim(line);
  return !t.empty() && t.front() == '#';
}

}  // namespace

std::string SerializePenman(const PenmanGraph &g) {
  Serializer serializer(g);
  return serializer.Run();
}

void ParseMetadataLine(std::string_view line,
                       std::map<std::string, std::string> *metadata) {
  // Marker positions: "::" at the start of the line body or after space.
  std::vector<size_t> markers;
  for (size_t i = 0; i + 1 < line.size(); ++i) {
    if (line[i] == ':' && line[i + 1] == ':' &&
        (i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1])) ||
         line[i - 1] == '#')) {
      markers.push_back(i);
      ++i;
    }
  }
  for (size_t m = 0; m < markers.size(); ++m) {
    size_t begin = markers[m] + 2;
    size_t end = m + 1 < markers.size() ? markers[m + 1] : line.size();
    std::string_view field = line.substr(begin, end - begin);
    size_t key_end = 0;
    while (key_end < field.size() &&
           !std::isspace(static_cast<unsigned char>(field[key_end]))) {
      ++key_end;
    }
    std::string_view key = field.substr(0, key_end);
    if (key.empty()) continue;
    (*metadata)[std::string(key)] = std::string(Trim(field.substr(key_end)));
  }
}

bool AmrBlockReader::Next(AmrBlock *block,
                          std::optional<AmrBlockFailure> *failure) {
  failure->reset();
  std::string line;
  for (;;) {
    std::map<std::string, std::string> metadata;
    std::string body;
    bool saw_content = false;
    bool saw_metadata = false;
    while (std::getline(in_, line)) {
      if (IsBlank(line)) {
        if (saw_content || saw_metadata) break;
        continue;
      }
      if (IsComment(line)) {
        size_t before = metadata.size();
        ParseMetadataLine(line, &metadata);
        if (metadata.size() > before) saw_metadata = true;
        continue;
      }
      saw_content = true;
      body += line;
      body.push_back('\n');
    }
    if (!saw_content && !saw_metadata) {
      if (in_.eof() || in_.fail()) return false;
      continue;
    }
    size_t index = next_index_++;
    try {
      PenmanGraph graph = ParsePenman(body);
      block->index = index;
      block->metadata = std::move(metadata);
      block->graph = std::move(graph);
    } catch (const PenmanError &e) {
      AmrBlockFailure f;
      f.index = index;
      f.message = e.what();
      auto id = metadata.find("id");
      if (id != metadata.end()) f.message += " (id " + id->second + ")";
      *failure = std::move(f);
    }
    return true;
  }
}

AmrCorpus ReadAmrCorpus(std::string_view text) {
  std::istringstream in{std::string(text)};
  AmrBlockReader reader(in);
  AmrCorpus corpus;
  AmrBlock block;
  std::optional<AmrBlockFailure> failure;
  while (reader.Next(&block, &failure)) {
    if (failure) {
      corpus.failures.push_back(std::move(*failure));
    } else {
      corpus.blocks.push_back(std::move(block));
      block = AmrBlock();
    }
  }
  return corpus;
}

}  // namespace narrative
