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

#include "narrative/csv.h"

namespace narrative {

std::string CsvEscape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void CsvWriter::WriteRow(const std::vector<std::string> &fields) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << CsvEscape(fields[i]);
  }
  out_ << "\r\n";
}

bool CsvReader::ReadRow(std::vector<std::string> *fields) {
  fields->clear();
  int c = in_.get();
  if (c == EOF) return false;
  ++record_;
  std::string field;
  bool quoted = false;
  for (;;) {
    if (quoted) {
      if (c == EOF) {
        throw CsvError("unterminated quoted field in record " +
                       std::to_string(record_));
      }
      if (c == '"') {
        if (in_.peek() == '"') {
          in_.get();
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        field.push_back(static_cast<char>(c));
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields->push_back(std::move(field));
      field.clear();
    } else if (c == '\r' && in_.peek() == '\n') {
      in_.get();
      break;
    } else if (c == '\n' || c == EOF) {
      break;
    } else {
      field.push_back(static_cast<char>(c));
    }
    c = in_.get();
  }
  fields->push_back(std::move(field));
  return true;
}

}  // namespace narrative
