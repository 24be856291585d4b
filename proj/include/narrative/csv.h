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

#ifndef NARRATIVE_CSV_H_
#define NARRATIVE_CSV_H_

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace narrative {

// RFC 4180 CSV. Fields containing a comma, quote, CR or LF are quoted and
// embedded quotes doubled. Records end with CRLF.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream &out) : out_(out) {}

  void WriteRow(const std::vector<std::string> &fields);

 private:
  std::ostream &out_;
};

std::string CsvEscape(std::string_view field);

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CsvReader {
 public:
  explicit CsvReader(std::istream &in) : in_(in) {}

  // Reads one record; returns false at end of input. Accepts LF or CRLF
  // record terminators. Throws CsvError on an unterminated quoted field.
  bool ReadRow(std::vector<std::string> *fields);

  // 1-based number of the last record read.
  size_t record_number() const { return record_; }

 private:
  std::istream &in_;
  size_t record_ = 0;
};

}  // namespace narrative

#endif  // NARRATIVE_CSV_H_
