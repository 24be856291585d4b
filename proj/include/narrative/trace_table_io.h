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

#ifndef NARRATIVE_TRACE_TABLE_IO_H_
#define NARRATIVE_TRACE_TABLE_IO_H_

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "narrative/csv.h"
#include "narrative/narrative_extract.h"

namespace narrative {

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// document_id, sentence_id, predicate, polarity, parent_predicate,
// parent_role, ARG0..ARG6, conjunction_index, sentence_text
const std::vector<std::string> &TraceTableHeader();

std::vector<std::string> TraceRowFields(const TraceRow &row);

void WriteTraceTable(const NarrativeTraceTable &table, std::ostream &out);

// Reads a table written by WriteTraceTable. The CSV carries no event flags;
// an argument counts as an event when its whole label is a frame label.
// Throws SchemaError on header or cell mismatches.
NarrativeTraceTable ReadTraceTable(std::istream &in);

}  // namespace narrative

#endif  // NARRATIVE_TRACE_TABLE_IO_H_
