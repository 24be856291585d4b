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

#include "narrative/trace_table_io.h"

#include <charconv>

namespace narrative {

namespace {

constexpr size_t kFirstArgField = 6;
constexpr size_t kConjunctionField = kFirstArgField + kNumArgColumns;
constexpr size_t kTextField = kConjunctionField + 1;

}  // namespace

const std::vector<std::string> &TraceTableHeader() {
  static const std::vector<std::string> kHeader = [] {
    std::vector<std::string> header = {"document_id", "sentence_id",
                                       "predicate",   "polarity",
                                       "parent_predicate", "parent_role"};
    for (int i = 0; i < kNumArgColumns; ++i) {
      header.push_back("ARG" + std::to_string(i));
    }
    header.push_back("conjunction_index");
    header.push_back("sentence_text");
    return header;
  }();
  return kHeader;
}

std::vector<std::string> TraceRowFields(const TraceRow &row) {
  std::vector<std::string> fields;
  fields.reserve(TraceTableHeader().size());
  fields.push_back(row.document_id);
  fields.push_back(row.sentence_id);
  fields.push_back(row.predicate_frame);
  fields.push_back(PolarityName(row.predicate_polarity));
  fields.push_back(row.parent_predicate_frame.value_or(""));
  fields.push_back(row.parent_role ? row.parent_role->name() : "");
  for (const std::string &label : row.arg_labels) fields.push_back(label);
  fields.push_back(row.conjunction_index
                       ? std::to_string(*row.conjunction_index)
                       : "");
  fields.push_back(row.sentence_text);
  return fields;
}

void WriteTraceTable(const NarrativeTraceTable &table, std::ostream &out) {
  CsvWriter writer(out);
  writer.WriteRow(TraceTableHeader());
  for (const TraceRow &row : table.rows) writer.WriteRow(TraceRowFields(row));
}

NarrativeTraceTable ReadTraceTable(std::istream &in) {
  CsvReader reader(in);
  std::vector<std::string> fields;
  NarrativeTraceTable table;
  try {
    if (!reader.ReadRow(&fields)) throw SchemaError("trace table is empty");
    if (fields != TraceTableHeader()) {
      throw SchemaError("trace table header does not match the expected columns");
    }
    while (reader.ReadRow(&fields)) {
      const std::string where = "record " + std::to_string(reader.record_number());
      if (fields.size() == 1 && fields[0].empty()) continue;
      if (fields.size() != TraceTableHeader().size()) {
        throw SchemaError(where + ": expected " +
                          std::to_string(TraceTableHeader().size()) +
                          " fields, got " + std::to_string(fields.size()));
      }
      TraceRow row;
      row.document_id = fields[0];
      row.sentence_id = fields[1];
      row.predicate_frame = fields[2];
      if (fields[3] == "positive") {
        row.predicate_polarity = Polarity::kPositive;
      } else if (fields[3] == "negative") {
        row.predicate_polarity = Polarity::kNegative;
      } else {
        throw SchemaError(where + ": bad polarity '" + fields[3] + "'");
      }
      if (!fields[4].empty()) row.parent_predicate_frame = fields[4];
      if (!fields[5].empty()) row.parent_role = Role(fields[5]);
      for (int i = 0; i < kNumArgColumns; ++i) {
        row.arg_labels[i] = fields[kFirstArgField + i];
        row.arg_is_event[i] = IsFrameLabel(row.arg_labels[i]) &&
                              row.arg_labels[i].find(' ') == std::string::npos;
      }
      const std::string &conj = fields[kConjunctionField];
      if (!conj.empty()) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(conj.data(), conj.data() + conj.size(), value);
        if (ec != std::errc() || ptr != conj.data() + conj.size()) {
          throw SchemaError(where + ": bad conjunction_index '" + conj + "'");
        }
        row.conjunction_index = value;
      }
      row.sentence_text = fields[kTextField];
      table.rows.push_back(std::move(row));
    }
  } catch (const CsvError &e) {
    throw SchemaError(e.what());
  }
  return table;
}

}  // namespace narrative
