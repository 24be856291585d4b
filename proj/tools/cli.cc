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


#include "cli.h"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "narrative/amr_graph.h"
#include "narrative/graph_export.h"
#include "narrative/manifest.h"
#include "narrative/narrative_extract.h"
#include "narrative/ontology.h"
#include "narrative/penman.h"
#include "narrative/signals.h"
#include "narrative/trace_table_io.h"

namespace narrative {
namespace {

namespace fs = std::filesystem;

// Raised for bad flag combinations that CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExtractFlags {
  std::string manifest;
  std::string out;
  std::string frame_inventory;
  std::string report;
  std::string ontology_dir;
  bool name_labels = false;
  int jobs = 1;
};

struct SignalsFlags {
  std::string table;
  std::string out;
  std::string ontology_dir;
  std::string role;
  std::vector<std::string> stoplist;
  std::string stoplist_file;
  bool common_stopwords = false;
  size_t top = 0;
  bool by_category = false;
  std::string group_by;
  std::string manifest;
  std::vector<std::string> goal_actors;
  std::vector<std::string> actors;
  std::string format = "graphml";
  bool lowercase = false;
  long min_weight = 0;
  std::string sign = "all";
};

std::vector<std::string> SplitCommaList(const std::vector<std::string> &values) {
  std::vector<std::string> result;
  for (const std::string &value : values) {
    std::stringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (!item.empty()) result.push_back(item);
    }
  }
  return result;
}

// One frame id per line; '#' starts a comment line.
FrameInventory LoadFrameInventory(const fs::path &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open frame inventory " + path.string());
  FrameInventory inventory;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos || line[begin] == '#') continue;
    size_t end = line.find_last_not_of(" \t");
    inventory.insert(line.substr(begin, end - begin + 1));
  }
  return inventory;
}

// --- extract ---------------------------------------------------------------

struct BlockFailure {
  size_t block = 0;
  std::string message;
};

struct DocumentResult {
  std::vector<TraceRow> rows;
  size_t sentences = 0;
  size_t sentences_without_predicates = 0;
  std::vector<BlockFailure> failures;
  std::optional<std::string> fatal;
};

DocumentResult ProcessDocument(const ManifestEntry &entry,
                               const FrameInventory &inventory,
                               const ExtractionOptions &options) {
  DocumentResult result;
  std::ifstream in(entry.path);
  if (!in) {
    result.fatal = "cannot read AMR file " + entry.path.string();
    return result;
  }
  AmrBlockReader reader(in);
  AmrBlock block;
  std::optional<AmrBlockFailure> failure;
  while (reader.Next(&block, &failure)) {
    if (failure) {
      result.failures.push_back({failure->index, failure->message});
      failure.reset();
      continue;
    }
    auto id = block.metadata.find("id");
    std::string sentence_id = id != block.metadata.end()
                                  ? id->second
                                  : entry.document_id + "." +
                                        std::to_string(block.index + 1);
    auto snt = block.metadata.find("snt");
    std::string text = snt != block.metadata.end() ? snt->second : "";
    try {
      AmrGraph graph =
          NormalizeAmr(block.graph, sentence_id, entry.document_id, inventory);
      std::vector<TraceRow> rows = ExtractSentenceRows(graph, text, options);
      ++result.sentences;
      if (rows.empty()) ++result.sentences_without_predicates;
      for (TraceRow &row : rows) result.rows.push_back(std::move(row));
    } catch (const AmrGraphError &e) {
      result.failures.push_back({block.index, e.what()});
    }
  }
  return result;
}

// Runs ProcessDocument over all entries on `jobs` threads and hands results
// to `consume` strictly in manifest order.
void ProcessInOrder(const CorpusManifest &manifest,
                    const FrameInventory &inventory,
                    const ExtractionOptions &options, int jobs,
                    const std::function<void(size_t, DocumentResult &)> &consume) {
  const size_t n = manifest.entries.size();
  if (jobs <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) {
      DocumentResult result =
          ProcessDocument(manifest.entries[i], inventory, options);
      consume(i, result);
    }
    return;
  }
  std::vector<std::optional<DocumentResult>> slots(n);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) {
      DocumentResult result =
          ProcessDocument(manifest.entries[i], inventory, options);
      std::lock_guard<std::mutex> lock(mu);
      slots[i] = std::move(result);
      ready.notify_all();
    }
  };
  std::vector<std::thread> threads;
  const size_t count = std::min<size_t>(static_cast<size_t>(jobs), n);
  for (size_t t = 0; t < count; ++t) threads.emplace_back(worker);
  for (size_t i = 0; i < n; ++i) {
    DocumentResult result;
    {
      std::unique_lock<std::mutex> lock(mu);
      ready.wait(lock, [&] { return slots[i].has_value(); });
      result = std::move(*slots[i]);
      slots[i].reset();
    }
    consume(i, result);
  }
  for (std::thread &thread : threads) thread.join();
}

int RunExtract(const ExtractFlags &flags, std::ostream &out, std::ostream &err) {
  CorpusManifest manifest;
  try {
    manifest = LoadManifest(flags.manifest);
  } catch (const ManifestError &e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  FrameInventory inventory;
  if (!flags.frame_inventory.empty()) {
    inventory = LoadFrameInventory(flags.frame_inventory);
  }
  ExtractionOptions options;
  if (flags.name_labels) options.label_style = ActorLabelStyle::kNamesOnly;

  std::optional<std::string> checksum;
  try {
    fs::path dir = flags.ontology_dir.empty() ? DefaultOntologyDir()
                                              : fs::path(flags.ontology_dir);
    checksum = OntologyChecksum(LoadOntologyDir(dir));
  } catch (const OntologyError &e) {
    err << "warning: " << e.what() << "\n";
  }

  std::ofstream file;
  std::ostream *table_out = &out;
  if (flags.out != "-") {
    file.open(flags.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << flags.out << "\n";
      return kExitFailure;
    }
    table_out = &file;
  }

  CsvWriter writer(*table_out);
  writer.WriteRow(TraceTableHeader());
  size_t sentences = 0, without = 0, rows = 0;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  std::optional<std::string> fatal;
  ProcessInOrder(manifest, inventory, options, flags.jobs,
                 [&](size_t i, DocumentResult &result) {
                   const std::string &doc = manifest.entries[i].document_id;
                   if (result.fatal && !fatal) fatal = *result.fatal;
                   for (const TraceRow &row : result.rows) {
                     writer.WriteRow(TraceRowFields(row));
                   }
                   sentences += result.sentences;
                   without += result.sentences_without_predicates;
                   rows += result.rows.size();
                   for (const BlockFailure &f : result.failures) {
                     failures.push_back({{"document_id", doc},
                                         {"block", f.block},
                                         {"message", f.message}});
                     err << "warning: " << doc << " block " << f.block << ": "
                         << f.message << "\n";
                   }
                 });
  table_out->flush();
  if (fatal) {
    err << "error: " << *fatal << "\n";
    return kExitFailure;
  }

  nlohmann::ordered_json report;
  report["documents"] = manifest.entries.size();
  report["sentences"] = sentences;
  report["sentences_without_predicates"] = without;
  report["rows"] = rows;
  report["parse_failures"] = failures.size();
  report["failures"] = failures;
  if (checksum) {
    report["ontology_checksum"] = *checksum;
  } else {
    report["ontology_checksum"] = nullptr;
  }
  std::string report_path = flags.report;
  if (report_path.empty() && flags.out != "-") report_path = flags.out + ".report.json";
  if (!report_path.empty()) {
    std::ofstream report_file(report_path);
    if (!report_file) {
      err << "error: cannot write " << report_path << "\n";
      return kExitFailure;
    }
    report_file << report.dump(2) << "\n";
  }
  err << "extracted " << rows << " rows from " << sentences << " sentences ("
      << failures.size() << " parse failures)\n";
  return kExitOk;
}

// --- signals ---------------------------------------------------------------

NarrativeTraceTable LoadTable(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open table " + path);
  return ReadTraceTable(in);
}

VerbOntology LoadOntologyFlag(const SignalsFlags &flags) {
  return LoadOntologyDir(flags.ontology_dir.empty() ? DefaultOntologyDir()
                                                    : fs::path(flags.ontology_dir));
}

std::set<std::string> Stoplist(const SignalsFlags &flags) {
  std::set<std::string> stop;
  for (const std::string &word : SplitCommaList(flags.stoplist)) stop.insert(word);
  if (flags.common_stopwords) {
    stop.insert(CommonStopwords().begin(), CommonStopwords().end());
  }
  if (!flags.stoplist_file.empty()) {
    std::ifstream in(flags.stoplist_file);
    if (!in) throw std::runtime_error("cannot open stoplist " + flags.stoplist_file);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line[0] != '#') stop.insert(line);
    }
  }
  return stop;
}

void WriteCounts(const std::vector<TermCount> &counts, const std::string &column,
                 size_t top, std::ostream &out) {
  CsvWriter writer(out);
  writer.WriteRow({column, "count"});
  size_t written = 0;
  for (const TermCount &tc : counts) {
    if (top > 0 && written++ >= top) break;
    writer.WriteRow({tc.term, std::to_string(tc.count)});
  }
}

const char *GoalRuleName(GoalRule rule) {
  switch (rule) {
    case GoalRule::kGoalPredicate: return "predicate";
    case GoalRule::kGoalParent: return "parent";
    case GoalRule::kBoth: return "both";
  }
  return "predicate";
}

int RunSignals(const std::string &sub, const SignalsFlags &flags,
               std::ostream &stdout_stream) {
  NarrativeTraceTable table = LoadTable(flags.table);
  std::ofstream file;
  std::ostream *out = &stdout_stream;
  if (!flags.out.empty() && flags.out != "-") {
    file.open(flags.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + flags.out);
    out = &file;
  }

  if (sub == "actors") {
    const std::string role = flags.role.empty() ? "ARG0" : flags.role;
    WriteCounts(CountByRole(table, role, Stoplist(flags)), "actor", flags.top, *out);
  } else if (sub == "predicates") {
    std::optional<VerbOntology> ontology;
    if (flags.by_category) ontology = LoadOntologyFlag(flags);
    WriteCounts(CountPredicates(table, ontology ? &*ontology : nullptr,
                                Stoplist(flags)),
                "predicate", flags.top, *out);
  } else if (sub == "tfidf") {
    DocumentGrouping grouping;
    std::string key = flags.group_by;
    std::optional<CorpusManifest> manifest;
    if (!flags.manifest.empty()) {
      manifest = LoadManifest(flags.manifest, /*check_paths=*/false);
      if (key.empty() && manifest->grouping_key) key = *manifest->grouping_key;
    }
    if (key.empty()) throw UsageError("tfidf needs --group-by (or a manifest grouping_key)");
    if (manifest) {
      grouping = manifest->GroupBy(key);
    } else if (key == "document_id") {
      for (const TraceRow &row : table.rows) {
        grouping.groups[row.document_id].insert(row.document_id);
      }
    } else {
      throw UsageError("--group-by " + key + " needs --manifest");
    }

    const std::set<std::string> stop = Stoplist(flags);
    std::optional<VerbOntology> ontology;
    if (flags.by_category || !flags.goal_actors.empty()) {
      ontology = LoadOntologyFlag(flags);
    }
    std::vector<TraceRow> rows;
    std::function<std::string(const TraceRow &)> term_of;
    if (!flags.goal_actors.empty()) {
      std::vector<std::string> list = SplitCommaList(flags.goal_actors);
      std::set<std::string> aliases(list.begin(), list.end());
      for (const GoalRecord &goal : ExtractGoals(table, aliases, *ontology)) {
        rows.push_back(table.rows[goal.row_index]);
      }
    } else {
      rows = table.rows;
    }
    if (!flags.goal_actors.empty() || flags.role == "predicate") {
      const VerbOntology *onto = flags.by_category ? &*ontology : nullptr;
      term_of = [onto, &stop](const TraceRow &row) -> std::string {
        std::string term = row.predicate_frame;
        if (onto != nullptr) {
          std::string category = onto->CategoryOf(term);
          if (category != kUnmappedCategory) term = category;
        }
        return stop.count(term) > 0 ? std::string() : term;
      };
    } else {
      const int column = ArgColumn(flags.role.empty() ? "ARG1" : flags.role);
      term_of = [column, &stop](const TraceRow &row) -> std::string {
        const std::string &term = row.arg(column);
        return stop.count(term) > 0 ? std::string() : term;
      };
    }
    TermDocumentCounts counts = BuildTermCounts(rows, grouping, term_of);
    TfidfMatrix tfidf = Tfidf(counts);
    CsvWriter writer(*out);
    writer.WriteRow({"group", "term", "tfidf", "count"});
    for (const RankedTerm &ranked : RankTfidf(tfidf, counts, flags.top)) {
      writer.WriteRow({ranked.group, ranked.term, FormatDouble(ranked.score),
                       std::to_string(ranked.count)});
    }
  } else if (sub == "goals") {
    std::vector<std::string> list = SplitCommaList(flags.actors);
    if (list.empty()) throw UsageError("goals needs --actor");
    std::set<std::string> aliases(list.begin(), list.end());
    VerbOntology ontology = LoadOntologyFlag(flags);
    CsvWriter writer(*out);
    std::vector<std::string> header = {"document_id", "sentence_id", "actor",
                                       "goal_predicate", "rule"};
    for (int k = 1; k < kNumArgColumns; ++k) header.push_back("ARG" + std::to_string(k));
    writer.WriteRow(header);
    size_t written = 0;
    for (const GoalRecord &goal : ExtractGoals(table, aliases, ontology)) {
      if (flags.top > 0 && written++ >= flags.top) break;
      const TraceRow &row = table.rows[goal.row_index];
      std::vector<std::string> fields = {row.document_id, row.sentence_id,
                                         goal.actor, goal.goal_predicate,
                                         GoalRuleName(goal.rule)};
      for (int k = 1; k < kNumArgColumns; ++k) {
        auto it = goal.goal_args.find("ARG" + std::to_string(k));
        fields.push_back(it == goal.goal_args.end() ? "" : it->second);
      }
      writer.WriteRow(fields);
    }
  } else if (sub == "network" || sub == "ego") {
    VerbOntology ontology = LoadOntologyFlag(flags);
    ActantialOptions options;
    options.lowercase = flags.lowercase;
    ActantialGraph graph = BuildActantialGraph(table, ontology, options);
    if (sub == "ego") {
      std::vector<std::string> list = SplitCommaList(flags.actors);
      if (list.size() != 1) throw UsageError("ego needs exactly one --actor");
      SignFilter sign = flags.sign == "positive"   ? SignFilter::kPositive
                        : flags.sign == "negative" ? SignFilter::kNegative
                                                   : SignFilter::kAll;
      std::string actor = list[0];
      if (flags.lowercase) {
        std::transform(actor.begin(), actor.end(), actor.begin(), [](unsigned char c) {
          return static_cast<char>(std::tolower(c));
        });
      }
      graph = EgoNetwork(graph, actor, flags.min_weight, sign);
    }
    if (flags.format == "json") {
      WriteGraphJson(graph, *out);
    } else {
      WriteGraphml(graph, *out);
    }
  }
  out->flush();
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Narrative signals from AMR corpora", "amr-narrative"};
  app.require_subcommand(1);

  ExtractFlags extract_flags;
  CLI::App *extract = app.add_subcommand("extract", "Build the narrative trace table");
  extract->add_option("--manifest", extract_flags.manifest, "Corpus manifest (JSON)")
      ->required();
  extract->add_option("--out", extract_flags.out, "Output CSV, '-' for stdout")
      ->required();
  extract->add_option("--frame-inventory", extract_flags.frame_inventory,
                      "File with one known frame id per line");
  extract->add_option("--report", extract_flags.report,
                      "Run report path (default: <out>.report.json)");
  extract->add_option("--ontology-dir", extract_flags.ontology_dir,
                      "Ontology data directory");
  extract->add_flag("--name-labels", extract_flags.name_labels,
                    "Label named actors by their name only");
  extract->add_option("--jobs,-j", extract_flags.jobs, "Worker threads")
      ->check(CLI::Range(1, 256));

  SignalsFlags sf;
  CLI::App *signals = app.add_subcommand("signals", "Query a trace table");
  signals->require_subcommand(1);
  const std::vector<std::string> kSubs = {"actors", "predicates", "tfidf",
                                          "goals",  "network",    "ego"};
  std::string chosen;
  for (const std::string &name : kSubs) {
    CLI::App *sub = signals->add_subcommand(name);
    sub->add_option("--table", sf.table, "Trace table CSV")->required();
    sub->add_option("--out,-o", sf.out, "Output file (default stdout)");
    sub->add_option("--ontology-dir", sf.ontology_dir, "Ontology data directory");
    sub->callback([&chosen, name] { chosen = name; });
    if (name == "actors" || name == "predicates" || name == "tfidf") {
      sub->add_option("--stoplist", sf.stoplist, "Comma separated words to drop");
      sub->add_option("--stoplist-file", sf.stoplist_file, "One word per line");
      sub->add_flag("--common-stopwords", sf.common_stopwords,
                    "Drop common pronouns and fillers");
      sub->add_option("--top", sf.top, "Keep the first N entries (per group)");
    }
    if (name == "actors") sub->add_option("--role", sf.role, "ARG0..ARG6");
    if (name == "predicates" || name == "tfidf") {
      sub->add_flag("--by-category", sf.by_category, "Use VerbAtlas categories");
    }
    if (name == "tfidf") {
      sub->add_option("--role", sf.role, "ARG0..ARG6 or 'predicate' (default ARG1)");
      sub->add_option("--group-by", sf.group_by, "Manifest metadata key");
      sub->add_option("--manifest", sf.manifest, "Corpus manifest (JSON)");
      sub->add_option("--goal-actor", sf.goal_actors,
                      "Rank goal predicates of these actor aliases");
    }
    if (name == "goals") {
      sub->add_option("--actor", sf.actors, "Actor aliases (comma separated)")
          ->required();
      sub->add_option("--top", sf.top, "Keep the first N goals");
    }
    if (name == "network" || name == "ego") {
      sub->add_option("--format", sf.format, "graphml or json")
          ->check(CLI::IsMember({"graphml", "json"}));
      sub->add_flag("--lowercase", sf.lowercase, "Lower-case actor labels");
    }
    if (name == "ego") {
      sub->add_option("--actor", sf.actors, "Ego actor")->required();
      sub->add_option("--min-weight", sf.min_weight, "Minimum edge weight");
      sub->add_option("--sign", sf.sign, "positive, negative or all")
          ->check(CLI::IsMember({"positive", "negative", "all"}));
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n";
    err << "run 'amr-narrative --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (extract->parsed()) return RunExtract(extract_flags, out, err);
    return RunSignals(chosen, sf, out);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SchemaError &e) {
    err << "schema error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace narrative
