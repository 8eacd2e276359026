// Copyright 2026 The Folkgraph Authors.
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

// Corpus ingestion and evaluation statistics: per-annotator agreement
// against the per-sentence majority, and detection coverage.

#ifndef FOLKGRAPH_EVALHARNESS_H_
#define FOLKGRAPH_EVALHARNESS_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "folkgraph/prefix_table.h"
#include "folkgraph/term.h"

namespace folkgraph {

enum class Confidence { kConfident, kSomewhatConfident, kNotConfident };
const char *ConfidenceName(Confidence c);  // "Confident", ...
// Case and space insensitive; nullopt for unknown strings.
std::optional<Confidence> ParseConfidence(std::string_view s);

Term ThinMorality();  // vcore:ThinMorality
Term NonMoral();      // vcore:NonMoral

struct AnnotatedSentence {
  std::string id;
  std::string text;
  std::string annotator;
  std::set<Term> labels;
  Confidence confidence = Confidence::kConfident;
};

// Text label -> IRI. Two tab-separated columns, '#' comments.
class LabelMap {
 public:
  static LabelMap Parse(std::string_view text, const PrefixTable &prefixes);
  void Add(const std::string &label, Term value) { map_[label] = std::move(value); }
  // Exact match first, then case-insensitive. nullopt if unknown.
  std::optional<Term> Find(const std::string &label) const;
  size_t size() const { return map_.size(); }

 private:
  std::map<std::string, Term> map_;
};

enum class CorpusFormat { kCsv, kJsonl };
// From the file extension: ".jsonl" / ".json" give kJsonl, else kCsv.
CorpusFormat CorpusFormatForPath(const std::string &path);

struct CorpusLoad {
  std::vector<AnnotatedSentence> rows;
  size_t skipped = 0;
  std::vector<std::string> warnings;  // one per skipped row, with line number
};

// Header must declare id, text, annotator, labels and confidence (any
// order). Several labels in one field are separated by ',' or '|'.
// Malformed rows (missing fields, unknown confidence, empty id, thin
// morality or non-moral mixed with other labels) are skipped and reported.
// Throws InputError for a bad header or an unknown label string.
CorpusLoad ParseCorpus(std::string_view contents, CorpusFormat format,
                       const LabelMap &labels);
CorpusLoad LoadCorpus(const std::string &path, CorpusFormat format,
                      const LabelMap &labels);

struct AnnotatorRow {
  std::string annotator;
  int tot = 0;
  int tot_nc = 0;       // excluding NotConfident
  int agree = 0;        // label set meets the sentence majority
  int agree_tm = 0;     // agree, or both sides moral (thin morality/value)
  int agree_tm_nc = 0;  // agree_tm excluding NotConfident
};

// Sentences are grouped by text. A label is in the majority when strictly
// more than half of the group's annotations carry it. Rows are sorted by
// annotator.
std::vector<AnnotatorRow> AnnotatorStats(
    const std::vector<AnnotatedSentence> &corpus);

struct SentenceDetection {
  std::string id;
  bool no_graph = false;
  std::vector<Term> values;
};

// Reads the detector's JSONL summary (id, values, noGraph).
std::vector<SentenceDetection> ParseDetections(std::string_view jsonl,
                                               const PrefixTable &prefixes);

struct CoverageReport {
  int total = 0;            // corpus rows
  int graphs = 0;           // rows whose sentence produced a graph
  int mft_annotated = 0;    // graph rows carrying an MFT value label
  int thin_morality = 0;    // graph rows labeled thin morality
  int non_moral = 0;        // graph rows labeled non-moral
  int detected_any = 0;     // graph rows with at least one detected value
  int overlap_tm_nm = 0;    // detected rows labeled thin morality/non-moral
  int unique_sentences = 0;            // distinct texts among graph rows
  int mft_annotated_unique = 0;        // distinct texts with a value label
  std::vector<AnnotatorRow> annotators;  // over graph rows
  std::map<Term, int> histogram;         // graph rows activating each value
};

// Throws ConsistencyError if a detection names an unknown id or a corpus
// row has no detection (the message lists the ids).
CoverageReport CoverageStats(const std::vector<AnnotatedSentence> &corpus,
                             const std::vector<SentenceDetection> &detections);

std::string FormatTable1(const std::vector<AnnotatorRow> &rows);
std::string FormatTable2(const CoverageReport &report);
// value<TAB>count lines, sorted by descending count then value.
std::string HistogramTsv(const CoverageReport &report, const PrefixTable &prefixes);
std::string ReportJson(const CoverageReport &report, const PrefixTable &prefixes);
std::string AnnotatorJson(const std::vector<AnnotatorRow> &rows);

}  // namespace folkgraph

#endif  // FOLKGRAPH_EVALHARNESS_H_
