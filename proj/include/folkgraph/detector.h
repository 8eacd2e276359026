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

// Frame-based value detection. A rule-based frontend turns a sentence into
// a graph of disambiguated nodes (sense, frames, verb classes); each node
// entity is then looked up in the trigger graphs, and every hit is kept
// together with the chain of store triples that justifies it.

#ifndef FOLKGRAPH_DETECTOR_H_
#define FOLKGRAPH_DETECTOR_H_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "folkgraph/graph.h"
#include "folkgraph/lexicon.h"
#include "folkgraph/prefix_table.h"
#include "folkgraph/store.h"
#include "folkgraph/term.h"
#include "folkgraph/valuenet.h"

namespace folkgraph {

enum class SenseMode { kFirstSense, kAllSenses };

const char *SenseModeName(SenseMode mode);  // "firstSense", "allSenses"
// Throws InputError for unknown names.
SenseMode ParseSenseMode(std::string_view name);

struct NodeAnnotation {
  size_t start = 0;  // byte span in the sentence text
  size_t end = 0;
  std::string surface;  // lowercased text of the span
  std::string lemma;
  PartOfSpeech pos = PartOfSpeech::kNoun;
  std::optional<Term> sense;
  std::vector<Term> frames;        // frames the sense evokes
  std::vector<Term> verb_classes;  // verb classes of the sense
};

struct SentenceGraph {
  std::string id;
  std::string text;
  std::vector<NodeAnnotation> nodes;  // ordered by span
  Graph graph;
  bool no_graph = false;  // no token matched the lexicon

  static Term SentenceNode(const std::string &id);
  static Term NodeIri(const std::string &id, size_t index);
};

// How each link of an activation chain was reached.
enum class ChainEdge { kSense, kEvokes, kSenseKey, kTriggers };
const char *ChainEdgeName(ChainEdge edge);  // "sense", "evokes", ...

struct ChainLink {
  Term entity;
  ChainEdge edge;
  auto operator<=>(const ChainLink &) const = default;
  bool operator==(const ChainLink &) const = default;
};

// node -> sense -> ... -> value. Every link after the first corresponds to
// one store triple (previous, edge predicate, entity).
struct ActivationPath {
  Term value;
  size_t node = 0;  // index into SentenceGraph::nodes
  ActivationKind kind = ActivationKind::kSynset;  // kind of the trigger entity
  std::vector<ChainLink> chain;
  auto operator<=>(const ActivationPath &) const = default;
  bool operator==(const ActivationPath &) const = default;

  const Term &trigger() const { return chain[chain.size() - 2].entity; }
};

struct StanceJudgment {
  Term verb_class;
  std::string role;
  bool negative = false;
  size_t node = 0;                   // the verb node
  std::optional<size_t> target;      // bound argument node, if any
  std::string label;
};

struct DetectionResult {
  std::string id;
  bool no_graph = false;
  std::vector<Term> values;  // sorted, unique
  std::vector<ActivationPath> paths;
  std::vector<StanceJudgment> stances;
  SentenceGraph sentence;  // graph includes activation and stance triples
};

struct DetectorOptions {
  SenseMode mode = SenseMode::kFirstSense;
  // Trigger-entity kinds that count as a detection; empty means all.
  std::set<ActivationKind> kinds;
};

struct SentenceInput {
  std::string id;
  std::string text;
};

// Accepts JSONL objects with id and text, a CSV whose header has id and
// text columns, or plain text with one sentence per line (ids s0001, ...).
// Blank lines are skipped. Throws InputError on malformed JSON.
std::vector<SentenceInput> ParseSentenceInput(std::string_view contents);

class Detector {
 public:
  // `trigger_graphs` defaults to every graph with role "triggers".
  Detector(const Store &store, const Lexicon &lexicon, PrefixTable prefixes,
           DetectorOptions options = {}, std::vector<Term> trigger_graphs = {});

  // Throws std::invalid_argument for empty text.
  SentenceGraph AnalyzeSentence(const std::string &id,
                                const std::string &text) const;
  SentenceGraph AnalyzeSentence(const std::string &text) const {
    return AnalyzeSentence("s", text);
  }

  DetectionResult DetectValues(const SentenceGraph &sentence) const;
  std::vector<StanceJudgment> StanceQuery(const SentenceGraph &sentence) const;

  // Analyze + detect + stance.
  DetectionResult Detect(const std::string &id, const std::string &text) const;

  // Runs Detect over all inputs on `jobs` threads; output is in input order.
  std::vector<DetectionResult> DetectAll(const std::vector<SentenceInput> &inputs,
                                         int jobs) const;

  // One JSON object on a single line, terminated by a newline.
  std::string SummaryJson(const DetectionResult &result) const;

  const std::vector<Term> &trigger_graphs() const { return trigger_graphs_; }
  const DetectorOptions &options() const { return options_; }

 private:
  std::vector<Term> TriggeredValues(const Term &entity) const;
  bool Counts(ActivationKind kind) const {
    return options_.kinds.empty() || options_.kinds.count(kind) > 0;
  }

  const Store &store_;
  const Lexicon &lexicon_;
  PrefixTable prefixes_;
  DetectorOptions options_;
  std::vector<Term> trigger_graphs_;
};

}  // namespace folkgraph

#endif  // FOLKGRAPH_DETECTOR_H_
