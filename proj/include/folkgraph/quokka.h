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

// Trigger expansion: from seed lexemes of a value, query the lexical
// graphs for frames, lexical units, concepts and aligned entities, apply
// curated selections and emit provenance-tagged trigger edges.

#ifndef FOLKGRAPH_QUOKKA_H_
#define FOLKGRAPH_QUOKKA_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "folkgraph/graph.h"
#include "folkgraph/lexicon.h"
#include "folkgraph/prefix_table.h"
#include "folkgraph/store.h"
#include "folkgraph/term.h"
#include "folkgraph/valuenet.h"

namespace folkgraph {

enum class QueryKind {
  kFrameActivation,
  kFrameElement,
  kLexicalUnit,
  kCloseMatch,
  kYago,
  kConceptActivation,
  kFactual
};

// All kinds in execution order.
const std::vector<QueryKind> &AllQueryKinds();
// "frame", "frameElement", "lexicalUnit", "closeMatch", "yago", "concept",
// "factual".
const char *QueryKindName(QueryKind kind);
std::optional<QueryKind> ParseQueryKind(std::string_view name);

struct Lexeme {
  std::string lemma;
  std::optional<PartOfSpeech> pos;
};

struct ExpansionPlan {
  Term value;
  std::vector<Lexeme> seeds;
  std::map<QueryKind, std::string> selection_files;
  std::set<QueryKind> auto_accept;
};

// Key/value plan file:
//   value = folk:Risk
//   seed = risk [noun|verb|...]          (repeatable)
//   select.<kind> = <path>               (relative to the plan's dir)
//   auto = <kind> [<kind> ...]
// Throws InputError, including when a kind is both selected and automatic.
ExpansionPlan ParsePlan(std::string_view text, const PrefixTable &prefixes,
                        const std::string &base_dir = ".");
ExpansionPlan LoadPlan(const std::string &path, const PrefixTable &prefixes);

// '#' comment lines plus one IRI (or compact name) per line.
std::vector<Term> ParseSelection(std::string_view text,
                                 const PrefixTable &prefixes);

enum class SelectionMode { kSelection, kAuto, kProposeOnly };
const char *SelectionModeName(SelectionMode mode);

struct QueryResult {
  SelectionMode mode = SelectionMode::kProposeOnly;
  std::vector<Term> candidates;  // lexicographic
  std::vector<Term> accepted;    // subset of candidates, same order
};

struct ExpansionReport {
  Term value;
  std::map<QueryKind, QueryResult> per_query;
  std::vector<TriggerEdge> edges;

  // Queries run without selection file or auto-accept.
  std::vector<QueryKind> ProposeOnly() const;
  std::string ToJson(const PrefixTable &prefixes) const;
};

class Quokka {
 public:
  Quokka(const Store &store, const Lexicon &lexicon, PrefixTable prefixes)
      : store_(store), lexicon_(lexicon), prefixes_(std::move(prefixes)) {}

  std::vector<Term> FrameActivationQuery(const Lexeme &lexeme) const;
  // The lexeme's concept anchors and their one-hop neighbours.
  std::vector<Term> ConceptActivationQuery(const Lexeme &lexeme) const;
  std::vector<Term> FactualExpansionQuery(const Term &concept_node) const;
  std::vector<FrameElement> FrameElementQuery(const Term &frame) const;
  // Synsets evoking any frame, plus their verb classes by sense key.
  std::vector<Term> LexicalUnitExpansion(const std::vector<Term> &frames) const;
  std::vector<Term> YagoExpansion(const std::vector<Term> &synsets) const;
  std::vector<Term> CloseMatchExpansion(const std::vector<Term> &frames) const;

  struct Result {
    ExpansionReport report;
    std::optional<Graph> graph;  // absent for a plan without seeds
  };

  // Runs the query DAG for one value. Throws ConsistencyError when a
  // selection file lists a non-candidate, InputError for unreadable files
  // or an unknown value.
  Result RunPlan(const ExpansionPlan &plan,
                 const ValueModel *values = nullptr) const;

  static Term TriggerGraphName(const Term &value);

 private:
  const Store &store_;
  const Lexicon &lexicon_;
  PrefixTable prefixes_;
};

}  // namespace folkgraph

#endif  // FOLKGRAPH_QUOKKA_H_
