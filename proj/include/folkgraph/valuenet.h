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

#ifndef FOLKGRAPH_VALUENET_H_
#define FOLKGRAPH_VALUENET_H_

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

namespace folkgraph {

enum class ValueModule { kMft, kBhv, kFolk };
enum class Polarity { kPositive, kNegative, kUnpolarized };

const char *ValueModuleName(ValueModule module);  // "MFT", "BHV", "FOLK"
std::optional<ValueModule> ParseValueModule(std::string_view name);
const char *PolarityName(Polarity polarity);  // "positive", ...
std::optional<Polarity> ParsePolarity(std::string_view name);

// A value. The same IRI names both the value as an individual concept and
// the class of situations in which it is at stake (OWL2 punning).
struct ValueConcept {
  Term id;
  ValueModule module = ValueModule::kFolk;
  Polarity polarity = Polarity::kUnpolarized;
  std::optional<Term> dyad_partner;
  std::vector<Term> parents;      // taxonomy
  std::vector<Term> provenance;   // source URLs
  std::vector<Term> aligned_to;   // MFT/BHV values (FOLK only)
  std::string label;

  const Term &concept_node() const { return id; }
  const Term &situation_class_node() const { return id; }

  bool operator==(const ValueConcept &) const = default;
};

enum class ActivationKind {
  kFrame,
  kSynset,
  kVerbClass,
  kConcept,
  kFactualEntity,
  kFrameElement,
  kCloseMatch
};

enum class TriggerProvenance {
  kSeedSelection,
  kDerivedClosure,
  kCloseMatchQuery,
  kYagoQuery,
  kConceptQuery,
  kFactualQuery
};

const char *ActivationKindName(ActivationKind kind);  // "frame", ...
std::optional<ActivationKind> ParseActivationKind(std::string_view name);
const char *TriggerProvenanceName(TriggerProvenance provenance);
std::optional<TriggerProvenance> ParseTriggerProvenance(std::string_view name);

// "entity activates value". `via` holds the intermediate entities of the
// justification path (e.g. the frame a derived synset evokes).
struct TriggerEdge {
  Term trigger;
  Term value;
  ActivationKind kind = ActivationKind::kFrame;
  TriggerProvenance provenance = TriggerProvenance::kSeedSelection;
  std::vector<Term> via;

  bool operator==(const TriggerEdge &) const = default;
};

// Appends the plain (trigger vcore:triggers value) triple plus a reified
// edge node carrying kind, provenance and justification.
void EmitTriggerEdge(const TriggerEdge &edge, Graph *graph);

// Reads the reified trigger edges of a graph back, sorted.
std::vector<TriggerEdge> ReadTriggerEdges(const Graph &graph);

struct ValueAlignment {
  Term folk;
  Term target;
  auto operator<=>(const ValueAlignment &) const = default;
};

// Registry of the three value modules.
class ValueModel {
 public:
  // Validates and registers a value. Throws InputError on a duplicate id,
  // an MFT value without (or with an inconsistent) dyad partner, a FOLK
  // value without provenance, or a taxonomy cycle.
  const ValueConcept &Register(ValueConcept spec);

  // Records a closeMatch from a FOLK value to an MFT or BHV value.
  // Idempotent. Throws InputError for unknown ids or a wrong module.
  ValueAlignment Align(const Term &folk, const Term &target);

  // Checks cross-references that may be forward during registration:
  // dyad partners and parents must all be registered.
  void Validate() const;

  const ValueConcept *Find(const Term &id) const;
  bool Contains(const Term &id) const { return Find(id) != nullptr; }
  std::vector<const ValueConcept *> Values() const;  // sorted by id
  std::vector<const ValueConcept *> ValuesIn(ValueModule module) const;
  const std::set<ValueAlignment> &alignments() const { return alignments_; }

  // BHV leaf values in circle order.
  std::vector<Term> BhvRing() const;

  size_t size() const { return values_.size(); }

  // Module graph with the punned typing, taxonomy, provenance, dyads,
  // circle adjacency and alignments.
  Graph ModuleGraph(ValueModule module) const;
  static Term ModuleGraphName(ValueModule module);

  // Rebuilds a model from module graphs (role "values" if `graphs` empty).
  static ValueModel FromStore(const Store &store, std::vector<Term> graphs = {});

 private:
  bool ReachesViaParents(const Term &from, const Term &target) const;

  std::map<Term, ValueConcept> values_;
  std::vector<Term> order_;  // registration order
  std::set<ValueAlignment> alignments_;
};

// Rows of the value manifest: id, module, polarity, dyadPartner, parents,
// provenance, alignments and an optional label; multi-valued columns are
// '|'-separated. Names may be compact.
struct ValueManifest {
  std::vector<ValueConcept> values;
  std::vector<ValueAlignment> alignments;
};
ValueManifest ParseValueManifest(std::string_view text,
                                 const PrefixTable &prefixes);

// Registers all manifest rows then all alignments, and validates.
ValueModel BuildValueModel(const ValueManifest &manifest);

struct ValueCandidate {
  std::string label;
  std::string definition;
  Term source;
};

std::vector<ValueCandidate> ParseValueCandidates(std::string_view text);

struct DedupeOverrides {
  std::vector<std::pair<std::string, std::string>> split;
  std::vector<std::pair<std::string, std::string>> merge;
};

DedupeOverrides ParseDedupeOverrides(std::string_view text);

struct DedupeMerge {
  std::string kept;      // label naming the merged value
  std::string absorbed;  // label folded into it
  std::string reason;    // "same label", "shared synset <iri>", "override"
};

struct DedupeResult {
  std::vector<ValueConcept> values;  // FOLK specs, first-seen order
  std::vector<DedupeMerge> merges;
};

// Merges candidates whose normalized labels are equal or share a synset
// in the lexicon; overrides win. Ids are `ns` + CamelCase(label).
DedupeResult DedupeCandidates(const std::vector<ValueCandidate> &candidates,
                              const Lexicon &lexicon,
                              const DedupeOverrides &overrides,
                              std::string_view ns);

// "self direction" -> "SelfDirection".
std::string CamelCase(std::string_view label);

}  // namespace folkgraph

#endif  // FOLKGRAPH_VALUENET_H_
