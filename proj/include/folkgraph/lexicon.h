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

#ifndef FOLKGRAPH_LEXICON_H_
#define FOLKGRAPH_LEXICON_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "folkgraph/store.h"
#include "folkgraph/term.h"

namespace folkgraph {

enum class PartOfSpeech { kNoun, kVerb, kAdjective, kAdverb, kMultiword };

const char *PartOfSpeechName(PartOfSpeech pos);
std::optional<PartOfSpeech> ParsePartOfSpeech(std::string_view name);

// A non-disambiguated lexical unit: lemma + POS with rank-ordered senses.
struct LexicalEntry {
  Term id;
  std::string lemma;  // lowercased; multiwords are space-joined
  PartOfSpeech pos = PartOfSpeech::kNoun;
  std::vector<Term> senses;        // rank 1 first
  std::vector<std::string> forms;  // inflected forms, lowercased
  std::optional<Term> concept_node;     // ConceptNet-style anchor

  bool operator==(const LexicalEntry &) const = default;
};

enum class ElementType { kCore, kPeripheral, kExtraThematic };

const char *ElementTypeName(ElementType type);

struct FrameElement {
  Term id;
  std::string name;
  ElementType type = ElementType::kCore;

  bool operator==(const FrameElement &) const = default;
};

struct Frame {
  Term id;
  std::string label;
  std::vector<FrameElement> elements;
};

enum class AlignmentRelation {
  kSameAs,
  kCloseMatch,
  kEvokes,
  kSenseKey,
  kExternalUrl,
  kConceptRel
};

// The ConceptNet relations followed by concept expansion.
const std::vector<std::string> &ConceptRelationNames();

struct AlignmentEdge {
  Term source;
  AlignmentRelation relation = AlignmentRelation::kSameAs;
  std::string concept_relation;  // set for kConceptRel only
  Term target;

  bool operator==(const AlignmentEdge &) const = default;
};

// A verb class affect stance: polarity towards one of its roles.
struct AffectStance {
  Term node;
  std::string role;  // e.g. "Agent"
  bool negative = false;
  std::string label;
};

// Indexed read-only view over the lexical graphs of a frozen store.
// Every answer is also derivable with a BGP over the same graphs.
class Lexicon {
 public:
  // Indexes the given graphs, or all graphs with role "lexical" if empty.
  static Lexicon Build(const Store &store, std::vector<Term> graphs = {});

  // Entries whose lemma equals `lemma` (case-insensitive), optionally
  // filtered by POS. Throws std::invalid_argument for an empty lemma.
  std::vector<LexicalEntry> LookupLemma(
      std::string_view lemma,
      std::optional<PartOfSpeech> pos = std::nullopt) const;

  // Entries whose lemma or one of whose inflected forms equals `surface`.
  std::vector<const LexicalEntry *> LookupSurface(std::string_view surface) const;

  // Longest multiword / inflected-form length in tokens.
  int max_entry_tokens() const { return max_entry_tokens_; }

  std::vector<Term> FramesOfSense(const Term &sense) const;
  std::vector<Term> VerbClassesOfSense(const Term &sense) const;
  std::vector<Term> FramesOfVerbClass(const Term &verb_class) const;
  // Synsets that share this verb class through a sense key.
  std::vector<Term> SensesOfVerbClass(const Term &verb_class) const;

  // Throws InputError for an unknown frame.
  std::vector<FrameElement> FrameElements(const Term &frame,
                                          const std::set<ElementType> &types) const;
  const Frame *FindFrame(const Term &frame) const;
  bool IsFrame(const Term &t) const { return frames_.count(t) > 0; }
  bool IsSynset(const Term &t) const { return synsets_.count(t) > 0; }
  bool IsVerbClass(const Term &t) const { return verb_classes_.count(t) > 0; }
  bool IsConcept(const Term &t) const { return concepts_.count(t) > 0; }

  // Everything with an evokes edge into `frame`.
  std::vector<Term> EvokersOf(const Term &frame) const;
  // sameAs neighbours, treated symmetrically.
  std::vector<Term> SameAs(const Term &entity) const;
  // Entities with a closeMatch edge into `frame`.
  std::vector<Term> CloseMatchesOf(const Term &frame) const;
  std::vector<Term> ExternalUrls(const Term &concept_node) const;
  // One-hop neighbours over the listed concept relations, both directions.
  std::vector<AlignmentEdge> ConceptNeighbors(const Term &concept_node) const;

  std::vector<AffectStance> AffectStances(const Term &verb_class) const;

  // All alignment edges in deterministic order (for dumps and tests).
  std::vector<AlignmentEdge> AlignmentEdges() const;

  size_t entry_count() const { return entries_.size(); }
  const std::vector<Term> &graphs() const { return graphs_; }

 private:
  using Multimap = std::map<Term, std::set<Term>>;

  static std::vector<Term> Get(const Multimap &map, const Term &key);

  std::vector<Term> graphs_;
  std::vector<LexicalEntry> entries_;
  std::map<std::string, std::vector<size_t>> by_lemma_;
  std::map<std::string, std::vector<size_t>> by_surface_;
  int max_entry_tokens_ = 1;

  std::map<Term, Frame> frames_;
  std::set<Term> synsets_, verb_classes_, concepts_;
  Multimap evokes_, evoked_by_, sense_key_, sense_key_inverse_, same_as_,
      close_match_inverse_, external_url_;
  std::map<Term, std::vector<AlignmentEdge>> concept_edges_;
  std::map<Term, std::vector<AffectStance>> stances_;
};

}  // namespace folkgraph

#endif  // FOLKGRAPH_LEXICON_H_
