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

#include "folkgraph/lexicon.h"

#include <algorithm>
#include <stdexcept>

#include "folkgraph/errors.h"
#include "folkgraph/text.h"
#include "folkgraph/vocab.h"

namespace folkgraph {

namespace {

std::string LocalName(const std::string &iri) {
  size_t cut = iri.find_last_of("/#");
  return cut == std::string::npos ? iri : iri.substr(cut + 1);
}

int CountTokens(std::string_view s) {
  int n = 1;
  for (char c : s) n += c == ' ';
  return n;
}

}  // namespace

const char *PartOfSpeechName(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kNoun: return "noun";
    case PartOfSpeech::kVerb: return "verb";
    case PartOfSpeech::kAdjective: return "adjective";
    case PartOfSpeech::kAdverb: return "adverb";
    case PartOfSpeech::kMultiword: return "multiword";
  }
  return "";
}

std::optional<PartOfSpeech> ParsePartOfSpeech(std::string_view name) {
  std::string n = AsciiLower(name);
  if (n == "noun") return PartOfSpeech::kNoun;
  if (n == "verb") return PartOfSpeech::kVerb;
  if (n == "adjective") return PartOfSpeech::kAdjective;
  if (n == "adverb") return PartOfSpeech::kAdverb;
  if (n == "multiword") return PartOfSpeech::kMultiword;
  return std::nullopt;
}

const char *ElementTypeName(ElementType type) {
  switch (type) {
    case ElementType::kCore: return "core";
    case ElementType::kPeripheral: return "peripheral";
    case ElementType::kExtraThematic: return "extraThematic";
  }
  return "";
}

const std::vector<std::string> &ConceptRelationNames() {
  static const std::vector<std::string> kNames = {
      "DerivedFrom", "Causes", "IsA", "UsedFor", "HasSubevent", "FormOf"};
  return kNames;
}

Lexicon Lexicon::Build(const Store &store, std::vector<Term> graphs) {
  if (graphs.empty()) graphs = store.GraphsWithRole("lexical");
  Lexicon lex;
  lex.graphs_ = graphs;

  const Term rdf_type = vocab::Rdf("type");
  const Term rdfs_label = vocab::Rdfs("label");
  const Term t_entry = vocab::Fschema("LexicalEntry");
  const Term p_lemma = vocab::Fschema("lemma");
  const Term p_pos = vocab::Fschema("pos");
  const Term p_form = vocab::Fschema("form");
  const Term p_concept = vocab::Fschema("concept");
  const Term p_evokes = vocab::Fschema("evokes");
  const Term p_sense_key = vocab::Fschema("senseKey");
  const Term p_has_fe = vocab::Fschema("hasFrameElement");
  const Term p_fe_type = vocab::Fschema("feType");
  const Term p_stance = vocab::Fschema("affectStance");
  const Term p_stance_role = vocab::Fschema("stanceRole");
  const Term p_stance_polarity = vocab::Fschema("stancePolarity");
  const Term same_as = vocab::Owl("sameAs");
  const Term close_match = vocab::Skos("closeMatch");
  const Term external_url = vocab::ConceptRel("ExternalURL");

  std::map<std::string, std::string> concept_rel_names;
  for (const std::string &name : ConceptRelationNames()) {
    concept_rel_names[vocab::ConceptRel(name).value()] = name;
  }

  struct Pending {
    std::string lemma;
    std::optional<PartOfSpeech> pos;
    std::map<int, Term> senses;
    std::set<std::string> forms;
    std::optional<Term> concept_node;
    bool typed = false;
  };
  std::map<Term, Pending> pending;
  std::map<Term, std::string> labels;
  std::map<Term, std::vector<Term>> frame_elements;
  std::map<Term, ElementType> fe_types;
  std::map<Term, std::vector<Term>> stance_nodes;
  std::map<Term, std::pair<std::string, bool>> stance_info;
  std::set<Term> fe_nodes;

  for (const Term &g : graphs) {
    for (const Triple &t : store.GetGraph(g)) {
      const Term &s = t.subject, &p = t.predicate, &o = t.object;
      if (p == rdf_type) {
        if (o == t_entry) pending[s].typed = true;
        else if (o == vocab::Fschema("Frame")) lex.frames_[s].id = s;
        else if (o == vocab::Fschema("Synset")) lex.synsets_.insert(s);
        else if (o == vocab::Fschema("VerbClass")) lex.verb_classes_.insert(s);
        else if (o == vocab::Fschema("Concept")) lex.concepts_.insert(s);
        else if (o == vocab::Fschema("FrameElement")) fe_nodes.insert(s);
      } else if (p == p_lemma) {
        pending[s].lemma = AsciiLower(o.value());
      } else if (p == p_pos) {
        auto pos = ParsePartOfSpeech(LocalName(o.value()));
        if (!pos) throw InputError("unknown part of speech: " + o.value());
        pending[s].pos = pos;
      } else if (p == p_form) {
        pending[s].forms.insert(AsciiLower(o.value()));
      } else if (p == p_concept) {
        pending[s].concept_node = o;
      } else if (int n = vocab::RdfMemberIndex(p); n > 0) {
        pending[s].senses[n] = o;
      } else if (p == rdfs_label) {
        labels[s] = o.value();
      } else if (p == p_evokes) {
        lex.evokes_[s].insert(o);
        lex.evoked_by_[o].insert(s);
      } else if (p == p_sense_key) {
        lex.sense_key_[s].insert(o);
        lex.sense_key_inverse_[o].insert(s);
      } else if (p == p_has_fe) {
        frame_elements[s].push_back(o);
      } else if (p == p_fe_type) {
        std::string local = LocalName(o.value());
        if (local == "CoreFE") fe_types[s] = ElementType::kCore;
        else if (local == "PeripheralFE") fe_types[s] = ElementType::kPeripheral;
        else if (local == "ExtraThematicFE") fe_types[s] = ElementType::kExtraThematic;
        else throw InputError("unknown frame element type: " + o.value());
      } else if (p == same_as) {
        lex.same_as_[s].insert(o);
        lex.same_as_[o].insert(s);
      } else if (p == close_match) {
        lex.close_match_inverse_[o].insert(s);
      } else if (p == external_url) {
        lex.external_url_[s].insert(o);
      } else if (p == p_stance) {
        stance_nodes[s].push_back(o);
      } else if (p == p_stance_role) {
        stance_info[s].first = LocalName(o.value());
      } else if (p == p_stance_polarity) {
        stance_info[s].second = LocalName(o.value()) == "Negative";
      } else if (auto it = concept_rel_names.find(p.value());
                 it != concept_rel_names.end()) {
        lex.concept_edges_[s].push_back(
            {s, AlignmentRelation::kConceptRel, it->second, o});
        if (o != s) {
          lex.concept_edges_[o].push_back(
              {s, AlignmentRelation::kConceptRel, it->second, o});
        }
      }
    }
  }

  for (auto &[id, p] : pending) {
    if (!p.typed) continue;
    if (p.lemma.empty()) throw InputError("lexical entry without lemma: " + id.value());
    if (!p.pos) throw InputError("lexical entry without pos: " + id.value());
    if (p.senses.empty()) {
      throw InputError("lexical entry without senses: " + id.value());
    }
    LexicalEntry e;
    e.id = id;
    e.lemma = p.lemma;
    e.pos = *p.pos;
    for (auto &[rank, sense] : p.senses) e.senses.push_back(sense);
    e.forms.assign(p.forms.begin(), p.forms.end());
    e.concept_node = p.concept_node;
    size_t index = lex.entries_.size();
    lex.by_lemma_[e.lemma].push_back(index);
    lex.by_surface_[e.lemma].push_back(index);
    lex.max_entry_tokens_ = std::max(lex.max_entry_tokens_, CountTokens(e.lemma));
    for (const std::string &f : e.forms) {
      if (f != e.lemma) lex.by_surface_[f].push_back(index);
      lex.max_entry_tokens_ = std::max(lex.max_entry_tokens_, CountTokens(f));
    }
    lex.entries_.push_back(std::move(e));
  }

  for (auto &[id, frame] : lex.frames_) {
    if (auto it = labels.find(id); it != labels.end()) frame.label = it->second;
    std::set<std::string> names;
    auto elements = frame_elements[id];
    std::sort(elements.begin(), elements.end());
    for (const Term &fe : elements) {
      auto type = fe_types.find(fe);
      if (type == fe_types.end()) {
        throw InputError("frame element without type: " + fe.value());
      }
      std::string name = labels.count(fe) ? labels[fe] : LocalName(fe.value());
      if (!names.insert(name).second) {
        throw InputError("duplicate frame element name '" + name + "' in " +
                         id.value());
      }
      frame.elements.push_back({fe, name, type->second});
    }
  }

  for (auto &[verb_class, nodes] : stance_nodes) {
    std::sort(nodes.begin(), nodes.end());
    for (const Term &node : nodes) {
      auto &[role, negative] = stance_info[node];
      lex.stances_[verb_class].push_back(
          {node, role, negative, labels.count(node) ? labels[node] : ""});
    }
  }
  for (auto &[node, edges] : lex.concept_edges_) {
    std::sort(edges.begin(), edges.end(),
              [](const AlignmentEdge &a, const AlignmentEdge &b) {
                return std::tie(a.source, a.concept_relation, a.target) <
                       std::tie(b.source, b.concept_relation, b.target);
              });
  }
  return lex;
}

std::vector<LexicalEntry> Lexicon::LookupLemma(
    std::string_view lemma, std::optional<PartOfSpeech> pos) const {
  if (lemma.empty()) throw std::invalid_argument("empty lemma");
  std::vector<LexicalEntry> out;
  auto it = by_lemma_.find(AsciiLower(lemma));
  if (it == by_lemma_.end()) return out;
  for (size_t i : it->second) {
    if (!pos || entries_[i].pos == *pos) out.push_back(entries_[i]);
  }
  std::sort(out.begin(), out.end(),
            [](const LexicalEntry &a, const LexicalEntry &b) {
              return std::tie(a.pos, a.id) < std::tie(b.pos, b.id);
            });
  return out;
}

std::vector<const LexicalEntry *> Lexicon::LookupSurface(
    std::string_view surface) const {
  std::vector<const LexicalEntry *> out;
  auto it = by_surface_.find(AsciiLower(surface));
  if (it == by_surface_.end()) return out;
  for (size_t i : it->second) out.push_back(&entries_[i]);
  std::sort(out.begin(), out.end(),
            [](const LexicalEntry *a, const LexicalEntry *b) {
              return std::tie(a->pos, a->id) < std::tie(b->pos, b->id);
            });
  return out;
}

std::vector<Term> Lexicon::Get(const Multimap &map, const Term &key) {
  auto it = map.find(key);
  if (it == map.end()) return {};
  return {it->second.begin(), it->second.end()};
}

std::vector<Term> Lexicon::FramesOfSense(const Term &sense) const {
  std::vector<Term> out;
  for (const Term &t : Get(evokes_, sense)) {
    if (IsFrame(t)) out.push_back(t);
  }
  return out;
}

std::vector<Term> Lexicon::VerbClassesOfSense(const Term &sense) const {
  return Get(sense_key_, sense);
}

std::vector<Term> Lexicon::FramesOfVerbClass(const Term &verb_class) const {
  return FramesOfSense(verb_class);
}

std::vector<Term> Lexicon::SensesOfVerbClass(const Term &verb_class) const {
  return Get(sense_key_inverse_, verb_class);
}

const Frame *Lexicon::FindFrame(const Term &frame) const {
  auto it = frames_.find(frame);
  return it == frames_.end() ? nullptr : &it->second;
}

std::vector<FrameElement> Lexicon::FrameElements(
    const Term &frame, const std::set<ElementType> &types) const {
  const Frame *f = FindFrame(frame);
  if (f == nullptr) throw InputError("unknown frame: " + frame.value());
  std::vector<FrameElement> out;
  for (const FrameElement &fe : f->elements) {
    if (types.count(fe.type)) out.push_back(fe);
  }
  return out;
}

std::vector<Term> Lexicon::EvokersOf(const Term &frame) const {
  return Get(evoked_by_, frame);
}

std::vector<Term> Lexicon::SameAs(const Term &entity) const {
  return Get(same_as_, entity);
}

std::vector<Term> Lexicon::CloseMatchesOf(const Term &frame) const {
  return Get(close_match_inverse_, frame);
}

std::vector<Term> Lexicon::ExternalUrls(const Term &concept_node) const {
  return Get(external_url_, concept_node);
}

std::vector<AlignmentEdge> Lexicon::ConceptNeighbors(const Term &concept_node) const {
  auto it = concept_edges_.find(concept_node);
  if (it == concept_edges_.end()) return {};
  return it->second;
}

std::vector<AffectStance> Lexicon::AffectStances(const Term &verb_class) const {
  auto it = stances_.find(verb_class);
  if (it == stances_.end()) return {};
  return it->second;
}

std::vector<AlignmentEdge> Lexicon::AlignmentEdges() const {
  std::vector<AlignmentEdge> out;
  for (const auto &[s, targets] : evokes_) {
    for (const Term &o : targets) out.push_back({s, AlignmentRelation::kEvokes, "", o});
  }
  for (const auto &[s, targets] : sense_key_) {
    for (const Term &o : targets) out.push_back({s, AlignmentRelation::kSenseKey, "", o});
  }
  for (const auto &[s, targets] : same_as_) {
    for (const Term &o : targets) out.push_back({s, AlignmentRelation::kSameAs, "", o});
  }
  for (const auto &[o, sources] : close_match_inverse_) {
    for (const Term &s : sources) out.push_back({s, AlignmentRelation::kCloseMatch, "", o});
  }
  for (const auto &[s, targets] : external_url_) {
    for (const Term &o : targets) out.push_back({s, AlignmentRelation::kExternalUrl, "", o});
  }
  for (const auto &[c, edges] : concept_edges_) {
    for (const AlignmentEdge &e : edges) {
      if (e.source == c) out.push_back(e);
    }
  }
  return out;
}

}  // namespace folkgraph
