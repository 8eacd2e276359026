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

#include "folkgraph/quokka.h"

#include <algorithm>
#include <filesystem>
#include <stdexcept>

#include "folkgraph/errors.h"
#include "folkgraph/rdf_io.h"
#include "folkgraph/text.h"
#include "json.hpp"

namespace folkgraph {

namespace {

const char kYagoNs[] = "http://yago-knowledge.org/resource/";
const char kTriggerGraphNs[] = "https://w3id.org/folkgraph/graph/triggers/";

void SortUnique(std::vector<Term> *terms) {
  std::sort(terms->begin(), terms->end());
  terms->erase(std::unique(terms->begin(), terms->end()), terms->end());
}

bool Has(const std::vector<Term> &sorted, const Term &t) {
  return std::binary_search(sorted.begin(), sorted.end(), t);
}

std::vector<std::string> Words(std::string_view s) {
  std::vector<std::string> out;
  for (const std::string &w : Split(s, ' ')) {
    std::string_view t = Trim(w);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

}  // namespace

const std::vector<QueryKind> &AllQueryKinds() {
  static const std::vector<QueryKind> kinds = {
      QueryKind::kFrameActivation, QueryKind::kFrameElement,
      QueryKind::kLexicalUnit,     QueryKind::kCloseMatch,
      QueryKind::kYago,            QueryKind::kConceptActivation,
      QueryKind::kFactual};
  return kinds;
}

const char *QueryKindName(QueryKind kind) {
  switch (kind) {
    case QueryKind::kFrameActivation: return "frame";
    case QueryKind::kFrameElement: return "frameElement";
    case QueryKind::kLexicalUnit: return "lexicalUnit";
    case QueryKind::kCloseMatch: return "closeMatch";
    case QueryKind::kYago: return "yago";
    case QueryKind::kConceptActivation: return "concept";
    case QueryKind::kFactual: return "factual";
  }
  return "?";
}

std::optional<QueryKind> ParseQueryKind(std::string_view name) {
  for (QueryKind k : AllQueryKinds()) {
    if (name == QueryKindName(k)) return k;
  }
  return std::nullopt;
}

const char *SelectionModeName(SelectionMode mode) {
  switch (mode) {
    case SelectionMode::kSelection: return "selection";
    case SelectionMode::kAuto: return "auto";
    case SelectionMode::kProposeOnly: return "propose";
  }
  return "?";
}

ExpansionPlan ParsePlan(std::string_view text, const PrefixTable &prefixes,
                        const std::string &base_dir) {
  ExpansionPlan plan;
  bool have_value = false;
  int line_no = 0;
  for (std::string line : Split(text, '\n')) {
    ++line_no;
    std::string_view t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto where = [&] { return "plan line " + std::to_string(line_no) + ": "; };
    size_t eq = t.find('=');
    if (eq == std::string_view::npos) throw InputError(where() + "expected key = value");
    std::string key(Trim(t.substr(0, eq)));
    std::string value(Trim(t.substr(eq + 1)));
    if (key == "value") {
      plan.value = prefixes.ExpandIri(value);
      have_value = true;
    } else if (key == "seed") {
      std::vector<std::string> w = Words(value);
      if (w.empty()) throw InputError(where() + "empty seed");
      Lexeme lx;
      if (w.size() > 1) {
        if (auto pos = ParsePartOfSpeech(w.back())) {
          lx.pos = pos;
          w.pop_back();
        }
      }
      lx.lemma = AsciiLower(Join(w, " "));
      plan.seeds.push_back(std::move(lx));
    } else if (key.rfind("select.", 0) == 0) {
      auto kind = ParseQueryKind(key.substr(7));
      if (!kind) throw InputError(where() + "unknown query kind " + key.substr(7));
      std::filesystem::path p(value);
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      plan.selection_files[*kind] = p.lexically_normal().string();
    } else if (key == "auto") {
      for (const std::string &w : Words(value)) {
        auto kind = ParseQueryKind(w);
        if (!kind) throw InputError(where() + "unknown query kind " + w);
        plan.auto_accept.insert(*kind);
      }
    } else {
      throw InputError(where() + "unknown key " + key);
    }
  }
  if (!have_value) throw InputError("plan without value");
  for (QueryKind k : plan.auto_accept) {
    if (plan.selection_files.count(k)) {
      throw InputError(std::string("query kind both selected and automatic: ") +
                       QueryKindName(k));
    }
  }
  return plan;
}

ExpansionPlan LoadPlan(const std::string &path, const PrefixTable &prefixes) {
  try {
    return ParsePlan(ReadFile(path), prefixes,
                     std::filesystem::path(path).parent_path().string());
  } catch (const InputError &e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<Term> ParseSelection(std::string_view text,
                                 const PrefixTable &prefixes) {
  std::vector<Term> out;
  for (const std::string &line : Split(text, '\n')) {
    std::string_view t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(prefixes.ExpandIri(t));
  }
  return out;
}

std::vector<QueryKind> ExpansionReport::ProposeOnly() const {
  std::vector<QueryKind> out;
  for (const auto &[kind, r] : per_query) {
    if (r.mode == SelectionMode::kProposeOnly) out.push_back(kind);
  }
  return out;
}

std::string ExpansionReport::ToJson(const PrefixTable &prefixes) const {
  using nlohmann::ordered_json;
  auto names = [&](const std::vector<Term> &terms) {
    ordered_json a = ordered_json::array();
    for (const Term &t : terms) a.push_back(prefixes.Display(t));
    return a;
  };
  ordered_json j;
  j["value"] = prefixes.Display(value);
  ordered_json queries = ordered_json::object();
  for (QueryKind k : AllQueryKinds()) {
    auto it = per_query.find(k);
    if (it == per_query.end()) continue;
    ordered_json q;
    q["mode"] = SelectionModeName(it->second.mode);
    q["candidates"] = names(it->second.candidates);
    q["accepted"] = names(it->second.accepted);
    queries[QueryKindName(k)] = std::move(q);
  }
  j["queries"] = std::move(queries);
  ordered_json edges = ordered_json::array();
  for (const TriggerEdge &e : this->edges) {
    ordered_json o;
    o["trigger"] = prefixes.Display(e.trigger);
    o["kind"] = ActivationKindName(e.kind);
    o["provenance"] = TriggerProvenanceName(e.provenance);
    o["via"] = names(e.via);
    edges.push_back(std::move(o));
  }
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

std::vector<Term> Quokka::FrameActivationQuery(const Lexeme &lexeme) const {
  std::vector<Term> out;
  if (lexeme.lemma.empty()) return out;
  for (const LexicalEntry &e : lexicon_.LookupLemma(lexeme.lemma, lexeme.pos)) {
    for (const Term &sense : e.senses) {
      for (const Term &f : lexicon_.FramesOfSense(sense)) out.push_back(f);
    }
  }
  SortUnique(&out);
  return out;
}

std::vector<Term> Quokka::ConceptActivationQuery(const Lexeme &lexeme) const {
  std::vector<Term> out;
  if (lexeme.lemma.empty()) return out;
  for (const LexicalEntry &e : lexicon_.LookupLemma(lexeme.lemma, lexeme.pos)) {
    if (!e.concept_node) continue;
    const Term &anchor = *e.concept_node;
    out.push_back(anchor);
    for (const AlignmentEdge &edge : lexicon_.ConceptNeighbors(anchor)) {
      out.push_back(edge.source == anchor ? edge.target : edge.source);
    }
  }
  SortUnique(&out);
  return out;
}

std::vector<Term> Quokka::FactualExpansionQuery(const Term &concept_node) const {
  std::vector<Term> out = lexicon_.ExternalUrls(concept_node);
  SortUnique(&out);
  return out;
}

std::vector<FrameElement> Quokka::FrameElementQuery(const Term &frame) const {
  return lexicon_.FrameElements(
      frame, {ElementType::kCore, ElementType::kPeripheral,
              ElementType::kExtraThematic});
}

std::vector<Term> Quokka::LexicalUnitExpansion(
    const std::vector<Term> &frames) const {
  std::vector<Term> out;
  for (const Term &f : frames) {
    for (const Term &e : lexicon_.EvokersOf(f)) {
      if (!lexicon_.IsSynset(e)) continue;
      out.push_back(e);
      for (const Term &vc : lexicon_.VerbClassesOfSense(e)) out.push_back(vc);
    }
  }
  SortUnique(&out);
  return out;
}

std::vector<Term> Quokka::YagoExpansion(const std::vector<Term> &synsets) const {
  std::vector<Term> out;
  for (const Term &s : synsets) {
    for (const Term &t : lexicon_.SameAs(s)) {
      if (t.value().rfind(kYagoNs, 0) == 0) out.push_back(t);
    }
  }
  SortUnique(&out);
  return out;
}

std::vector<Term> Quokka::CloseMatchExpansion(
    const std::vector<Term> &frames) const {
  std::vector<Term> out;
  for (const Term &f : frames) {
    for (const Term &t : lexicon_.CloseMatchesOf(f)) out.push_back(t);
  }
  SortUnique(&out);
  return out;
}

Term Quokka::TriggerGraphName(const Term &value) {
  const std::string &iri = value.value();
  size_t cut = iri.find_last_of("#/");
  return Term::Iri(kTriggerGraphNs +
                   PercentEncode(cut == std::string::npos ? iri
                                                          : iri.substr(cut + 1)));
}

Quokka::Result Quokka::RunPlan(const ExpansionPlan &plan,
                               const ValueModel *values) const {
  if (!store_.frozen()) throw std::logic_error("store is not frozen");
  if (values != nullptr && !values->Contains(plan.value)) {
    throw InputError("plan for unknown value: " + plan.value.value());
  }
  Result result;
  ExpansionReport &report = result.report;
  report.value = plan.value;
  if (plan.seeds.empty()) return result;

  auto decide = [&](QueryKind kind,
                    std::vector<Term> candidates) -> const QueryResult & {
    QueryResult r;
    SortUnique(&candidates);
    r.candidates = std::move(candidates);
    auto file = plan.selection_files.find(kind);
    if (plan.auto_accept.count(kind)) {
      r.mode = SelectionMode::kAuto;
      r.accepted = r.candidates;
    } else if (file != plan.selection_files.end()) {
      r.mode = SelectionMode::kSelection;
      std::vector<Term> chosen =
          ParseSelection(ReadFile(file->second), prefixes_);
      for (const Term &t : chosen) {
        if (!Has(r.candidates, t)) {
          throw ConsistencyError(file->second + ": " + prefixes_.Display(t) +
                                 " is not a " + QueryKindName(kind) +
                                 " candidate (stale selection)");
        }
      }
      SortUnique(&chosen);
      r.accepted = std::move(chosen);
    }
    return report.per_query[kind] = std::move(r);
  };

  std::vector<TriggerEdge> edges;
  auto emit = [&](const Term &trigger, ActivationKind kind,
                  TriggerProvenance prov, std::vector<Term> via) {
    edges.push_back({trigger, plan.value, kind, prov, std::move(via)});
  };

  // Frame activation and what hangs off accepted frames.
  std::vector<Term> frames;
  for (const Lexeme &seed : plan.seeds) {
    for (const Term &f : FrameActivationQuery(seed)) frames.push_back(f);
  }
  const std::vector<Term> accepted_frames =
      decide(QueryKind::kFrameActivation, frames).accepted;
  for (const Term &f : accepted_frames) {
    emit(f, ActivationKind::kFrame, TriggerProvenance::kSeedSelection, {});
  }

  std::map<Term, Term> element_frame;
  std::vector<Term> elements;
  for (const Term &f : accepted_frames) {
    for (const FrameElement &fe : FrameElementQuery(f)) {
      elements.push_back(fe.id);
      element_frame.emplace(fe.id, f);
    }
  }
  for (const Term &fe : decide(QueryKind::kFrameElement, elements).accepted) {
    emit(fe, ActivationKind::kFrameElement, TriggerProvenance::kSeedSelection,
         {element_frame.at(fe)});
  }

  // First accepted frame evoked by a synset; lexicographic.
  auto justifying_frame = [&](const Term &synset) -> std::optional<Term> {
    for (const Term &f : lexicon_.FramesOfSense(synset)) {
      if (Has(accepted_frames, f)) return f;
    }
    return std::nullopt;
  };
  std::vector<Term> accepted_synsets;
  for (const Term &t :
       decide(QueryKind::kLexicalUnit, LexicalUnitExpansion(accepted_frames))
           .accepted) {
    if (lexicon_.IsSynset(t)) {
      accepted_synsets.push_back(t);
      emit(t, ActivationKind::kSynset, TriggerProvenance::kDerivedClosure,
           {*justifying_frame(t)});
      continue;
    }
    for (const Term &s : lexicon_.SensesOfVerbClass(t)) {
      if (auto f = justifying_frame(s)) {
        emit(t, ActivationKind::kVerbClass, TriggerProvenance::kDerivedClosure,
             {s, *f});
        break;
      }
    }
  }

  for (const Term &t :
       decide(QueryKind::kCloseMatch, CloseMatchExpansion(accepted_frames))
           .accepted) {
    for (const Term &f : accepted_frames) {
      auto m = lexicon_.CloseMatchesOf(f);
      if (std::find(m.begin(), m.end(), t) != m.end()) {
        emit(t, ActivationKind::kCloseMatch,
             TriggerProvenance::kCloseMatchQuery, {f});
        break;
      }
    }
  }

  // YAGO expansion is terminal: its results feed nothing else.
  for (const Term &y :
       decide(QueryKind::kYago, YagoExpansion(accepted_synsets)).accepted) {
    for (const Term &s : lexicon_.SameAs(y)) {
      if (Has(accepted_synsets, s)) {
        emit(y, ActivationKind::kFactualEntity, TriggerProvenance::kYagoQuery,
             {s});
        break;
      }
    }
  }

  // Concept branch.
  std::vector<Term> concepts;
  for (const Lexeme &seed : plan.seeds) {
    for (const Term &c : ConceptActivationQuery(seed)) concepts.push_back(c);
  }
  const std::vector<Term> accepted_concepts =
      decide(QueryKind::kConceptActivation, concepts).accepted;
  for (const Term &c : accepted_concepts) {
    emit(c, ActivationKind::kConcept, TriggerProvenance::kConceptQuery, {});
  }
  std::vector<Term> factual;
  std::map<Term, Term> factual_concept;
  for (const Term &c : accepted_concepts) {
    for (const Term &e : FactualExpansionQuery(c)) {
      factual.push_back(e);
      factual_concept.emplace(e, c);
    }
  }
  for (const Term &e : decide(QueryKind::kFactual, factual).accepted) {
    emit(e, ActivationKind::kFactualEntity, TriggerProvenance::kFactualQuery,
         {factual_concept.at(e)});
  }

  // (trigger, value, kind) is unique; the earliest query wins.
  std::set<std::pair<Term, ActivationKind>> seen;
  for (TriggerEdge &e : edges) {
    if (seen.insert({e.trigger, e.kind}).second) {
      report.edges.push_back(std::move(e));
    }
  }
  Graph graph(TriggerGraphName(plan.value));
  for (const TriggerEdge &e : report.edges) EmitTriggerEdge(e, &graph);
  result.graph = std::move(graph);
  return result;
}

}  // namespace folkgraph
