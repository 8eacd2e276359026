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

#include "folkgraph/valuenet.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <numeric>

#include "folkgraph/errors.h"
#include "folkgraph/text.h"
#include "folkgraph/vocab.h"

namespace folkgraph {

namespace {

const char kGraphNs[] = "https://w3id.org/folkgraph/graph/";

std::string LocalName(const std::string &iri) {
  size_t cut = iri.find_last_of("#/");
  return cut == std::string::npos ? iri : iri.substr(cut + 1);
}

void SortUnique(std::vector<Term> *terms) {
  std::sort(terms->begin(), terms->end());
  terms->erase(std::unique(terms->begin(), terms->end()), terms->end());
}

uint64_t Fnv1a(std::string_view s) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Term ModuleTerm(ValueModule m) { return vocab::Vcore(ValueModuleName(m)); }

Term PolarityTerm(Polarity p) {
  switch (p) {
    case Polarity::kPositive: return vocab::Vcore("Positive");
    case Polarity::kNegative: return vocab::Vcore("Negative");
    case Polarity::kUnpolarized: break;
  }
  return vocab::Vcore("Unpolarized");
}

std::string Normalize(std::string_view label) {
  std::string out;
  for (const std::string &w : Split(AsciiLower(Trim(label)), ' ')) {
    if (w.empty()) continue;
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

// Non-comment, non-blank lines with their 1-based numbers.
std::vector<std::pair<int, std::string>> DataLines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  int n = 0;
  for (const std::string &raw : Split(text, '\n')) {
    ++n;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.emplace_back(n, line);
  }
  return out;
}

std::vector<Term> ParseList(const std::string &field,
                            const PrefixTable &prefixes) {
  std::vector<Term> out;
  for (const std::string &item : Split(field, '|')) {
    std::string_view t = Trim(item);
    if (!t.empty()) out.push_back(prefixes.ExpandIri(t));
  }
  return out;
}

}  // namespace

const char *ValueModuleName(ValueModule module) {
  switch (module) {
    case ValueModule::kMft: return "MFT";
    case ValueModule::kBhv: return "BHV";
    case ValueModule::kFolk: return "FOLK";
  }
  return "?";
}

std::optional<ValueModule> ParseValueModule(std::string_view name) {
  std::string n = AsciiLower(name);
  if (n == "mft") return ValueModule::kMft;
  if (n == "bhv") return ValueModule::kBhv;
  if (n == "folk") return ValueModule::kFolk;
  return std::nullopt;
}

const char *PolarityName(Polarity polarity) {
  switch (polarity) {
    case Polarity::kPositive: return "positive";
    case Polarity::kNegative: return "negative";
    case Polarity::kUnpolarized: return "unpolarized";
  }
  return "?";
}

std::optional<Polarity> ParsePolarity(std::string_view name) {
  std::string n = AsciiLower(name);
  if (n == "positive") return Polarity::kPositive;
  if (n == "negative") return Polarity::kNegative;
  if (n == "unpolarized" || n.empty()) return Polarity::kUnpolarized;
  return std::nullopt;
}

const char *ActivationKindName(ActivationKind kind) {
  switch (kind) {
    case ActivationKind::kFrame: return "frame";
    case ActivationKind::kSynset: return "synset";
    case ActivationKind::kVerbClass: return "verbClass";
    case ActivationKind::kConcept: return "concept";
    case ActivationKind::kFactualEntity: return "factualEntity";
    case ActivationKind::kFrameElement: return "frameElement";
    case ActivationKind::kCloseMatch: return "closeMatch";
  }
  return "?";
}

std::optional<ActivationKind> ParseActivationKind(std::string_view name) {
  for (ActivationKind k :
       {ActivationKind::kFrame, ActivationKind::kSynset,
        ActivationKind::kVerbClass, ActivationKind::kConcept,
        ActivationKind::kFactualEntity, ActivationKind::kFrameElement,
        ActivationKind::kCloseMatch}) {
    if (name == ActivationKindName(k)) return k;
  }
  return std::nullopt;
}

const char *TriggerProvenanceName(TriggerProvenance provenance) {
  switch (provenance) {
    case TriggerProvenance::kSeedSelection: return "seedSelection";
    case TriggerProvenance::kDerivedClosure: return "derivedClosure";
    case TriggerProvenance::kCloseMatchQuery: return "closeMatchQuery";
    case TriggerProvenance::kYagoQuery: return "yagoQuery";
    case TriggerProvenance::kConceptQuery: return "conceptQuery";
    case TriggerProvenance::kFactualQuery: return "factualQuery";
  }
  return "?";
}

std::optional<TriggerProvenance> ParseTriggerProvenance(std::string_view name) {
  for (TriggerProvenance p :
       {TriggerProvenance::kSeedSelection, TriggerProvenance::kDerivedClosure,
        TriggerProvenance::kCloseMatchQuery, TriggerProvenance::kYagoQuery,
        TriggerProvenance::kConceptQuery, TriggerProvenance::kFactualQuery}) {
    if (name == TriggerProvenanceName(p)) return p;
  }
  return std::nullopt;
}

void EmitTriggerEdge(const TriggerEdge &edge, Graph *graph) {
  // The edge node name is a stable hash of the uniqueness key.
  std::string key = edge.trigger.value() + '\n' + edge.value.value() + '\n' +
                    ActivationKindName(edge.kind);
  char hex[17];
  snprintf(hex, sizeof(hex), "%016llx",
           static_cast<unsigned long long>(Fnv1a(key)));
  Term node = Term::Iri(std::string("urn:folkgraph:trigger:") + hex);
  graph->Insert({edge.trigger, vocab::Vcore("triggers"), edge.value});
  graph->Insert({node, vocab::Rdf("type"), vocab::Vcore("TriggerEdge")});
  graph->Insert({node, vocab::Vcore("trigger"), edge.trigger});
  graph->Insert({node, vocab::Vcore("value"), edge.value});
  graph->Insert({node, vocab::Vcore("activationKind"),
                 vocab::Vcore(ActivationKindName(edge.kind))});
  graph->Insert({node, vocab::Vcore("provenance"),
                 vocab::Vcore(TriggerProvenanceName(edge.provenance))});
  for (size_t i = 0; i < edge.via.size(); ++i) {
    graph->Insert({node, vocab::RdfMember(static_cast<int>(i) + 1),
                   edge.via[i]});
  }
}

std::vector<TriggerEdge> ReadTriggerEdges(const Graph &graph) {
  const Term type = vocab::Rdf("type");
  const Term edge_class = vocab::Vcore("TriggerEdge");
  std::map<Term, TriggerEdge> edges;
  std::map<Term, std::map<int, Term>> via;
  for (const Triple &t : graph) {
    if (t.predicate == type && t.object == edge_class) edges[t.subject];
  }
  for (const Triple &t : graph) {
    auto it = edges.find(t.subject);
    if (it == edges.end()) continue;
    TriggerEdge &e = it->second;
    const std::string local = LocalName(t.object.value());
    if (t.predicate == vocab::Vcore("trigger")) {
      e.trigger = t.object;
    } else if (t.predicate == vocab::Vcore("value")) {
      e.value = t.object;
    } else if (t.predicate == vocab::Vcore("activationKind")) {
      auto k = ParseActivationKind(local);
      if (!k) throw InputError("unknown activation kind: " + t.object.value());
      e.kind = *k;
    } else if (t.predicate == vocab::Vcore("provenance")) {
      auto p = ParseTriggerProvenance(local);
      if (!p) throw InputError("unknown provenance: " + t.object.value());
      e.provenance = *p;
    } else if (int n = vocab::RdfMemberIndex(t.predicate); n > 0) {
      via[t.subject][n] = t.object;
    }
  }
  std::vector<TriggerEdge> out;
  for (auto &[node, e] : edges) {
    for (auto &[n, term] : via[node]) e.via.push_back(term);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const TriggerEdge &a,
                                       const TriggerEdge &b) {
    return std::tie(a.value, a.kind, a.trigger) <
           std::tie(b.value, b.kind, b.trigger);
  });
  return out;
}

bool ValueModel::ReachesViaParents(const Term &from, const Term &target) const {
  std::set<Term> seen;
  std::vector<Term> stack{from};
  while (!stack.empty()) {
    Term cur = stack.back();
    stack.pop_back();
    if (cur == target) return true;
    if (!seen.insert(cur).second) continue;
    auto it = values_.find(cur);
    if (it == values_.end()) continue;
    for (const Term &p : it->second.parents) stack.push_back(p);
  }
  return false;
}

const ValueConcept &ValueModel::Register(ValueConcept spec) {
  const std::string &name = spec.id.value();
  if (!spec.id.is_iri()) throw InputError("value id must be an IRI: " + name);
  if (values_.count(spec.id)) throw InputError("duplicate value: " + name);
  SortUnique(&spec.parents);
  SortUnique(&spec.provenance);
  SortUnique(&spec.aligned_to);
  if (spec.label.empty()) spec.label = LocalName(name);

  if (spec.module == ValueModule::kMft) {
    if (!spec.dyad_partner) {
      throw InputError("MFT value without dyad partner: " + name);
    }
    if (*spec.dyad_partner == spec.id) {
      throw InputError("value is its own dyad partner: " + name);
    }
    if (spec.polarity == Polarity::kUnpolarized) {
      throw InputError("MFT value without polarity: " + name);
    }
    if (!spec.parents.empty()) {
      throw InputError("MFT values have no taxonomy parents: " + name);
    }
    if (const ValueConcept *p = Find(*spec.dyad_partner)) {
      if (p->module != ValueModule::kMft || p->dyad_partner != spec.id ||
          p->polarity == spec.polarity) {
        throw InputError("inconsistent dyad " + name + " / " +
                         p->id.value());
      }
    }
    for (const auto &[id, v] : values_) {
      if (v.dyad_partner == spec.id && id != *spec.dyad_partner) {
        throw InputError("inconsistent dyad " + name + " / " + id.value());
      }
    }
  } else if (spec.dyad_partner) {
    throw InputError("only MFT values form dyads: " + name);
  }
  if (spec.module == ValueModule::kFolk && spec.provenance.empty()) {
    throw InputError("FOLK value without provenance: " + name);
  }
  if (spec.module != ValueModule::kFolk && !spec.aligned_to.empty()) {
    throw InputError("only FOLK values are aligned: " + name);
  }
  // Parents may be forward references; a cycle closes when a parent
  // already reaches this id.
  for (const Term &parent : spec.parents) {
    if (ReachesViaParents(parent, spec.id)) {
      throw InputError("taxonomy cycle through " + name);
    }
  }
  for (const Term &target : spec.aligned_to) {
    const ValueConcept *t = Find(target);
    if (t == nullptr || t->module == ValueModule::kFolk) {
      throw InputError("bad alignment target " + target.value() + " for " +
                       name);
    }
  }
  Term id = spec.id;
  for (const Term &target : spec.aligned_to) alignments_.insert({id, target});
  order_.push_back(id);
  return values_.emplace(id, std::move(spec)).first->second;
}

ValueAlignment ValueModel::Align(const Term &folk, const Term &target) {
  auto it = values_.find(folk);
  if (it == values_.end()) throw InputError("unknown value: " + folk.value());
  const ValueConcept *t = Find(target);
  if (t == nullptr) throw InputError("unknown value: " + target.value());
  if (it->second.module != ValueModule::kFolk) {
    throw InputError("alignment source is not a FOLK value: " + folk.value());
  }
  if (t->module == ValueModule::kFolk) {
    throw InputError("alignment target must be MFT or BHV: " + target.value());
  }
  ValueAlignment a{folk, target};
  if (alignments_.insert(a).second) {
    it->second.aligned_to.push_back(target);
    SortUnique(&it->second.aligned_to);
  }
  return a;
}

void ValueModel::Validate() const {
  for (const auto &[id, v] : values_) {
    if (v.dyad_partner) {
      const ValueConcept *p = Find(*v.dyad_partner);
      if (p == nullptr) {
        throw InputError("dyad partner of " + id.value() +
                         " is not registered: " + v.dyad_partner->value());
      }
      if (p->dyad_partner != id || p->polarity == v.polarity) {
        throw InputError("inconsistent dyad " + id.value() + " / " +
                         p->id.value());
      }
    }
    for (const Term &parent : v.parents) {
      const ValueConcept *p = Find(parent);
      if (p == nullptr) {
        throw InputError("parent of " + id.value() +
                         " is not registered: " + parent.value());
      }
      if (p->module != v.module) {
        throw InputError("parent of " + id.value() + " is in another module");
      }
    }
  }
}

const ValueConcept *ValueModel::Find(const Term &id) const {
  auto it = values_.find(id);
  return it == values_.end() ? nullptr : &it->second;
}

std::vector<const ValueConcept *> ValueModel::Values() const {
  std::vector<const ValueConcept *> out;
  for (const auto &[id, v] : values_) out.push_back(&v);
  return out;
}

std::vector<const ValueConcept *> ValueModel::ValuesIn(
    ValueModule module) const {
  std::vector<const ValueConcept *> out;
  for (const auto &[id, v] : values_) {
    if (v.module == module) out.push_back(&v);
  }
  return out;
}

std::vector<Term> ValueModel::BhvRing() const {
  std::set<Term> inner;
  for (const auto &[id, v] : values_) {
    if (v.module != ValueModule::kBhv) continue;
    inner.insert(v.parents.begin(), v.parents.end());
  }
  std::vector<Term> ring;
  for (const Term &id : order_) {
    if (values_.at(id).module == ValueModule::kBhv && !inner.count(id)) {
      ring.push_back(id);
    }
  }
  return ring;
}

Term ValueModel::ModuleGraphName(ValueModule module) {
  return Term::Iri(std::string(kGraphNs) + ValueModuleName(module));
}

Graph ValueModel::ModuleGraph(ValueModule module) const {
  Graph g(ModuleGraphName(module));
  const Term type = vocab::Rdf("type");
  const Term sub = vocab::Rdfs("subClassOf");
  for (const ValueConcept *v : ValuesIn(module)) {
    const Term &id = v->id;
    // Punning: individual of Value and class of value situations.
    g.Insert({v->concept_node(), type, vocab::Vcore("Value")});
    g.Insert({v->situation_class_node(), type, vocab::Owl("Class")});
    g.Insert({v->situation_class_node(), sub, vocab::Vcore("ValueSituation")});
    g.Insert({id, vocab::Vcore("inModule"), ModuleTerm(v->module)});
    g.Insert({id, vocab::Vcore("polarity"), PolarityTerm(v->polarity)});
    g.Insert({id, vocab::Rdfs("label"), Term::Literal(v->label)});
    if (v->dyad_partner) {
      g.Insert({id, vocab::Vcore("dyadPartner"), *v->dyad_partner});
    }
    for (const Term &p : v->parents) g.Insert({id, sub, p});
    for (const Term &u : v->provenance) {
      g.Insert({id, vocab::Prov("wasAttributedTo"), u});
    }
    for (const Term &t : v->aligned_to) {
      g.Insert({id, vocab::Skos("closeMatch"), t});
    }
  }
  if (module == ValueModule::kBhv) {
    std::vector<Term> ring = BhvRing();
    for (size_t i = 0; i < ring.size(); ++i) {
      g.Insert({ring[i], vocab::Vcore("circlePosition"),
                vocab::Integer(static_cast<long>(i) + 1)});
      g.Insert({ring[i], vocab::Vcore("nextOnCircle"),
                ring[(i + 1) % ring.size()]});
    }
  }
  return g;
}

ValueModel ValueModel::FromStore(const Store &store, std::vector<Term> graphs) {
  if (graphs.empty()) graphs = store.GraphsWithRole("values");
  struct Row {
    ValueConcept spec;
    long position = 0;
  };
  std::map<Term, Row> rows;
  std::vector<ValueAlignment> aligns;
  for (const Term &name : graphs) {
    const Graph &g = store.GetGraph(name);
    for (const Triple &t : g) {
      if (t.predicate == vocab::Rdf("type") &&
          t.object == vocab::Vcore("Value")) {
        rows[t.subject].spec.id = t.subject;
      }
    }
    for (const Triple &t : g) {
      auto it = rows.find(t.subject);
      if (it == rows.end()) continue;
      ValueConcept &v = it->second.spec;
      const std::string local = LocalName(t.object.value());
      if (t.predicate == vocab::Vcore("inModule")) {
        auto m = ParseValueModule(local);
        if (!m) throw InputError("unknown module " + t.object.value());
        v.module = *m;
      } else if (t.predicate == vocab::Vcore("polarity")) {
        auto p = ParsePolarity(local);
        if (!p) throw InputError("unknown polarity " + t.object.value());
        v.polarity = *p;
      } else if (t.predicate == vocab::Vcore("dyadPartner")) {
        v.dyad_partner = t.object;
      } else if (t.predicate == vocab::Rdfs("subClassOf") &&
                 t.object != vocab::Vcore("ValueSituation")) {
        v.parents.push_back(t.object);
      } else if (t.predicate == vocab::Prov("wasAttributedTo")) {
        v.provenance.push_back(t.object);
      } else if (t.predicate == vocab::Skos("closeMatch")) {
        aligns.push_back({t.subject, t.object});
      } else if (t.predicate == vocab::Rdfs("label")) {
        v.label = t.object.value();
      } else if (t.predicate == vocab::Vcore("circlePosition")) {
        it->second.position = std::stol(t.object.value());
      }
    }
  }
  std::vector<const Row *> order;
  for (const auto &[id, row] : rows) order.push_back(&row);
  std::stable_sort(order.begin(), order.end(),
                   [](const Row *a, const Row *b) {
                     return a->position < b->position;
                   });
  ValueModel model;
  for (const Row *row : order) model.Register(row->spec);
  for (const ValueAlignment &a : aligns) model.Align(a.folk, a.target);
  model.Validate();
  return model;
}

ValueManifest ParseValueManifest(std::string_view text,
                                 const PrefixTable &prefixes) {
  ValueManifest out;
  for (const auto &[line_no, line] : DataLines(text)) {
    std::vector<std::string> cols = Split(line, '\t');
    auto where = [&, n = line_no] { return "value manifest line " + std::to_string(n); };
    if (cols.size() < 2) throw InputError(where() + ": expected id and module");
    cols.resize(std::max<size_t>(cols.size(), 8));
    ValueConcept v;
    v.id = prefixes.ExpandIri(Trim(cols[0]));
    auto module = ParseValueModule(Trim(cols[1]));
    if (!module) throw InputError(where() + ": unknown module " + cols[1]);
    v.module = *module;
    auto polarity = ParsePolarity(Trim(cols[2]));
    if (!polarity) throw InputError(where() + ": unknown polarity " + cols[2]);
    v.polarity = *polarity;
    if (!Trim(cols[3]).empty()) v.dyad_partner = prefixes.ExpandIri(Trim(cols[3]));
    v.parents = ParseList(cols[4], prefixes);
    v.provenance = ParseList(cols[5], prefixes);
    for (const Term &t : ParseList(cols[6], prefixes)) {
      out.alignments.push_back({v.id, t});
    }
    v.label = std::string(Trim(cols[7]));
    out.values.push_back(std::move(v));
  }
  return out;
}

ValueModel BuildValueModel(const ValueManifest &manifest) {
  ValueModel model;
  for (const ValueConcept &v : manifest.values) model.Register(v);
  for (const ValueAlignment &a : manifest.alignments) {
    model.Align(a.folk, a.target);
  }
  model.Validate();
  return model;
}

std::vector<ValueCandidate> ParseValueCandidates(std::string_view text) {
  std::vector<ValueCandidate> out;
  for (const auto &[line_no, line] : DataLines(text)) {
    std::vector<std::string> cols = Split(line, '\t');
    if (cols.size() < 3 || Trim(cols[0]).empty()) {
      throw InputError("candidate line " + std::to_string(line_no) +
                       ": expected label, definition and source");
    }
    out.push_back({std::string(Trim(cols[0])), std::string(Trim(cols[1])),
                   Term::Iri(std::string(Trim(cols[2])))});
  }
  return out;
}

DedupeOverrides ParseDedupeOverrides(std::string_view text) {
  DedupeOverrides out;
  for (const auto &[line_no, line] : DataLines(text)) {
    std::vector<std::string> cols = Split(line, '\t');
    std::string op = cols.empty() ? "" : AsciiLower(Trim(cols[0]));
    if (cols.size() != 3 || (op != "split" && op != "merge")) {
      throw InputError("override line " + std::to_string(line_no) +
                       ": expected split|merge <label> <label>");
    }
    auto pair = std::make_pair(std::string(Trim(cols[1])),
                               std::string(Trim(cols[2])));
    (op == "split" ? out.split : out.merge).push_back(pair);
  }
  return out;
}

std::string CamelCase(std::string_view label) {
  std::string out;
  bool start = true;
  for (char c : label) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += start ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
      start = false;
    } else {
      start = true;
    }
  }
  return out;
}

DedupeResult DedupeCandidates(const std::vector<ValueCandidate> &candidates,
                              const Lexicon &lexicon,
                              const DedupeOverrides &overrides,
                              std::string_view ns) {
  // Distinct normalized labels in first-seen order.
  std::vector<std::string> keys;
  std::map<std::string, size_t> index;
  std::vector<std::string> display;
  DedupeResult result;
  for (const ValueCandidate &c : candidates) {
    if (Trim(c.label).empty()) {
      throw std::invalid_argument("empty candidate label");
    }
    std::string key = Normalize(c.label);
    auto [it, fresh] = index.emplace(key, keys.size());
    if (fresh) {
      keys.push_back(key);
      display.push_back(std::string(Trim(c.label)));
    } else {
      result.merges.push_back({display[it->second], std::string(Trim(c.label)),
                               "same label"});
    }
  }

  std::vector<size_t> parent(keys.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](size_t a, size_t b, const std::string &reason) {
    size_t ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (rb < ra) std::swap(ra, rb);
    parent[rb] = ra;
    result.merges.push_back({display[ra], display[rb], reason});
  };

  std::set<std::pair<size_t, size_t>> split;
  auto lookup = [&](const std::string &label) -> std::optional<size_t> {
    auto it = index.find(Normalize(label));
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  for (const auto &[a, b] : overrides.split) {
    auto ia = lookup(a), ib = lookup(b);
    if (ia && ib) split.insert(std::minmax(*ia, *ib));
  }

  // Shared synsets, pairwise within each synset.
  std::map<Term, std::vector<size_t>> by_synset;
  for (size_t i = 0; i < keys.size(); ++i) {
    auto entries = lexicon.LookupLemma(keys[i], PartOfSpeech::kNoun);
    if (entries.empty()) entries = lexicon.LookupLemma(keys[i]);
    std::set<Term> senses;
    for (const LexicalEntry &e : entries) {
      senses.insert(e.senses.begin(), e.senses.end());
    }
    for (const Term &s : senses) by_synset[s].push_back(i);
  }
  std::vector<std::tuple<size_t, size_t, std::string>> links;
  for (const auto &[synset, members] : by_synset) {
    for (size_t x = 0; x < members.size(); ++x) {
      for (size_t y = x + 1; y < members.size(); ++y) {
        if (split.count(std::minmax(members[x], members[y]))) continue;
        links.emplace_back(members[x], members[y],
                           "shared synset " + synset.value());
      }
    }
  }
  std::sort(links.begin(), links.end());
  for (const auto &[a, b, reason] : links) unite(a, b, reason);
  for (const auto &[a, b] : overrides.merge) {
    auto ia = lookup(a), ib = lookup(b);
    if (ia && ib) unite(*ia, *ib, "override");
  }

  std::map<size_t, std::set<Term>> sources;
  for (const ValueCandidate &c : candidates) {
    sources[find(index.at(Normalize(c.label)))].insert(c.source);
  }
  for (size_t i = 0; i < keys.size(); ++i) {
    if (find(i) != i) continue;
    ValueConcept v;
    v.id = Term::Iri(std::string(ns) + CamelCase(display[i]));
    v.module = ValueModule::kFolk;
    v.label = display[i];
    v.provenance.assign(sources[i].begin(), sources[i].end());
    result.values.push_back(std::move(v));
  }
  return result;
}

}  // namespace folkgraph
