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

#include "folkgraph/store.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "folkgraph/errors.h"

namespace folkgraph {

namespace {

using IdTriple = std::array<uint32_t, 3>;

// Range of entries in a sorted index whose first `n` components equal
// those of `key`.
std::pair<std::vector<IdTriple>::const_iterator,
          std::vector<IdTriple>::const_iterator>
PrefixRange(const std::vector<IdTriple> &index, const IdTriple &key, int n) {
  auto less = [n](const IdTriple &a, const IdTriple &b) {
    for (int i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  };
  return std::equal_range(index.begin(), index.end(), key, less);
}

}  // namespace

struct Store::CompiledPattern {
  // For each position either a constant id or a variable slot.
  std::array<std::optional<TermId>, 3> constant;
  std::array<int, 3> var = {-1, -1, -1};
  const Index *index = nullptr;
};

Store::Store() = default;
Store::~Store() = default;
Store::Store(Store &&) noexcept = default;
Store &Store::operator=(Store &&) noexcept = default;

void Store::Index::Build(std::vector<IdTriple> triples) {
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  spo = triples;
  pos.clear();
  osp.clear();
  pos.reserve(triples.size());
  osp.reserve(triples.size());
  for (const IdTriple &t : triples) {
    pos.push_back({t[1], t[2], t[0]});
    osp.push_back({t[2], t[0], t[1]});
  }
  std::sort(pos.begin(), pos.end());
  std::sort(osp.begin(), osp.end());
}

void Store::CheckLoadPhase() const {
  if (frozen_) throw std::logic_error("store is frozen");
}

void Store::CheckFrozen() const {
  if (!frozen_) throw std::logic_error("store must be frozen before queries");
}

const Graph &Store::Load(std::string_view document, RdfFormat format,
                         const Term &graph_name, std::string role,
                         const PrefixTable *predeclared) {
  CheckLoadPhase();
  if (HasGraph(graph_name)) {
    throw InputError("duplicate graph name: " + graph_name.value());
  }
  std::vector<Triple> triples = ParseRdf(document, format, predeclared);
  const std::string scope = "d" + std::to_string(documents_loaded_++) + "_";
  Graph graph(graph_name);
  for (Triple &t : triples) {
    if (t.subject.is_blank()) t.subject = Term::Blank(scope + t.subject.value());
    if (t.object.is_blank()) t.object = Term::Blank(scope + t.object.value());
    graph.Insert(std::move(t));
  }
  return AddGraph(std::move(graph), std::move(role));
}

const Graph &Store::AddGraph(Graph graph, std::string role) {
  CheckLoadPhase();
  if (!graph.name().is_iri()) {
    throw InputError("graph name must be an IRI: " + graph.name().ToNTriples());
  }
  if (HasGraph(graph.name())) {
    throw InputError("duplicate graph name: " + graph.name().value());
  }
  auto entry = std::make_unique<Entry>();
  entry->graph = std::move(graph);
  entry->role = std::move(role);
  Term name = entry->graph.name();
  const Graph &ref = entry->graph;
  graphs_.emplace(std::move(name), std::move(entry));
  return ref;
}

void Store::Insert(const Term &graph_name, Triple triple) {
  CheckLoadPhase();
  auto it = graphs_.find(graph_name);
  if (it == graphs_.end()) {
    throw InputError("unknown graph: " + graph_name.value());
  }
  it->second->graph.Insert(std::move(triple));
}

Store::TermId Store::Intern(const Term &term) {
  auto [it, inserted] = ids_.emplace(term, static_cast<TermId>(terms_.size()));
  if (inserted) terms_.push_back(term);
  return it->second;
}

void Store::Freeze() {
  if (frozen_) return;
  // Intern in sorted term order so ids are stable for a given content.
  std::set<Term> all;
  for (const auto &[name, entry] : graphs_) {
    for (const Triple &t : entry->graph) {
      all.insert(t.subject);
      all.insert(t.predicate);
      all.insert(t.object);
    }
  }
  for (const Term &t : all) Intern(t);
  std::vector<IdTriple> everything;
  for (auto &[name, entry] : graphs_) {
    std::vector<IdTriple> triples;
    triples.reserve(entry->graph.size());
    for (const Triple &t : entry->graph) {
      triples.push_back({ids_.at(t.subject), ids_.at(t.predicate),
                         ids_.at(t.object)});
    }
    everything.insert(everything.end(), triples.begin(), triples.end());
    entry->index.Build(std::move(triples));
  }
  union_index_.Build(std::move(everything));
  frozen_ = true;
}

bool Store::HasGraph(const Term &name) const { return graphs_.count(name) > 0; }

const Graph &Store::GetGraph(const Term &name) const {
  auto it = graphs_.find(name);
  if (it == graphs_.end()) throw InputError("unknown graph: " + name.value());
  return it->second->graph;
}

const std::string &Store::GraphRole(const Term &name) const {
  auto it = graphs_.find(name);
  if (it == graphs_.end()) throw InputError("unknown graph: " + name.value());
  return it->second->role;
}

std::vector<Term> Store::GraphNames() const {
  std::vector<Term> names;
  for (const auto &[name, entry] : graphs_) names.push_back(name);
  return names;
}

std::vector<Term> Store::GraphsWithRole(std::string_view role) const {
  std::vector<Term> names;
  for (const auto &[name, entry] : graphs_) {
    if (entry->role == role) names.push_back(name);
  }
  return names;
}

size_t Store::TotalTriples() const {
  size_t n = 0;
  for (const auto &[name, entry] : graphs_) n += entry->graph.size();
  return n;
}

std::optional<Store::TermId> Store::FindId(const Term &term) const {
  auto it = ids_.find(term);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const Store::Index &Store::IndexFor(const std::optional<Term> &graph) const {
  if (!graph) return union_index_;
  auto it = graphs_.find(*graph);
  if (it == graphs_.end()) {
    throw InputError("unknown graph scope: " + graph->value());
  }
  return it->second->index;
}

template <typename Fn>
void Store::Scan(const Index &index, std::optional<TermId> s,
                 std::optional<TermId> p, std::optional<TermId> o,
                 Fn fn) const {
  auto emit_range = [&](const std::vector<IdTriple> &v, IdTriple key, int n,
                        int si, int pi, int oi) {
    auto [begin, end] = PrefixRange(v, key, n);
    for (auto it = begin; it != end; ++it) {
      const IdTriple &e = *it;
      fn(e[si], e[pi], e[oi]);
    }
  };
  if (s && p) {
    emit_range(index.spo, {*s, *p, o.value_or(0)}, o ? 3 : 2, 0, 1, 2);
  } else if (s && o) {
    emit_range(index.osp, {*o, *s, 0}, 2, 1, 2, 0);
  } else if (s) {
    emit_range(index.spo, {*s, 0, 0}, 1, 0, 1, 2);
  } else if (p) {
    emit_range(index.pos, {*p, o.value_or(0), 0}, o ? 2 : 1, 2, 0, 1);
  } else if (o) {
    emit_range(index.osp, {*o, 0, 0}, 1, 1, 2, 0);
  } else {
    for (const IdTriple &e : index.spo) fn(e[0], e[1], e[2]);
  }
}

std::vector<Triple> Store::Match(const Pattern &pattern) const {
  std::vector<Triple> out;
  for (const Binding &b : MatchBGP({pattern})) {
    auto resolve = [&b](const PatternTerm &pt) {
      if (const Term *t = std::get_if<Term>(&pt)) return *t;
      return b.at(std::get<Variable>(pt).name);
    };
    out.push_back({resolve(pattern.subject), resolve(pattern.predicate),
                   resolve(pattern.object)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Store::Contains(const Triple &triple,
                     const std::optional<Term> &graph) const {
  CheckFrozen();
  const Index &index = IndexFor(graph);
  auto s = FindId(triple.subject), p = FindId(triple.predicate),
       o = FindId(triple.object);
  if (!s || !p || !o) return false;
  auto [begin, end] = PrefixRange(index.spo, {*s, *p, *o}, 3);
  return begin != end;
}

void Store::Join(const std::vector<CompiledPattern> &patterns,
                 std::vector<bool> &done,
                 std::vector<std::optional<TermId>> &vars,
                 std::vector<std::vector<TermId>> *out) const {
  // Pick the pending pattern with the most bound positions.
  int best = -1, best_bound = -1;
  for (size_t i = 0; i < patterns.size(); ++i) {
    if (done[i]) continue;
    int bound = 0;
    for (int k = 0; k < 3; ++k) {
      const CompiledPattern &cp = patterns[i];
      if (cp.constant[k] || (cp.var[k] >= 0 && vars[cp.var[k]])) ++bound;
    }
    if (bound > best_bound) {
      best = static_cast<int>(i);
      best_bound = bound;
    }
  }
  if (best < 0) {
    std::vector<TermId> row;
    row.reserve(vars.size());
    for (const auto &v : vars) row.push_back(*v);
    out->push_back(std::move(row));
    return;
  }

  const CompiledPattern &cp = patterns[best];
  std::array<std::optional<TermId>, 3> key;
  for (int k = 0; k < 3; ++k) {
    key[k] = cp.constant[k] ? cp.constant[k]
             : cp.var[k] >= 0 ? vars[cp.var[k]]
                              : std::nullopt;
  }
  done[best] = true;
  Scan(*cp.index, key[0], key[1], key[2],
       [&](TermId s, TermId p, TermId o) {
         const std::array<TermId, 3> values = {s, p, o};
         std::vector<int> newly_bound;
         bool ok = true;
         for (int k = 0; k < 3 && ok; ++k) {
           int v = cp.var[k];
           if (v < 0) continue;
           if (vars[v]) {
             ok = *vars[v] == values[k];
           } else {
             vars[v] = values[k];
             newly_bound.push_back(v);
           }
         }
         if (ok) Join(patterns, done, vars, out);
         for (int v : newly_bound) vars[v].reset();
       });
  done[best] = false;
}

std::vector<Binding> Store::MatchBGP(
    const std::vector<Pattern> &patterns) const {
  CheckFrozen();
  if (patterns.empty()) throw std::invalid_argument("empty pattern list");

  std::vector<std::string> var_names;
  auto slot = [&var_names](const std::string &name) {
    auto it = std::find(var_names.begin(), var_names.end(), name);
    if (it != var_names.end()) return static_cast<int>(it - var_names.begin());
    var_names.push_back(name);
    return static_cast<int>(var_names.size() - 1);
  };

  bool satisfiable = true;
  std::vector<CompiledPattern> compiled;
  for (const Pattern &pattern : patterns) {
    CompiledPattern cp;
    cp.index = &IndexFor(pattern.graph);
    const PatternTerm *positions[3] = {&pattern.subject, &pattern.predicate,
                                       &pattern.object};
    for (int k = 0; k < 3; ++k) {
      if (const Variable *v = std::get_if<Variable>(positions[k])) {
        cp.var[k] = slot(v->name);
      } else {
        auto id = FindId(std::get<Term>(*positions[k]));
        if (!id) satisfiable = false;
        cp.constant[k] = id ? *id : 0;
      }
    }
    compiled.push_back(cp);
  }
  if (!satisfiable) return {};

  std::vector<std::vector<TermId>> rows;
  std::vector<bool> done(compiled.size(), false);
  std::vector<std::optional<TermId>> vars(var_names.size());
  Join(compiled, done, vars, &rows);

  std::vector<Binding> result;
  result.reserve(rows.size());
  for (const auto &row : rows) {
    Binding b;
    for (size_t i = 0; i < var_names.size(); ++i) b[var_names[i]] = terms_[row[i]];
    result.push_back(std::move(b));
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

}  // namespace folkgraph
