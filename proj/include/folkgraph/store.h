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

#ifndef FOLKGRAPH_STORE_H_
#define FOLKGRAPH_STORE_H_

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "folkgraph/graph.h"
#include "folkgraph/prefix_table.h"
#include "folkgraph/rdf_io.h"
#include "folkgraph/term.h"

namespace folkgraph {

// Variable name -> bound term. All bindings of one query share the same
// key set, so std::map ordering gives the "sorted by bound terms" order.
using Binding = std::map<std::string, Term>;

// Indexed quad store. Graphs are added during a load phase; Freeze()
// builds the SPO/POS/OSP indexes, after which the store is immutable and
// can be shared by concurrent readers.
class Store {
 public:
  Store();
  ~Store();
  Store(Store &&) noexcept;
  Store &operator=(Store &&) noexcept;

  // Parses a document and registers it as a named graph. Blank node labels
  // are scoped to the document. Throws ParseError, or InputError if the
  // graph name is already registered.
  const Graph &Load(std::string_view document, RdfFormat format,
                    const Term &graph_name, std::string role = "",
                    const PrefixTable *predeclared = nullptr);

  // Registers an already built graph. Throws InputError on duplicates.
  const Graph &AddGraph(Graph graph, std::string role = "");

  // Adds a triple to an existing graph (load phase only).
  void Insert(const Term &graph_name, Triple triple);

  void Freeze();
  bool frozen() const { return frozen_; }

  bool HasGraph(const Term &name) const;
  const Graph &GetGraph(const Term &name) const;
  const std::string &GraphRole(const Term &name) const;
  // Registered graph names, sorted.
  std::vector<Term> GraphNames() const;
  std::vector<Term> GraphsWithRole(std::string_view role) const;
  size_t TotalTriples() const;

  // All triples matching a single pattern (variables act as wildcards,
  // repeated variables must bind equal terms). Sorted, deduplicated.
  std::vector<Triple> Match(const Pattern &pattern) const;

  // Direct membership, across all graphs unless `graph` is given.
  bool Contains(const Triple &triple,
                const std::optional<Term> &graph = std::nullopt) const;

  // Basic graph pattern evaluation. Shared variable names are joins.
  // Result is sorted by bound terms with duplicates removed.
  // Throws std::invalid_argument for an empty pattern list and InputError
  // for an unknown graph scope.
  std::vector<Binding> MatchBGP(const std::vector<Pattern> &patterns) const;

 private:
  using TermId = uint32_t;
  using IdTriple = std::array<TermId, 3>;

  struct Index {
    std::vector<IdTriple> spo;  // (s, p, o)
    std::vector<IdTriple> pos;  // (p, o, s)
    std::vector<IdTriple> osp;  // (o, s, p)
    void Build(std::vector<IdTriple> triples);
  };

  struct Entry {
    Graph graph;
    std::string role;
    Index index;
  };

  struct CompiledPattern;

  void CheckLoadPhase() const;
  void CheckFrozen() const;
  std::optional<TermId> FindId(const Term &term) const;
  TermId Intern(const Term &term);
  const Index &IndexFor(const std::optional<Term> &graph) const;

  // Calls `fn` for each id triple (s, p, o) matching the bound positions.
  template <typename Fn>
  void Scan(const Index &index, std::optional<TermId> s,
            std::optional<TermId> p, std::optional<TermId> o, Fn fn) const;

  void Join(const std::vector<CompiledPattern> &patterns,
            std::vector<bool> &done, std::vector<std::optional<TermId>> &vars,
            std::vector<std::vector<TermId>> *out) const;

  std::map<Term, std::unique_ptr<Entry>> graphs_;
  std::vector<Term> terms_;
  std::unordered_map<Term, TermId, TermHash> ids_;
  Index union_index_;
  bool frozen_ = false;
  int documents_loaded_ = 0;
};

}  // namespace folkgraph

#endif  // FOLKGRAPH_STORE_H_
