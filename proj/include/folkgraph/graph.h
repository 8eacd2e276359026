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

#ifndef FOLKGRAPH_GRAPH_H_
#define FOLKGRAPH_GRAPH_H_

#include <set>
#include <vector>

#include "folkgraph/term.h"

namespace folkgraph {

// A named set of triples. Inserting a triple twice is a no-op.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Term name) : name_(std::move(name)) {}

  const Term &name() const { return name_; }
  void set_name(Term name) { name_ = std::move(name); }

  // Returns false if the triple was already present.
  bool Insert(Triple triple);
  bool Insert(Term s, Term p, Term o) {
    return Insert(Triple{std::move(s), std::move(p), std::move(o)});
  }
  void InsertAll(const std::vector<Triple> &triples);

  bool Contains(const Triple &triple) const {
    return triples_.count(triple) > 0;
  }
  size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  const std::set<Triple> &triples() const { return triples_; }
  auto begin() const { return triples_.begin(); }
  auto end() const { return triples_.end(); }

 private:
  Term name_;
  std::set<Triple> triples_;
};

}  // namespace folkgraph

#endif  // FOLKGRAPH_GRAPH_H_
