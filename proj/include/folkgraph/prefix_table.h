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

#ifndef FOLKGRAPH_PREFIX_TABLE_H_
#define FOLKGRAPH_PREFIX_TABLE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folkgraph/term.h"

namespace folkgraph {

// Prefix to namespace IRI mapping used to read and write compact names
// such as "fs:RunRisk". Several prefixes may share one namespace; the
// first declared one wins when compacting.
class PrefixTable {
 public:
  struct Entry {
    std::string prefix;
    std::string ns;
  };

  PrefixTable() = default;

  // Parses "prefix<TAB or spaces>namespace" lines; '#' starts a comment.
  static PrefixTable Parse(std::string_view text);
  static PrefixTable Load(const std::string &path);

  // Adds or replaces a mapping.
  void Add(std::string prefix, std::string ns);

  std::optional<std::string> Lookup(std::string_view prefix) const;

  // Expands "pfx:local" if the prefix is known, accepts "<iri>" and
  // absolute IRIs as-is. Throws InputError otherwise.
  std::string Expand(std::string_view name) const;
  Term ExpandIri(std::string_view name) const { return Term::Iri(Expand(name)); }

  // Compact "pfx:local" form, or nullopt if no prefix applies or the local
  // part is not a valid Turtle local name.
  std::optional<std::string> Compact(std::string_view iri) const;

  // Compact form if possible, otherwise "<iri>". Non-IRI terms are
  // returned in N-Triples form.
  std::string Display(const Term &term) const;

  const std::vector<Entry> &entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

// True if the string can be used unescaped as the local part of a
// prefixed name.
bool IsValidLocalName(std::string_view local);

}  // namespace folkgraph

#endif  // FOLKGRAPH_PREFIX_TABLE_H_
