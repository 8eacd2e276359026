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

#include "folkgraph/prefix_table.h"

#include <sstream>

#include "folkgraph/errors.h"
#include "folkgraph/rdf_io.h"

namespace folkgraph {

namespace {

bool IsLocalChar(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.' ||
         c >= 0x80;
}

}  // namespace

bool IsValidLocalName(std::string_view local) {
  if (local.empty()) return true;
  if (local.front() == '-' || local.front() == '.') return false;
  if (local.back() == '.') return false;
  for (unsigned char c : local) {
    if (!IsLocalChar(c)) return false;
  }
  return true;
}

PrefixTable PrefixTable::Parse(std::string_view text) {
  PrefixTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // Namespaces often end in '#', so comments must start the line.
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream fields(line);
    std::string prefix, ns;
    fields >> prefix >> ns;
    if (prefix.empty() || ns.empty()) {
      throw InputError("prefix table line " + std::to_string(lineno) +
                       ": expected 'prefix namespace'");
    }
    if (prefix.back() == ':') prefix.pop_back();
    if (ns.size() >= 2 && ns.front() == '<' && ns.back() == '>') {
      ns = ns.substr(1, ns.size() - 2);
    }
    if (!IsAbsoluteIri(ns)) {
      throw InputError("prefix table line " + std::to_string(lineno) +
                       ": namespace is not an absolute IRI: " + ns);
    }
    table.Add(prefix, ns);
  }
  return table;
}

PrefixTable PrefixTable::Load(const std::string &path) {
  return Parse(ReadFile(path));
}

void PrefixTable::Add(std::string prefix, std::string ns) {
  for (Entry &e : entries_) {
    if (e.prefix == prefix) {
      e.ns = std::move(ns);
      return;
    }
  }
  entries_.push_back({std::move(prefix), std::move(ns)});
}

std::optional<std::string> PrefixTable::Lookup(std::string_view prefix) const {
  for (const Entry &e : entries_) {
    if (e.prefix == prefix) return e.ns;
  }
  return std::nullopt;
}

std::string PrefixTable::Expand(std::string_view name) const {
  if (name.size() >= 2 && name.front() == '<' && name.back() == '>') {
    return std::string(name.substr(1, name.size() - 2));
  }
  size_t colon = name.find(':');
  if (colon != std::string_view::npos) {
    if (auto ns = Lookup(name.substr(0, colon))) {
      return *ns + std::string(name.substr(colon + 1));
    }
    if (IsAbsoluteIri(name) && name.substr(colon + 1).starts_with("//")) {
      return std::string(name);
    }
    if (name.starts_with("urn:")) return std::string(name);
  }
  throw InputError("cannot expand name (unknown prefix?): " +
                   std::string(name));
}

std::optional<std::string> PrefixTable::Compact(std::string_view iri) const {
  const Entry *best = nullptr;
  for (const Entry &e : entries_) {
    if (iri.size() > e.ns.size() && iri.starts_with(e.ns) &&
        (best == nullptr || e.ns.size() > best->ns.size())) {
      best = &e;
    }
  }
  if (best == nullptr) return std::nullopt;
  std::string_view local = iri.substr(best->ns.size());
  if (!IsValidLocalName(local)) return std::nullopt;
  return best->prefix + ":" + std::string(local);
}

std::string PrefixTable::Display(const Term &term) const {
  if (term.is_iri()) {
    if (auto c = Compact(term.value())) return *c;
  }
  return term.ToNTriples();
}

}  // namespace folkgraph
