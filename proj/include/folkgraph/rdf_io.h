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

#ifndef FOLKGRAPH_RDF_IO_H_
#define FOLKGRAPH_RDF_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "folkgraph/graph.h"
#include "folkgraph/prefix_table.h"
#include "folkgraph/term.h"

namespace folkgraph {

// Supported document formats. The Turtle reader accepts a subset:
// @prefix/PREFIX directives, prefixed names, "a", predicate lists (;) and
// object lists (,). Collections, [] blank node property lists, quoted
// triples and @base are rejected.
enum class RdfFormat { kNTriples, kTurtle };

// Accepts "ntriples", "nt", "turtle", "ttl".
RdfFormat ParseRdfFormat(std::string_view name);
const char *RdfFormatName(RdfFormat format);

// Parses a document into triples in document order. Prefixes in
// `predeclared` are visible to Turtle documents without an explicit
// @prefix line. Throws ParseError.
std::vector<Triple> ParseRdf(std::string_view document, RdfFormat format,
                             const PrefixTable *predeclared = nullptr);

Graph ParseGraph(std::string_view document, RdfFormat format, Term name,
                 const PrefixTable *predeclared = nullptr);

// N-Triples output has one statement per line, sorted lexicographically.
// Turtle output groups by subject, in the same order, and uses `prefixes`
// for compact names where possible.
std::string Serialize(const Graph &graph, RdfFormat format,
                      const PrefixTable *prefixes = nullptr);

std::string ReadFile(const std::string &path);
void WriteFile(const std::string &path, std::string_view contents);

}  // namespace folkgraph

#endif  // FOLKGRAPH_RDF_IO_H_
