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

// IRIs of the schema vocabularies the pipeline reads and writes. Entity
// namespaces (frames, synsets, values, ...) come from the prefix table.

#ifndef FOLKGRAPH_VOCAB_H_
#define FOLKGRAPH_VOCAB_H_

#include <string>
#include <string_view>

#include "folkgraph/term.h"

namespace folkgraph::vocab {

inline constexpr std::string_view kRdfNs =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNs =
    "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kSkosNs =
    "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kProvNs = "http://www.w3.org/ns/prov#";
// Framester-style schema for lexical data.
inline constexpr std::string_view kFschemaNs =
    "https://w3id.org/framester/schema/";
// ConceptNet relations.
inline constexpr std::string_view kConceptRelNs =
    "http://etna.istc.cnr.it/framester2/conceptnet/5.7.0/r/";
// ValueNet core vocabulary.
inline constexpr std::string_view kVcoreNs =
    "https://w3id.org/spice/SON/ValueCore#";
// Sentence graph vocabulary.
inline constexpr std::string_view kFgNs = "https://w3id.org/folkgraph/ns#";

inline Term Iri(std::string_view ns, std::string_view local) {
  return Term::Iri(std::string(ns) + std::string(local));
}

inline Term Rdf(std::string_view local) { return Iri(kRdfNs, local); }
inline Term Rdfs(std::string_view local) { return Iri(kRdfsNs, local); }
inline Term Owl(std::string_view local) { return Iri(kOwlNs, local); }
inline Term Skos(std::string_view local) { return Iri(kSkosNs, local); }
inline Term Prov(std::string_view local) { return Iri(kProvNs, local); }
inline Term Fschema(std::string_view local) { return Iri(kFschemaNs, local); }
inline Term ConceptRel(std::string_view local) {
  return Iri(kConceptRelNs, local);
}
inline Term Vcore(std::string_view local) { return Iri(kVcoreNs, local); }
inline Term Fg(std::string_view local) { return Iri(kFgNs, local); }

inline Term Xsd(std::string_view local) { return Iri(kXsdNs, local); }
inline Term Integer(long value) {
  return Term::Literal(std::to_string(value), std::string(kXsdNs) + "integer");
}

// rdf:_n container membership property; n starts at 1.
inline Term RdfMember(int n) { return Rdf("_" + std::to_string(n)); }
// Returns n for rdf:_n, 0 otherwise.
int RdfMemberIndex(const Term &term);

}  // namespace folkgraph::vocab

#endif  // FOLKGRAPH_VOCAB_H_
