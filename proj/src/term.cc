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

#include "folkgraph/term.h"

#include <stdexcept>

namespace folkgraph {

bool IsAbsoluteIri(std::string_view iri) {
  size_t colon = iri.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  if (!alpha(iri[0])) return false;
  for (size_t i = 1; i < colon; ++i) {
    char c = iri[i];
    if (!alpha(c) && !(c >= '0' && c <= '9') && c != '+' && c != '-' &&
        c != '.') {
      return false;
    }
  }
  return true;
}

Term Term::Iri(std::string iri) {
  if (!IsAbsoluteIri(iri)) {
    throw std::invalid_argument("not an absolute IRI: " + iri);
  }
  return Term(Kind::kIri, std::move(iri), "", "");
}

Term Term::Literal(std::string lexical, std::string datatype,
                   std::string lang) {
  if (!lang.empty() && !datatype.empty()) {
    throw std::invalid_argument("literal cannot have both datatype and lang");
  }
  return Term(Kind::kLiteral, std::move(lexical), std::move(datatype),
              std::move(lang));
}

Term Term::Blank(std::string label) {
  if (label.empty()) throw std::invalid_argument("empty blank node label");
  return Term(Kind::kBlank, std::move(label), "", "");
}

std::string EscapeLiteral(std::string_view lexical) {
  std::string out;
  out.reserve(lexical.size());
  for (char c : lexical) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Term::ToNTriples() const {
  switch (kind_) {
    case Kind::kIri:
      return "<" + value_ + ">";
    case Kind::kBlank:
      return "_:" + value_;
    case Kind::kLiteral: {
      std::string out = "\"" + EscapeLiteral(value_) + "\"";
      if (!lang_.empty()) {
        out += "@" + lang_;
      } else if (!datatype_.empty()) {
        out += "^^<" + datatype_ + ">";
      }
      return out;
    }
  }
  return "";
}

std::string Triple::ToNTriples() const {
  return subject.ToNTriples() + " " + predicate.ToNTriples() + " " +
         object.ToNTriples() + " .";
}

void CheckTriple(const Triple &triple) {
  if (triple.subject.is_literal()) {
    throw std::invalid_argument("literal in subject position: " +
                                triple.subject.ToNTriples());
  }
  if (!triple.predicate.is_iri()) {
    throw std::invalid_argument("predicate must be an IRI: " +
                                triple.predicate.ToNTriples());
  }
}

}  // namespace folkgraph
