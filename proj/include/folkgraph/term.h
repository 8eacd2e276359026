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

#ifndef FOLKGRAPH_TERM_H_
#define FOLKGRAPH_TERM_H_

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace folkgraph {

// An RDF term: IRI, literal or blank node.
class Term {
 public:
  enum class Kind { kIri = 0, kLiteral = 1, kBlank = 2 };

  Term() = default;

  // IRIs must be absolute, i.e. contain a scheme separator.
  static Term Iri(std::string iri);
  static Term Literal(std::string lexical, std::string datatype = "",
                      std::string lang = "");
  static Term Blank(std::string label);

  Kind kind() const { return kind_; }
  const std::string &value() const { return value_; }
  const std::string &datatype() const { return datatype_; }
  const std::string &lang() const { return lang_; }

  bool is_iri() const { return kind_ == Kind::kIri; }
  bool is_literal() const { return kind_ == Kind::kLiteral; }
  bool is_blank() const { return kind_ == Kind::kBlank; }

  // N-Triples surface form, e.g. <http://x> or "a"@en or _:b0.
  std::string ToNTriples() const;

  auto operator<=>(const Term &other) const = default;
  bool operator==(const Term &other) const = default;

 private:
  Term(Kind kind, std::string value, std::string datatype, std::string lang)
      : kind_(kind),
        value_(std::move(value)),
        datatype_(std::move(datatype)),
        lang_(std::move(lang)) {}

  Kind kind_ = Kind::kIri;
  std::string value_;
  std::string datatype_;  // literals only; empty means xsd:string
  std::string lang_;      // literals only
};

// Returns true if the string looks like an absolute IRI (has "scheme:").
bool IsAbsoluteIri(std::string_view iri);

// Escapes a literal lexical form for N-Triples output.
std::string EscapeLiteral(std::string_view lexical);

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple &other) const = default;
  bool operator==(const Triple &other) const = default;

  // One N-Triples statement without the trailing newline.
  std::string ToNTriples() const;
};

// Validates triple position constraints; throws std::invalid_argument.
void CheckTriple(const Triple &triple);

struct Variable {
  std::string name;
  auto operator<=>(const Variable &other) const = default;
  bool operator==(const Variable &other) const = default;
};

using PatternTerm = std::variant<Term, Variable>;

// A triple pattern, optionally restricted to one named graph.
struct Pattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
  std::optional<Term> graph;
};

inline Variable Var(std::string name) { return Variable{std::move(name)}; }

struct TermHash {
  size_t operator()(const Term &term) const {
    size_t h = std::hash<std::string>()(term.value());
    h ^= std::hash<std::string>()(term.datatype()) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
    h ^= std::hash<std::string>()(term.lang()) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
    return h * 31 + static_cast<size_t>(term.kind());
  }
};

}  // namespace folkgraph

#endif  // FOLKGRAPH_TERM_H_
