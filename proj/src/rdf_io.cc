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

#include "folkgraph/rdf_io.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "folkgraph/errors.h"

namespace folkgraph {

namespace {

constexpr char kRdfType[] = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
constexpr char kXsd[] = "http://www.w3.org/2001/XMLSchema#";

void AppendUtf8(std::string *out, uint32_t cp) {
  if (cp < 0x80) {
    *out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    *out += static_cast<char>(0xC0 | (cp >> 6));
    *out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    *out += static_cast<char>(0xE0 | (cp >> 12));
    *out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    *out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    *out += static_cast<char>(0xF0 | (cp >> 18));
    *out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    *out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    *out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Character cursor with line/column tracking shared by both grammars.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek(size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool LookingAt(std::string_view s) const {
    return text_.substr(pos_).starts_with(s);
  }

  char Next() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void Advance(size_t n) {
    for (size_t i = 0; i < n && !AtEnd(); ++i) Next();
  }

  [[noreturn]] void Fail(const std::string &message) const {
    throw ParseError(message, line_, column_);
  }

  void Expect(char c) {
    if (Peek() != c || AtEnd()) {
      Fail(std::string("expected '") + c + "'" + Found());
    }
    Next();
  }

  std::string Found() const {
    if (AtEnd()) return ", found end of input";
    return std::string(", found '") + Peek() + "'";
  }

  // Skips whitespace and, if `comments`, '#' comments. When `newlines` is
  // false stops at a newline (N-Triples is line based).
  void SkipSpace(bool newlines) {
    while (!AtEnd()) {
      char c = Peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        Next();
      } else if (c == '\n' && newlines) {
        Next();
      } else if (c == '#') {
        while (!AtEnd() && Peek() != '\n') Next();
      } else {
        break;
      }
    }
  }

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

uint32_t ReadHex(Cursor *in, int digits) {
  uint32_t cp = 0;
  for (int i = 0; i < digits; ++i) {
    char c = in->Peek();
    int v;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      v = c - 'A' + 10;
    } else {
      in->Fail("bad hex digit in escape" + in->Found());
    }
    in->Next();
    cp = cp * 16 + v;
  }
  return cp;
}

std::string ReadIriRef(Cursor *in) {
  in->Expect('<');
  std::string iri;
  while (true) {
    if (in->AtEnd()) in->Fail("unterminated IRI");
    char c = in->Peek();
    if (c == '>') break;
    if (c == '\\') {
      in->Next();
      char e = in->Peek();
      in->Next();
      if (e == 'u') {
        AppendUtf8(&iri, ReadHex(in, 4));
      } else if (e == 'U') {
        AppendUtf8(&iri, ReadHex(in, 8));
      } else {
        in->Fail("bad escape in IRI");
      }
      continue;
    }
    if (c == ' ' || c == '\n' || c == '<' || c == '"' || c == '{' ||
        c == '}' || c == '|' || c == '^' || c == '`') {
      in->Fail(std::string("illegal character in IRI: '") + c + "'");
    }
    iri += in->Next();
  }
  in->Next();
  if (!IsAbsoluteIri(iri)) in->Fail("relative IRI not supported: <" + iri + ">");
  return iri;
}

std::string ReadBlankLabel(Cursor *in) {
  if (!in->LookingAt("_:")) in->Fail("expected blank node");
  in->Advance(2);
  std::string label;
  while (!in->AtEnd()) {
    unsigned char c = in->Peek();
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
        (c >= '0' && c <= '9') || c == '_' || c == '-' || c >= 0x80 ||
        (c == '.' && in->Peek(1) != ' ' && in->Peek(1) != '\n' &&
         in->Peek(1) != '\t' && in->Peek(1) != '\r' && in->Peek(1) != '\0')) {
      label += in->Next();
    } else {
      break;
    }
  }
  if (label.empty()) in->Fail("empty blank node label");
  return label;
}

// Reads a quoted string; supports long (triple quoted) strings when
// `allow_long` is set.
std::string ReadString(Cursor *in, bool allow_long) {
  char quote = in->Peek();
  if (quote != '"' && (quote != '\'' || !allow_long)) {
    in->Fail("expected string literal" + in->Found());
  }
  bool is_long = allow_long && in->Peek(1) == quote && in->Peek(2) == quote;
  in->Advance(is_long ? 3 : 1);
  std::string value;
  while (true) {
    if (in->AtEnd()) in->Fail("unterminated string literal");
    char c = in->Peek();
    if (is_long) {
      if (c == quote && in->Peek(1) == quote && in->Peek(2) == quote) {
        in->Advance(3);
        break;
      }
    } else if (c == quote) {
      in->Next();
      break;
    } else if (c == '\n' || c == '\r') {
      in->Fail("newline in string literal");
    }
    if (c == '\\') {
      in->Next();
      char e = in->Next();
      switch (e) {
        case 't': value += '\t'; break;
        case 'b': value += '\b'; break;
        case 'n': value += '\n'; break;
        case 'r': value += '\r'; break;
        case 'f': value += '\f'; break;
        case '"': value += '"'; break;
        case '\'': value += '\''; break;
        case '\\': value += '\\'; break;
        case 'u': AppendUtf8(&value, ReadHex(in, 4)); break;
        case 'U': AppendUtf8(&value, ReadHex(in, 8)); break;
        default: in->Fail(std::string("bad string escape '\\") + e + "'");
      }
      continue;
    }
    value += in->Next();
  }
  return value;
}

std::string ReadLangTag(Cursor *in) {
  in->Expect('@');
  std::string tag;
  while (!in->AtEnd()) {
    char c = in->Peek();
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
        (c >= '0' && c <= '9' && !tag.empty()) || (c == '-' && !tag.empty())) {
      tag += in->Next();
    } else {
      break;
    }
  }
  if (tag.empty()) in->Fail("empty language tag");
  return tag;
}

Term MakeLiteral(std::string lexical, std::string datatype, std::string lang) {
  if (datatype == std::string(kXsd) + "string") datatype.clear();
  return Term::Literal(std::move(lexical), std::move(datatype),
                       std::move(lang));
}

// ---------------------------------------------------------------------------
// N-Triples

class NTriplesParser {
 public:
  explicit NTriplesParser(std::string_view text) : in_(text) {}

  std::vector<Triple> Parse() {
    std::vector<Triple> triples;
    while (true) {
      in_.SkipSpace(true);
      if (in_.AtEnd()) break;
      Term s = ReadSubject();
      in_.SkipSpace(false);
      Term p = Term::Iri(ReadIriRef(&in_));
      in_.SkipSpace(false);
      Term o = ReadObject();
      in_.SkipSpace(false);
      in_.Expect('.');
      in_.SkipSpace(false);
      if (!in_.AtEnd() && in_.Peek() != '\n') {
        in_.Fail("trailing content after statement" + in_.Found());
      }
      triples.push_back({std::move(s), std::move(p), std::move(o)});
    }
    return triples;
  }

 private:
  Term ReadSubject() {
    if (in_.Peek() == '<') return Term::Iri(ReadIriRef(&in_));
    if (in_.Peek() == '_') return Term::Blank(ReadBlankLabel(&in_));
    in_.Fail("expected subject IRI or blank node" + in_.Found());
  }

  Term ReadObject() {
    char c = in_.Peek();
    if (c == '<') return Term::Iri(ReadIriRef(&in_));
    if (c == '_') return Term::Blank(ReadBlankLabel(&in_));
    if (c == '"') {
      std::string lexical = ReadString(&in_, false);
      std::string datatype, lang;
      if (in_.Peek() == '@') {
        lang = ReadLangTag(&in_);
      } else if (in_.LookingAt("^^")) {
        in_.Advance(2);
        datatype = ReadIriRef(&in_);
      }
      return MakeLiteral(std::move(lexical), std::move(datatype),
                         std::move(lang));
    }
    in_.Fail("expected object" + in_.Found());
  }

  Cursor in_;
};

// ---------------------------------------------------------------------------
// Turtle subset

class TurtleParser {
 public:
  TurtleParser(std::string_view text, const PrefixTable *predeclared)
      : in_(text) {
    if (predeclared != nullptr) {
      for (const auto &e : predeclared->entries()) prefixes_[e.prefix] = e.ns;
    }
  }

  std::vector<Triple> Parse() {
    while (true) {
      in_.SkipSpace(true);
      if (in_.AtEnd()) break;
      if (in_.LookingAt("@prefix")) {
        in_.Advance(7);
        ReadPrefixDecl(true);
      } else if (KeywordAhead("PREFIX")) {
        in_.Advance(6);
        ReadPrefixDecl(false);
      } else if (in_.LookingAt("@base") || KeywordAhead("BASE")) {
        in_.Fail("@base is not supported");
      } else {
        ReadTriples();
        in_.SkipSpace(true);
        in_.Expect('.');
      }
    }
    return std::move(triples_);
  }

 private:
  bool KeywordAhead(std::string_view kw) const {
    for (size_t i = 0; i < kw.size(); ++i) {
      char c = in_.Peek(i);
      if (c >= 'a' && c <= 'z') c -= 32;
      if (c != kw[i]) return false;
    }
    char after = in_.Peek(kw.size());
    return after == ' ' || after == '\t';
  }

  void ReadPrefixDecl(bool at_form) {
    in_.SkipSpace(true);
    std::string prefix;
    while (!in_.AtEnd() && in_.Peek() != ':') {
      char c = in_.Peek();
      if (c == ' ' || c == '\n' || c == '\t') in_.Fail("bad prefix name");
      prefix += in_.Next();
    }
    in_.Expect(':');
    in_.SkipSpace(true);
    prefixes_[prefix] = ReadIriRef(&in_);
    if (at_form) {
      in_.SkipSpace(true);
      in_.Expect('.');
    }
  }

  void ReadTriples() {
    Term subject = ReadSubject();
    in_.SkipSpace(true);
    while (true) {
      Term predicate = ReadVerb();
      while (true) {
        in_.SkipSpace(true);
        Term object = ReadObject();
        triples_.push_back({subject, predicate, std::move(object)});
        in_.SkipSpace(true);
        if (in_.Peek() != ',') break;
        in_.Next();
      }
      if (in_.Peek() != ';') break;
      // One or more ';' may precede the next predicate or the final '.'.
      while (in_.Peek() == ';') {
        in_.Next();
        in_.SkipSpace(true);
      }
      if (in_.Peek() == '.' || in_.AtEnd()) break;
    }
  }

  Term ReadSubject() {
    char c = in_.Peek();
    if (c == '[') in_.Fail("blank node property lists are not supported");
    if (c == '(') in_.Fail("collections are not supported");
    if (in_.LookingAt("<<")) in_.Fail("quoted triples are not supported");
    if (in_.LookingAt("_:")) return Term::Blank(ReadBlankLabel(&in_));
    if (c == '"' || c == '\'') in_.Fail("literal in subject position");
    return ReadIri();
  }

  Term ReadVerb() {
    if (in_.Peek() == 'a') {
      char next = in_.Peek(1);
      if (next == ' ' || next == '\t' || next == '\n' || next == '\r' ||
          next == '<' || next == '"') {
        in_.Next();
        in_.SkipSpace(true);
        return Term::Iri(kRdfType);
      }
    }
    if (in_.LookingAt("_:")) in_.Fail("blank node in predicate position");
    Term p = ReadIri();
    in_.SkipSpace(true);
    return p;
  }

  Term ReadObject() {
    char c = in_.Peek();
    if (c == '[') in_.Fail("blank node property lists are not supported");
    if (c == '(') in_.Fail("collections are not supported");
    if (in_.LookingAt("<<")) in_.Fail("quoted triples are not supported");
    if (in_.LookingAt("_:")) return Term::Blank(ReadBlankLabel(&in_));
    if (c == '"' || c == '\'') {
      std::string lexical = ReadString(&in_, true);
      std::string datatype, lang;
      if (in_.Peek() == '@') {
        lang = ReadLangTag(&in_);
      } else if (in_.LookingAt("^^")) {
        in_.Advance(2);
        datatype = ReadIri().value();
      }
      return MakeLiteral(std::move(lexical), std::move(datatype),
                         std::move(lang));
    }
    if (c == '+' || c == '-' || (c >= '0' && c <= '9') ||
        (c == '.' && in_.Peek(1) >= '0' && in_.Peek(1) <= '9')) {
      return ReadNumber();
    }
    if (BooleanAhead("true")) {
      in_.Advance(4);
      return MakeLiteral("true", std::string(kXsd) + "boolean", "");
    }
    if (BooleanAhead("false")) {
      in_.Advance(5);
      return MakeLiteral("false", std::string(kXsd) + "boolean", "");
    }
    return ReadIri();
  }

  bool BooleanAhead(std::string_view word) const {
    if (!in_.LookingAt(word)) return false;
    char after = in_.Peek(word.size());
    return !((after >= 'a' && after <= 'z') || (after >= 'A' && after <= 'Z') ||
             (after >= '0' && after <= '9') || after == ':' || after == '_' ||
             after == '-');
  }

  Term ReadNumber() {
    std::string lexical;
    if (in_.Peek() == '+' || in_.Peek() == '-') lexical += in_.Next();
    auto digit = [this](size_t ahead = 0) {
      char c = in_.Peek(ahead);
      return c >= '0' && c <= '9';
    };
    while (digit()) lexical += in_.Next();
    bool decimal = false, exponent = false;
    if (in_.Peek() == '.' && digit(1)) {
      decimal = true;
      lexical += in_.Next();
      while (digit()) lexical += in_.Next();
    }
    if (in_.Peek() == 'e' || in_.Peek() == 'E') {
      exponent = true;
      lexical += in_.Next();
      if (in_.Peek() == '+' || in_.Peek() == '-') lexical += in_.Next();
      if (!digit()) in_.Fail("bad exponent");
      while (digit()) lexical += in_.Next();
    }
    if (lexical.empty() || lexical == "+" || lexical == "-") {
      in_.Fail("bad numeric literal");
    }
    const char *type = exponent ? "double" : decimal ? "decimal" : "integer";
    return MakeLiteral(lexical, std::string(kXsd) + type, "");
  }

  Term ReadIri() {
    if (in_.Peek() == '<') return Term::Iri(ReadIriRef(&in_));
    // Prefixed name.
    int line = in_.line(), column = in_.column();
    std::string prefix;
    while (!in_.AtEnd() && in_.Peek() != ':') {
      unsigned char c = in_.Peek();
      if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
            (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.' ||
            c >= 0x80)) {
        in_.Fail("expected IRI or prefixed name" + in_.Found());
      }
      prefix += in_.Next();
    }
    in_.Expect(':');
    std::string local;
    while (!in_.AtEnd()) {
      unsigned char c = in_.Peek();
      bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                (c >= '0' && c <= '9') || c == '_' || c == '-' || c == ':' ||
                c == '%' || c >= 0x80;
      if (c == '.') {
        // A trailing dot terminates the statement.
        unsigned char n = in_.Peek(1);
        ok = (n >= 'a' && n <= 'z') || (n >= 'A' && n <= 'Z') ||
             (n >= '0' && n <= '9') || n == '_' || n == '-' || n == ':' ||
             n >= 0x80;
      }
      if (!ok) break;
      local += in_.Next();
    }
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) {
      throw ParseError("undeclared prefix '" + prefix + ":'", line, column);
    }
    return Term::Iri(it->second + local);
  }

  Cursor in_;
  std::map<std::string, std::string> prefixes_;
  std::vector<Triple> triples_;
};

// Turtle form of one term.
std::string TurtleTerm(const Term &term, const PrefixTable *prefixes) {
  if (term.is_iri()) {
    if (prefixes != nullptr) {
      if (auto c = prefixes->Compact(term.value())) return *c;
    }
    return term.ToNTriples();
  }
  if (term.is_literal() && !term.datatype().empty() && prefixes != nullptr) {
    if (auto c = prefixes->Compact(term.datatype())) {
      return "\"" + EscapeLiteral(term.value()) + "\"^^" + *c;
    }
  }
  return term.ToNTriples();
}

}  // namespace

RdfFormat ParseRdfFormat(std::string_view name) {
  if (name == "ntriples" || name == "nt" || name == "n-triples") {
    return RdfFormat::kNTriples;
  }
  if (name == "turtle" || name == "ttl" || name == "turtle-subset") {
    return RdfFormat::kTurtle;
  }
  throw InputError("unknown RDF format: " + std::string(name));
}

const char *RdfFormatName(RdfFormat format) {
  return format == RdfFormat::kNTriples ? "ntriples" : "turtle";
}

std::vector<Triple> ParseRdf(std::string_view document, RdfFormat format,
                             const PrefixTable *predeclared) {
  try {
    if (format == RdfFormat::kNTriples) {
      return NTriplesParser(document).Parse();
    }
    return TurtleParser(document, predeclared).Parse();
  } catch (const std::invalid_argument &e) {
    // Term construction errors not caught by the grammar itself.
    throw ParseError(e.what(), 0, 0);
  }
}

Graph ParseGraph(std::string_view document, RdfFormat format, Term name,
                 const PrefixTable *predeclared) {
  Graph graph(std::move(name));
  for (Triple &t : ParseRdf(document, format, predeclared)) {
    graph.Insert(std::move(t));
  }
  return graph;
}

std::string Serialize(const Graph &graph, RdfFormat format,
                      const PrefixTable *prefixes) {
  if (format == RdfFormat::kNTriples) {
    std::vector<std::string> lines;
    lines.reserve(graph.size());
    for (const Triple &t : graph) lines.push_back(t.ToNTriples());
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const std::string &line : lines) {
      out += line;
      out += '\n';
    }
    return out;
  }

  // Turtle: group by subject in the same lexicographic order as N-Triples.
  std::map<std::string, std::vector<const Triple *>> by_subject;
  for (const Triple &t : graph) by_subject[t.subject.ToNTriples()].push_back(&t);
  std::string body;
  std::map<std::string, bool> used;
  auto note_prefix = [&](const Term &term) {
    if (prefixes == nullptr) return;
    const std::string *iri = nullptr;
    if (term.is_iri()) iri = &term.value();
    if (term.is_literal() && !term.datatype().empty()) iri = &term.datatype();
    if (iri == nullptr) return;
    if (auto c = prefixes->Compact(*iri)) {
      used[c->substr(0, c->find(':'))] = true;
    }
  };
  for (auto &[key, triples] : by_subject) {
    std::sort(triples.begin(), triples.end(),
              [](const Triple *a, const Triple *b) {
                return a->ToNTriples() < b->ToNTriples();
              });
    const Term &subject = triples.front()->subject;
    note_prefix(subject);
    body += TurtleTerm(subject, prefixes);
    const Term *last_predicate = nullptr;
    for (const Triple *t : triples) {
      note_prefix(t->predicate);
      note_prefix(t->object);
      if (last_predicate != nullptr && *last_predicate == t->predicate) {
        body += " ,\n        " + TurtleTerm(t->object, prefixes);
        continue;
      }
      body += last_predicate == nullptr ? " " : " ;\n    ";
      body += t->predicate.value() == kRdfType
                  ? std::string("a")
                  : TurtleTerm(t->predicate, prefixes);
      body += " " + TurtleTerm(t->object, prefixes);
      last_predicate = &t->predicate;
    }
    body += " .\n";
  }
  std::string out;
  if (prefixes != nullptr) {
    for (const auto &e : prefixes->entries()) {
      if (used.count(e.prefix)) {
        out += "@prefix " + e.prefix + ": <" + e.ns + "> .\n";
        used.erase(e.prefix);
      }
    }
    if (!out.empty() && !body.empty()) out += "\n";
  }
  return out + body;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write file: " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw InputError("write failed: " + path);
}

}  // namespace folkgraph
