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

#ifndef FOLKGRAPH_TEXT_H_
#define FOLKGRAPH_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace folkgraph {

// Lowercases ASCII and Latin-1 letters; other bytes pass through.
std::string AsciiLower(std::string_view s);

std::string_view Trim(std::string_view s);

// Splits on `sep`; keeps empty fields.
std::vector<std::string> Split(std::string_view s, char sep);

std::string Join(const std::vector<std::string> &parts, std::string_view sep);

// A word token with its byte span [start, end) in the source text.
struct Token {
  size_t start = 0;
  size_t end = 0;
  std::string text;  // lowercased
};

// Word segmentation in the spirit of Unicode word boundaries: letters and
// digits form words, a single apostrophe or period between letters stays
// inside the word, and separators between digits stay inside numbers.
// Punctuation and whitespace are dropped.
std::vector<Token> Tokenize(std::string_view text);

// One CSV record and the 1-based line it starts on.
struct CsvRecord {
  size_t line = 0;
  std::vector<std::string> fields;
};

// RFC 4180 records: quoted fields may hold commas, doubled quotes and line
// breaks; CRLF is accepted and blank lines are skipped. A stray quote inside
// an unquoted field is kept literally. Throws InputError on an unterminated
// quoted field.
std::vector<CsvRecord> ParseCsv(std::string_view text);

// File-system safe name: [A-Za-z0-9._-] kept, everything else '_'.
std::string Slug(std::string_view s);

// Percent-encodes bytes outside the IRI unreserved set.
std::string PercentEncode(std::string_view s);

}  // namespace folkgraph

#endif  // FOLKGRAPH_TEXT_H_
