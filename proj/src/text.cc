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

#include "folkgraph/text.h"

#include "folkgraph/errors.h"

namespace folkgraph {

namespace {

bool IsAsciiLetter(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }

// Length of the UTF-8 sequence starting with `lead`.
size_t SequenceLength(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

enum class CharClass { kLetter, kDigit, kApostrophe, kPeriod, kNumSep, kOther };

// Classifies the character at `pos` and stores its byte length.
CharClass Classify(std::string_view text, size_t pos, size_t *len) {
  unsigned char c = text[pos];
  *len = std::min(SequenceLength(c), text.size() - pos);
  if (IsAsciiLetter(c)) return CharClass::kLetter;
  if (IsDigit(c)) return CharClass::kDigit;
  if (c == '\'') return CharClass::kApostrophe;
  if (c == '.') return CharClass::kPeriod;
  if (c == ',') return CharClass::kNumSep;
  if (c == '_') return CharClass::kLetter;
  if (c < 0x80) return CharClass::kOther;
  std::string_view seq = text.substr(pos, *len);
  // Right single quotation mark is used as an apostrophe.
  if (seq == "\xE2\x80\x99") return CharClass::kApostrophe;
  // General punctuation block, Latin-1 punctuation and no-break space.
  if (seq.size() == 3 && seq[0] == '\xE2' && seq[1] == '\x80') {
    return CharClass::kOther;
  }
  if (seq.size() == 2 && seq[0] == '\xC2') return CharClass::kOther;
  return CharClass::kLetter;
}

}  // namespace

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (size_t i = 0; i < out.size(); ++i) {
    unsigned char c = out[i];
    if (c >= 'A' && c <= 'Z') {
      out[i] = static_cast<char>(c + 32);
    } else if (c == 0xC3 && i + 1 < out.size()) {
      unsigned char n = out[i + 1];
      if (n >= 0x80 && n <= 0x9E && n != 0x97) out[i + 1] = static_cast<char>(n + 0x20);
      ++i;
    }
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> Split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string Join(const std::vector<std::string> &parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t len;
    CharClass cls = Classify(text, pos, &len);
    if (cls != CharClass::kLetter && cls != CharClass::kDigit) {
      pos += len;
      continue;
    }
    size_t start = pos;
    CharClass prev = cls;
    pos += len;
    while (pos < text.size()) {
      cls = Classify(text, pos, &len);
      if (cls == CharClass::kLetter || cls == CharClass::kDigit) {
        prev = cls;
        pos += len;
        continue;
      }
      // Mid-word separators must be followed by the same kind of
      // character that precedes them.
      bool mid_letter = cls == CharClass::kApostrophe || cls == CharClass::kPeriod;
      bool mid_num = cls == CharClass::kPeriod || cls == CharClass::kNumSep;
      if (pos + len < text.size()) {
        size_t next_len;
        CharClass next = Classify(text, pos + len, &next_len);
        if ((mid_letter && prev == CharClass::kLetter && next == CharClass::kLetter) ||
            (mid_num && prev == CharClass::kDigit && next == CharClass::kDigit)) {
          pos += len + next_len;
          prev = next;
          continue;
        }
      }
      break;
    }
    tokens.push_back({start, pos, AsciiLower(text.substr(start, pos - start))});
  }
  return tokens;
}

std::string Slug(std::string_view s) {
  std::string out;
  for (unsigned char c : s) {
    bool keep = IsAsciiLetter(c) || IsDigit(c) || c == '.' || c == '_' || c == '-';
    out += keep ? static_cast<char>(c) : '_';
  }
  return out;
}

std::string PercentEncode(std::string_view s) {
  static const char *kHex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (IsAsciiLetter(c) || IsDigit(c) || c == '-' || c == '.' || c == '_' ||
        c == '~') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 15];
    }
  }
  return out;
}

std::vector<CsvRecord> ParseCsv(std::string_view text) {
  std::vector<CsvRecord> records;
  size_t line = 1, pos = 0;
  while (pos < text.size()) {
    CsvRecord rec;
    rec.line = line;
    std::string field;
    bool quoted = false, any = false;
    while (true) {
      if (pos >= text.size()) {
        if (quoted) {
          throw InputError("line " + std::to_string(rec.line) +
                           ": unterminated quoted field");
        }
        break;
      }
      char c = text[pos];
      if (quoted) {
        if (c == '"') {
          if (pos + 1 < text.size() && text[pos + 1] == '"') {
            field += '"';
            pos += 2;
          } else {
            quoted = false;
            ++pos;
          }
          continue;
        }
        if (c == '\n') ++line;
        field += c;
        ++pos;
        continue;
      }
      if (c == '"' && field.empty()) {
        quoted = any = true;
        ++pos;
        continue;
      }
      if (c == ',') {
        rec.fields.push_back(std::move(field));
        field.clear();
        any = true;
        ++pos;
        continue;
      }
      if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') ++pos;
      if (c == '\n' || c == '\r') {
        ++pos;
        ++line;
        break;
      }
      field += c;
      any = true;
      ++pos;
    }
    if (!any && field.empty()) continue;
    rec.fields.push_back(std::move(field));
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace folkgraph
