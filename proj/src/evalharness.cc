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

#include "folkgraph/evalharness.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "folkgraph/errors.h"
#include "folkgraph/rdf_io.h"
#include "folkgraph/text.h"
#include "folkgraph/vocab.h"
#include "json.hpp"

namespace folkgraph {

namespace {

std::string Squash(std::string_view s) {
  std::string out;
  for (char c : AsciiLower(s)) {
    if (c != ' ' && c != '_' && c != '-') out += c;
  }
  return out;
}

// Splits a label field on ',' and '|', trimming and dropping empties.
std::vector<std::string> LabelStrings(std::string_view field) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    std::string_view t = Trim(cur);
    if (!t.empty()) out.emplace_back(t);
    cur.clear();
  };
  for (char c : field) {
    if (c == ',' || c == '|') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

bool IsMoral(const Term &label) { return label != NonMoral(); }

std::string Pad(const std::string &s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string FormatRows(const std::vector<std::vector<std::string>> &rows) {
  std::vector<size_t> width;
  for (const auto &r : rows) {
    width.resize(std::max(width.size(), r.size()));
    for (size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::string out;
  for (const auto &r : rows) {
    std::string line;
    for (size_t i = 0; i < r.size(); ++i) {
      line += i + 1 == r.size() ? r[i] : Pad(r[i], width[i] + 2);
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace

const char *ConfidenceName(Confidence c) {
  switch (c) {
    case Confidence::kConfident: return "Confident";
    case Confidence::kSomewhatConfident: return "Somewhat Confident";
    case Confidence::kNotConfident: return "Not Confident";
  }
  return "?";
}

std::optional<Confidence> ParseConfidence(std::string_view s) {
  std::string k = Squash(s);
  if (k == "confident") return Confidence::kConfident;
  if (k == "somewhatconfident") return Confidence::kSomewhatConfident;
  if (k == "notconfident") return Confidence::kNotConfident;
  return std::nullopt;
}

Term ThinMorality() { return vocab::Vcore("ThinMorality"); }
Term NonMoral() { return vocab::Vcore("NonMoral"); }

LabelMap LabelMap::Parse(std::string_view text, const PrefixTable &prefixes) {
  LabelMap m;
  int line_no = 0;
  for (const std::string &line : Split(text, '\n')) {
    ++line_no;
    std::string_view t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> cols = Split(t, '\t');
    if (cols.size() != 2 || Trim(cols[0]).empty()) {
      throw InputError("label map line " + std::to_string(line_no) +
                       ": expected label<TAB>iri");
    }
    m.Add(std::string(Trim(cols[0])), prefixes.ExpandIri(Trim(cols[1])));
  }
  return m;
}

std::optional<Term> LabelMap::Find(const std::string &label) const {
  auto it = map_.find(label);
  if (it != map_.end()) return it->second;
  std::string k = Squash(label);
  for (const auto &[l, t] : map_) {
    if (Squash(l) == k) return t;
  }
  return std::nullopt;
}

CorpusFormat CorpusFormatForPath(const std::string &path) {
  std::string ext = AsciiLower(std::filesystem::path(path).extension().string());
  return ext == ".jsonl" || ext == ".json" ? CorpusFormat::kJsonl
                                           : CorpusFormat::kCsv;
}

CorpusLoad ParseCorpus(std::string_view contents, CorpusFormat format,
                       const LabelMap &labels) {
  CorpusLoad out;
  auto skip = [&](size_t line, const std::string &why) {
    ++out.skipped;
    out.warnings.push_back("line " + std::to_string(line) + ": " + why);
  };
  // Validates one row's fields; returns false if skipped.
  auto add = [&](size_t line, std::string id, std::string text,
                 std::string annotator, const std::vector<std::string> &label_strs,
                 const std::string &confidence) {
    if (Trim(id).empty() || Trim(annotator).empty()) {
      return skip(line, "empty id or annotator");
    }
    auto conf = ParseConfidence(confidence);
    if (!conf) return skip(line, "unknown confidence '" + confidence + "'");
    AnnotatedSentence s;
    for (const std::string &l : label_strs) {
      auto t = labels.Find(l);
      if (!t) {
        throw InputError("line " + std::to_string(line) + ": unknown label '" +
                         l + "'");
      }
      s.labels.insert(*t);
    }
    if (s.labels.empty()) return skip(line, "no labels");
    if ((s.labels.count(ThinMorality()) || s.labels.count(NonMoral())) &&
        s.labels.size() > 1) {
      return skip(line, "thin morality/non-moral combined with other labels");
    }
    s.id = std::string(Trim(id));
    s.text = std::move(text);
    s.annotator = std::string(Trim(annotator));
    s.confidence = *conf;
    out.rows.push_back(std::move(s));
  };

  static const char *kColumns[] = {"id", "text", "annotator", "labels",
                                   "confidence"};
  if (format == CorpusFormat::kCsv) {
    std::vector<CsvRecord> records = ParseCsv(contents);
    if (records.empty()) throw InputError("corpus has no header");
    std::map<std::string, size_t> col;
    for (size_t i = 0; i < records[0].fields.size(); ++i) {
      col[AsciiLower(Trim(records[0].fields[i]))] = i;
    }
    for (const char *c : kColumns) {
      if (!col.count(c)) {
        throw InputError(std::string("corpus header lacks column '") + c + "'");
      }
    }
    size_t need = 0;
    for (const char *c : kColumns) need = std::max(need, col[c] + 1);
    for (size_t r = 1; r < records.size(); ++r) {
      const CsvRecord &rec = records[r];
      if (rec.fields.size() != records[0].fields.size() ||
          rec.fields.size() < need) {
        skip(rec.line, "expected " + std::to_string(records[0].fields.size()) +
                           " fields, got " + std::to_string(rec.fields.size()));
        continue;
      }
      const auto &f = rec.fields;
      add(rec.line, f[col["id"]], f[col["text"]], f[col["annotator"]],
          LabelStrings(f[col["labels"]]), f[col["confidence"]]);
    }
    return out;
  }

  size_t line_no = 0;
  for (const std::string &line : Split(contents, '\n')) {
    ++line_no;
    if (Trim(line).empty()) continue;
    nlohmann::json j = nlohmann::json::parse(Trim(line), nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      skip(line_no, "not a JSON object");
      continue;
    }
    bool ok = true;
    for (const char *c : kColumns) ok = ok && j.contains(c);
    if (!ok || !j["text"].is_string() || !j["annotator"].is_string() ||
        !j["confidence"].is_string()) {
      skip(line_no, "missing or mistyped fields");
      continue;
    }
    std::vector<std::string> label_strs;
    if (j["labels"].is_array()) {
      for (const auto &l : j["labels"]) {
        if (l.is_string()) label_strs.push_back(l.get<std::string>());
      }
    } else if (j["labels"].is_string()) {
      label_strs = LabelStrings(j["labels"].get<std::string>());
    }
    std::string id = j["id"].is_string() ? j["id"].get<std::string>() : j["id"].dump();
    add(line_no, id, j["text"].get<std::string>(), j["annotator"].get<std::string>(),
        label_strs, j["confidence"].get<std::string>());
  }
  return out;
}

CorpusLoad LoadCorpus(const std::string &path, CorpusFormat format,
                      const LabelMap &labels) {
  try {
    return ParseCorpus(ReadFile(path), format, labels);
  } catch (const InputError &e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<AnnotatorRow> AnnotatorStats(
    const std::vector<AnnotatedSentence> &corpus) {
  std::map<std::string, std::vector<const AnnotatedSentence *>> groups;
  for (const AnnotatedSentence &s : corpus) groups[s.text].push_back(&s);
  std::map<std::string, AnnotatorRow> rows;
  for (const auto &[text, group] : groups) {
    std::map<Term, int> votes;
    for (const AnnotatedSentence *s : group) {
      for (const Term &l : s->labels) ++votes[l];
    }
    std::set<Term> majority;
    for (const auto &[l, n] : votes) {
      if (2 * n > static_cast<int>(group.size())) majority.insert(l);
    }
    bool moral_majority = std::any_of(majority.begin(), majority.end(), IsMoral);
    for (const AnnotatedSentence *s : group) {
      AnnotatorRow &r = rows[s->annotator];
      r.annotator = s->annotator;
      bool confident = s->confidence != Confidence::kNotConfident;
      bool agree = std::any_of(s->labels.begin(), s->labels.end(),
                               [&](const Term &l) { return majority.count(l); });
      bool moral = std::any_of(s->labels.begin(), s->labels.end(), IsMoral);
      bool agree_tm = agree || (moral && moral_majority);
      ++r.tot;
      r.tot_nc += confident;
      r.agree += agree;
      r.agree_tm += agree_tm;
      r.agree_tm_nc += agree_tm && confident;
    }
  }
  std::vector<AnnotatorRow> out;
  for (auto &[name, r] : rows) out.push_back(r);
  return out;
}

std::vector<SentenceDetection> ParseDetections(std::string_view jsonl,
                                               const PrefixTable &prefixes) {
  std::vector<SentenceDetection> out;
  size_t line_no = 0;
  for (const std::string &line : Split(jsonl, '\n')) {
    ++line_no;
    if (Trim(line).empty()) continue;
    auto where = [&] { return "detections line " + std::to_string(line_no) + ": "; };
    nlohmann::json j = nlohmann::json::parse(Trim(line), nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("id")) {
      throw InputError(where() + "expected a JSON object with an id");
    }
    SentenceDetection d;
    d.id = j["id"].is_string() ? j["id"].get<std::string>() : j["id"].dump();
    d.no_graph = j.value("noGraph", false);
    if (j.contains("values")) {
      if (!j["values"].is_array()) throw InputError(where() + "values must be a list");
      for (const auto &v : j["values"]) {
        if (!v.is_string()) throw InputError(where() + "values must be strings");
        d.values.push_back(prefixes.ExpandIri(v.get<std::string>()));
      }
    }
    std::sort(d.values.begin(), d.values.end());
    d.values.erase(std::unique(d.values.begin(), d.values.end()), d.values.end());
    out.push_back(std::move(d));
  }
  return out;
}

CoverageReport CoverageStats(const std::vector<AnnotatedSentence> &corpus,
                             const std::vector<SentenceDetection> &detections) {
  std::map<std::string, const SentenceDetection *> by_id;
  std::set<std::string> corpus_ids;
  for (const AnnotatedSentence &s : corpus) corpus_ids.insert(s.id);
  std::vector<std::string> unknown, missing;
  for (const SentenceDetection &d : detections) {
    if (!corpus_ids.count(d.id)) unknown.push_back(d.id);
    by_id[d.id] = &d;
  }
  for (const std::string &id : corpus_ids) {
    if (!by_id.count(id)) missing.push_back(id);
  }
  auto list = [](const std::vector<std::string> &ids) {
    std::vector<std::string> head(ids.begin(),
                                  ids.begin() + std::min<size_t>(ids.size(), 20));
    return Join(head, ", ") + (ids.size() > 20 ? ", ..." : "");
  };
  if (!unknown.empty()) {
    throw ConsistencyError("detections for unknown sentence ids: " + list(unknown));
  }
  if (!missing.empty()) {
    throw ConsistencyError("no detection for sentence ids: " + list(missing));
  }

  CoverageReport r;
  r.total = static_cast<int>(corpus.size());
  std::vector<AnnotatedSentence> graph_rows;
  std::set<std::string> texts, value_texts;
  for (const AnnotatedSentence &s : corpus) {
    const SentenceDetection &d = *by_id.at(s.id);
    if (d.no_graph) continue;
    graph_rows.push_back(s);
    ++r.graphs;
    texts.insert(s.text);
    bool tm = s.labels.count(ThinMorality()) > 0;
    bool nm = s.labels.count(NonMoral()) > 0;
    bool value = !tm && !nm;
    r.mft_annotated += value;
    r.thin_morality += tm;
    r.non_moral += nm;
    if (value) value_texts.insert(s.text);
    if (!d.values.empty()) {
      ++r.detected_any;
      r.overlap_tm_nm += tm || nm;
    }
    for (const Term &v : d.values) ++r.histogram[v];
  }
  r.unique_sentences = static_cast<int>(texts.size());
  r.mft_annotated_unique = static_cast<int>(value_texts.size());
  r.annotators = AnnotatorStats(graph_rows);
  return r;
}

std::string FormatTable1(const std::vector<AnnotatorRow> &rows) {
  std::vector<std::vector<std::string>> t = {
      {"Annotator", "Tot", "Tot-NC", "Agree/Tot", "Agree+TM/Tot", "Agree+TM/Tot-NC"}};
  for (const AnnotatorRow &r : rows) {
    t.push_back({r.annotator, std::to_string(r.tot), std::to_string(r.tot_nc),
                 std::to_string(r.agree), std::to_string(r.agree_tm),
                 std::to_string(r.agree_tm_nc)});
  }
  return FormatRows(t);
}

std::string FormatTable2(const CoverageReport &r) {
  auto of = [](int a, int b) { return std::to_string(a) + "/" + std::to_string(b); };
  std::string out = FormatRows(
      {{"Total", "Graph subset", "MFT annotation", "Thin Morality", "Non-Moral",
        "Detected"},
       {std::to_string(r.total), std::to_string(r.graphs),
        of(r.mft_annotated, r.total), std::to_string(r.thin_morality),
        std::to_string(r.non_moral), of(r.detected_any, r.graphs)}});
  out += "Detected and labeled thin morality or non-moral: " +
         of(r.overlap_tm_nm, r.thin_morality + r.non_moral) + "\n";
  out += "MFT annotation per unique sentence: " +
         of(r.mft_annotated_unique, r.unique_sentences) + "\n";
  return out;
}

std::string HistogramTsv(const CoverageReport &r, const PrefixTable &prefixes) {
  std::vector<std::pair<int, std::string>> rows;
  for (const auto &[v, n] : r.histogram) rows.push_back({-n, prefixes.Display(v)});
  std::sort(rows.begin(), rows.end());
  std::string out = "value\tcount\n";
  for (const auto &[n, v] : rows) out += v + "\t" + std::to_string(-n) + "\n";
  return out;
}

namespace {

nlohmann::ordered_json AnnotatorArray(const std::vector<AnnotatorRow> &rows) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const AnnotatorRow &r : rows) {
    a.push_back({{"annotator", r.annotator},
                 {"tot", r.tot},
                 {"totNC", r.tot_nc},
                 {"agree", r.agree},
                 {"agreeTM", r.agree_tm},
                 {"agreeTMNC", r.agree_tm_nc}});
  }
  return a;
}

}  // namespace

std::string AnnotatorJson(const std::vector<AnnotatorRow> &rows) {
  nlohmann::ordered_json j;
  j["annotators"] = AnnotatorArray(rows);
  return j.dump(2) + "\n";
}

std::string ReportJson(const CoverageReport &r, const PrefixTable &prefixes) {
  nlohmann::ordered_json j;
  j["totalSentences"] = r.total;
  j["graphsProduced"] = r.graphs;
  j["mftAnnotated"] = r.mft_annotated;
  j["thinMorality"] = r.thin_morality;
  j["nonMoral"] = r.non_moral;
  j["detectedAny"] = r.detected_any;
  j["overlapWithTMorNM"] = r.overlap_tm_nm;
  j["uniqueSentences"] = r.unique_sentences;
  j["mftAnnotatedUnique"] = r.mft_annotated_unique;
  j["annotators"] = AnnotatorArray(r.annotators);
  nlohmann::ordered_json h = nlohmann::ordered_json::object();
  for (const auto &[v, n] : r.histogram) h[prefixes.Display(v)] = n;
  j["histogram"] = std::move(h);
  return j.dump(2) + "\n";
}

}  // namespace folkgraph
