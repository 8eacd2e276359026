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

#include "folkgraph/detector.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "folkgraph/errors.h"
#include "folkgraph/text.h"
#include "folkgraph/vocab.h"
#include "json.hpp"

namespace folkgraph {

namespace {

const char kSentenceNs[] = "https://w3id.org/folkgraph/data/sentence/";

const std::set<std::string> &Modals() {
  static const std::set<std::string> words = {
      "to",    "will", "would", "can",  "could", "may",  "might",
      "must",  "shall", "should", "do", "does",  "did",  "don't",
      "won't", "can't", "didn't"};
  return words;
}

const std::set<std::string> &Determiners() {
  static const std::set<std::string> words = {
      "the", "a",     "an",  "this", "that", "these", "those", "his",
      "her", "its",   "their", "my", "your", "our",   "some",  "every"};
  return words;
}

// Lower is preferred.
int PosRank(PartOfSpeech pos, const std::string &previous) {
  static const PartOfSpeech kDefault[] = {
      PartOfSpeech::kMultiword, PartOfSpeech::kNoun, PartOfSpeech::kVerb,
      PartOfSpeech::kAdjective, PartOfSpeech::kAdverb};
  static const PartOfSpeech kAfterModal[] = {
      PartOfSpeech::kMultiword, PartOfSpeech::kVerb, PartOfSpeech::kNoun,
      PartOfSpeech::kAdjective, PartOfSpeech::kAdverb};
  static const PartOfSpeech kAfterDeterminer[] = {
      PartOfSpeech::kMultiword, PartOfSpeech::kNoun, PartOfSpeech::kAdjective,
      PartOfSpeech::kVerb, PartOfSpeech::kAdverb};
  const PartOfSpeech *order = kDefault;
  if (Modals().count(previous)) {
    order = kAfterModal;
  } else if (Determiners().count(previous)) {
    order = kAfterDeterminer;
  }
  for (int i = 0; i < 5; ++i) {
    if (order[i] == pos) return i;
  }
  return 5;
}

Term PosTerm(PartOfSpeech pos) {
  std::string name = PartOfSpeechName(pos);
  name[0] = static_cast<char>(name[0] - 'a' + 'A');
  return vocab::Fschema(name);
}

Term EdgePredicate(ChainEdge edge) {
  switch (edge) {
    case ChainEdge::kEvokes: return vocab::Fschema("evokes");
    case ChainEdge::kSenseKey: return vocab::Fschema("senseKey");
    case ChainEdge::kTriggers: return vocab::Vcore("triggers");
    case ChainEdge::kSense: break;
  }
  return vocab::Fg("sense");
}

std::string PositionalId(size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "s%04zu", n);
  return buf;
}

}  // namespace

const char *SenseModeName(SenseMode mode) {
  return mode == SenseMode::kFirstSense ? "firstSense" : "allSenses";
}

SenseMode ParseSenseMode(std::string_view name) {
  if (name == "firstSense") return SenseMode::kFirstSense;
  if (name == "allSenses") return SenseMode::kAllSenses;
  throw InputError("unknown sense mode: " + std::string(name));
}

const char *ChainEdgeName(ChainEdge edge) {
  switch (edge) {
    case ChainEdge::kSense: return "sense";
    case ChainEdge::kEvokes: return "evokes";
    case ChainEdge::kSenseKey: return "senseKey";
    case ChainEdge::kTriggers: return "triggers";
  }
  return "?";
}

Term SentenceGraph::SentenceNode(const std::string &id) {
  return Term::Iri(kSentenceNs + PercentEncode(id));
}

Term SentenceGraph::NodeIri(const std::string &id, size_t index) {
  return Term::Iri(kSentenceNs + PercentEncode(id) + "/node/" +
                   std::to_string(index));
}

std::vector<SentenceInput> ParseSentenceInput(std::string_view contents) {
  std::vector<SentenceInput> out;
  std::vector<std::string> lines = Split(contents, '\n');
  std::string first;
  for (const std::string &l : lines) {
    if (!Trim(l).empty()) {
      first = std::string(Trim(l));
      break;
    }
  }
  if (first.empty()) return out;

  if (first[0] == '{') {
    size_t line_no = 0;
    for (const std::string &l : lines) {
      ++line_no;
      if (Trim(l).empty()) continue;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(Trim(l));
      } catch (const nlohmann::json::exception &e) {
        throw InputError("line " + std::to_string(line_no) + ": " + e.what());
      }
      if (!j.is_object() || !j.contains("text") || !j["text"].is_string()) {
        throw InputError("line " + std::to_string(line_no) +
                         ": expected an object with a text field");
      }
      SentenceInput in;
      in.text = j["text"].get<std::string>();
      if (j.contains("id")) {
        in.id = j["id"].is_string() ? j["id"].get<std::string>() : j["id"].dump();
      } else {
        in.id = PositionalId(out.size() + 1);
      }
      out.push_back(std::move(in));
    }
    return out;
  }

  std::vector<std::string> header = Split(first, ',');
  for (std::string &h : header) h = AsciiLower(Trim(h));
  auto id_col = std::find(header.begin(), header.end(), "id");
  auto text_col = std::find(header.begin(), header.end(), "text");
  if (id_col != header.end() && text_col != header.end()) {
    size_t id_i = id_col - header.begin(), text_i = text_col - header.begin();
    std::vector<CsvRecord> records = ParseCsv(contents);
    for (size_t r = 1; r < records.size(); ++r) {
      const auto &f = records[r].fields;
      if (f.size() <= std::max(id_i, text_i)) {
        throw InputError("line " + std::to_string(records[r].line) +
                         ": too few columns");
      }
      out.push_back({f[id_i], f[text_i]});
    }
    return out;
  }

  for (const std::string &l : lines) {
    std::string_view t = Trim(l);
    if (t.empty()) continue;
    out.push_back({PositionalId(out.size() + 1), std::string(t)});
  }
  return out;
}

Detector::Detector(const Store &store, const Lexicon &lexicon,
                   PrefixTable prefixes, DetectorOptions options,
                   std::vector<Term> trigger_graphs)
    : store_(store),
      lexicon_(lexicon),
      prefixes_(std::move(prefixes)),
      options_(std::move(options)),
      trigger_graphs_(std::move(trigger_graphs)) {
  if (!store_.frozen()) throw std::logic_error("store is not frozen");
  if (trigger_graphs_.empty()) trigger_graphs_ = store_.GraphsWithRole("triggers");
  for (const Term &g : trigger_graphs_) {
    if (!store_.HasGraph(g)) throw InputError("unknown trigger graph " + g.value());
  }
}

SentenceGraph Detector::AnalyzeSentence(const std::string &id,
                                        const std::string &text) const {
  if (Trim(text).empty()) throw std::invalid_argument("empty sentence");
  SentenceGraph sg;
  sg.id = id;
  sg.text = text;
  sg.graph.set_name(SentenceGraph::SentenceNode(id));

  std::vector<Token> tokens = Tokenize(text);
  size_t i = 0;
  while (i < tokens.size()) {
    size_t longest = std::min<size_t>(lexicon_.max_entry_tokens(),
                                      tokens.size() - i);
    size_t matched = 0;
    std::vector<const LexicalEntry *> entries;
    for (size_t len = longest; len >= 1 && matched == 0; --len) {
      std::vector<std::string> words;
      for (size_t k = i; k < i + len; ++k) words.push_back(tokens[k].text);
      entries = lexicon_.LookupSurface(Join(words, " "));
      if (!entries.empty()) matched = len;
    }
    if (matched == 0) {
      ++i;
      continue;
    }
    const std::string previous = i > 0 ? tokens[i - 1].text : "";
    std::stable_sort(entries.begin(), entries.end(),
                     [&](const LexicalEntry *a, const LexicalEntry *b) {
                       int ra = PosRank(a->pos, previous);
                       int rb = PosRank(b->pos, previous);
                       if (ra != rb) return ra < rb;
                       return a->id < b->id;
                     });
    NodeAnnotation base;
    base.start = tokens[i].start;
    base.end = tokens[i + matched - 1].end;
    base.surface = AsciiLower(text.substr(base.start, base.end - base.start));
    auto add = [&](const LexicalEntry &e, const std::optional<Term> &sense) {
      NodeAnnotation n = base;
      n.lemma = e.lemma;
      n.pos = e.pos;
      n.sense = sense;
      if (sense) {
        n.frames = lexicon_.FramesOfSense(*sense);
        n.verb_classes = lexicon_.VerbClassesOfSense(*sense);
      }
      sg.nodes.push_back(std::move(n));
    };
    if (options_.mode == SenseMode::kFirstSense) {
      const LexicalEntry &e = *entries.front();
      add(e, e.senses.empty() ? std::nullopt : std::optional<Term>(e.senses[0]));
    } else {
      for (const LexicalEntry *e : entries) {
        if (e->senses.empty()) add(*e, std::nullopt);
        for (const Term &s : e->senses) add(*e, s);
      }
    }
    i += matched;
  }

  if (sg.nodes.empty()) {
    sg.no_graph = true;
    return sg;
  }
  Graph &g = sg.graph;
  const Term sentence = SentenceGraph::SentenceNode(id);
  const Term type = vocab::Rdf("type");
  g.Insert(sentence, type, vocab::Fg("Sentence"));
  g.Insert(sentence, vocab::Fg("id"), Term::Literal(id));
  g.Insert(sentence, vocab::Fg("text"), Term::Literal(text));
  for (size_t k = 0; k < sg.nodes.size(); ++k) {
    const NodeAnnotation &n = sg.nodes[k];
    Term node = SentenceGraph::NodeIri(id, k);
    g.Insert(sentence, vocab::Fg("node"), node);
    g.Insert(node, type, vocab::Fg("Node"));
    g.Insert(node, vocab::Fg("start"), vocab::Integer(static_cast<long>(n.start)));
    g.Insert(node, vocab::Fg("end"), vocab::Integer(static_cast<long>(n.end)));
    g.Insert(node, vocab::Fg("surface"), Term::Literal(n.surface));
    g.Insert(node, vocab::Fg("lemma"), Term::Literal(n.lemma));
    g.Insert(node, vocab::Fg("pos"), PosTerm(n.pos));
    if (!n.sense) continue;
    g.Insert(node, vocab::Fg("sense"), *n.sense);
    for (const Term &f : n.frames) {
      g.Insert(node, vocab::Fg("frame"), f);
      g.Insert(*n.sense, vocab::Fschema("evokes"), f);
    }
    for (const Term &v : n.verb_classes) {
      g.Insert(node, vocab::Fg("verbClass"), v);
      g.Insert(*n.sense, vocab::Fschema("senseKey"), v);
    }
  }
  return sg;
}

std::vector<Term> Detector::TriggeredValues(const Term &entity) const {
  std::vector<Term> out;
  const Term triggers = vocab::Vcore("triggers");
  for (const Term &g : trigger_graphs_) {
    for (const Triple &t : store_.Match({entity, triggers, Var("v"), g})) {
      out.push_back(t.object);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DetectionResult Detector::DetectValues(const SentenceGraph &sentence) const {
  DetectionResult r;
  r.id = sentence.id;
  r.no_graph = sentence.no_graph;
  r.sentence = sentence;
  std::set<ActivationPath> paths;
  auto hit = [&](size_t node, ActivationKind kind, std::vector<ChainLink> chain) {
    if (!Counts(kind)) return;
    for (const Term &v : TriggeredValues(chain.back().entity)) {
      ActivationPath p;
      p.value = v;
      p.node = node;
      p.kind = kind;
      p.chain = chain;
      p.chain.push_back({v, ChainEdge::kTriggers});
      paths.insert(std::move(p));
    }
  };
  for (size_t k = 0; k < sentence.nodes.size(); ++k) {
    const NodeAnnotation &n = sentence.nodes[k];
    if (!n.sense) continue;
    const ChainLink head{*n.sense, ChainEdge::kSense};
    hit(k, ActivationKind::kSynset, {head});
    for (const Term &f : n.frames) {
      hit(k, ActivationKind::kFrame, {head, {f, ChainEdge::kEvokes}});
    }
    for (const Term &vc : n.verb_classes) {
      const ChainLink via{vc, ChainEdge::kSenseKey};
      hit(k, ActivationKind::kVerbClass, {head, via});
      for (const Term &f : lexicon_.FramesOfVerbClass(vc)) {
        hit(k, ActivationKind::kFrame, {head, via, {f, ChainEdge::kEvokes}});
      }
    }
  }
  r.paths.assign(paths.begin(), paths.end());
  std::set<Term> values;
  Graph &g = r.sentence.graph;
  for (const ActivationPath &p : r.paths) {
    values.insert(p.value);
    g.Insert(SentenceGraph::NodeIri(sentence.id, p.node), vocab::Fg("activates"),
             p.value);
    for (size_t i = 1; i < p.chain.size(); ++i) {
      g.Insert(p.chain[i - 1].entity, EdgePredicate(p.chain[i].edge),
               p.chain[i].entity);
    }
  }
  r.values.assign(values.begin(), values.end());
  return r;
}

std::vector<StanceJudgment> Detector::StanceQuery(
    const SentenceGraph &sentence) const {
  std::vector<StanceJudgment> out;
  std::set<std::tuple<size_t, Term, std::string>> seen;
  const auto &nodes = sentence.nodes;
  for (size_t k = 0; k < nodes.size(); ++k) {
    for (const Term &vc : nodes[k].verb_classes) {
      for (const AffectStance &st : lexicon_.AffectStances(vc)) {
        if (!seen.insert({nodes[k].start, vc, st.role}).second) continue;
        StanceJudgment j;
        j.verb_class = vc;
        j.role = st.role;
        j.negative = st.negative;
        j.label = st.label;
        j.node = k;
        // Nearest preceding noun-phrase head by span order.
        for (size_t m = k; m-- > 0;) {
          if (nodes[m].end <= nodes[k].start &&
              (nodes[m].pos == PartOfSpeech::kNoun ||
               nodes[m].pos == PartOfSpeech::kMultiword)) {
            j.target = m;
            break;
          }
        }
        out.push_back(std::move(j));
      }
    }
  }
  return out;
}

DetectionResult Detector::Detect(const std::string &id,
                                 const std::string &text) const {
  DetectionResult r = DetectValues(AnalyzeSentence(id, text));
  r.stances = StanceQuery(r.sentence);
  Graph &g = r.sentence.graph;
  const Term type = vocab::Rdf("type");
  for (size_t i = 0; i < r.stances.size(); ++i) {
    const StanceJudgment &j = r.stances[i];
    Term node = Term::Iri(SentenceGraph::SentenceNode(id).value() + "/stance/" +
                          std::to_string(i));
    g.Insert(node, type, vocab::Fg("StanceJudgment"));
    g.Insert(node, vocab::Fg("verbNode"), SentenceGraph::NodeIri(id, j.node));
    g.Insert(node, vocab::Fg("verbClass"), j.verb_class);
    g.Insert(node, vocab::Fg("role"), Term::Literal(j.role));
    g.Insert(node, vocab::Fg("polarity"),
             vocab::Fschema(j.negative ? "Negative" : "Positive"));
    if (j.target) {
      g.Insert(node, vocab::Fg("target"), SentenceGraph::NodeIri(id, *j.target));
    }
  }
  return r;
}

std::vector<DetectionResult> Detector::DetectAll(
    const std::vector<SentenceInput> &inputs, int jobs) const {
  std::vector<DetectionResult> results(inputs.size());
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= inputs.size()) return;
      try {
        results[i] = Detect(inputs[i].id, inputs[i].text);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next = inputs.size();
        return;
      }
    }
  };
  size_t threads = std::clamp<size_t>(jobs < 1 ? 1 : jobs, 1,
                                      std::max<size_t>(inputs.size(), 1));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (std::thread &t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return results;
}

std::string Detector::SummaryJson(const DetectionResult &r) const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["id"] = r.id;
  ordered_json values = ordered_json::array();
  for (const Term &v : r.values) values.push_back(prefixes_.Display(v));
  j["values"] = std::move(values);
  ordered_json paths = ordered_json::array();
  for (const ActivationPath &p : r.paths) {
    const NodeAnnotation &n = r.sentence.nodes[p.node];
    ordered_json o;
    o["value"] = prefixes_.Display(p.value);
    o["node"] = p.node;
    o["surface"] = n.surface;
    o["kind"] = ActivationKindName(p.kind);
    ordered_json chain = ordered_json::array();
    for (const ChainLink &l : p.chain) {
      chain.push_back({{"edge", ChainEdgeName(l.edge)},
                       {"entity", prefixes_.Display(l.entity)}});
    }
    o["chain"] = std::move(chain);
    paths.push_back(std::move(o));
  }
  j["paths"] = std::move(paths);
  ordered_json stances = ordered_json::array();
  for (const StanceJudgment &s : r.stances) {
    ordered_json o;
    o["verbClass"] = prefixes_.Display(s.verb_class);
    o["role"] = s.role;
    o["polarity"] = s.negative ? "negative" : "positive";
    o["verb"] = r.sentence.nodes[s.node].surface;
    if (s.target) {
      o["target"] = r.sentence.nodes[*s.target].surface;
    } else {
      o["target"] = nullptr;
    }
    stances.push_back(std::move(o));
  }
  j["stances"] = std::move(stances);
  j["noGraph"] = r.no_graph;
  return j.dump() + "\n";
}

}  // namespace folkgraph
