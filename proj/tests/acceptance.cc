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

// Acceptance suite: runs every acceptance criterion against the fixture
// knowledge base and prints one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail N ...]
//
// Exits 0 when the set of failing criteria equals the expected set.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "closure_check.h"
#include "folkgraph/detector.h"
#include "folkgraph/evalharness.h"
#include "folkgraph/lexicon.h"
#include "folkgraph/manifest.h"
#include "folkgraph/pipeline.h"
#include "folkgraph/quokka.h"
#include "folkgraph/rdf_io.h"
#include "folkgraph/store.h"
#include "folkgraph/vocab.h"
#include "test_util.h"

namespace folkgraph {
namespace {

namespace fs = std::filesystem;
using testing::FixturePath;

const char kMacron[] =
    "And however flawed or dishonest Macron may be.....it is a far greater "
    "act of dishonesty to steal his data and expose it, hoping to change the "
    "course of a national election for the purpose of an outside group. That "
    "is far far more dangerous than voting for one flawed man.";

// Outcome of one criterion: failures are human-readable reasons.
struct Check {
  std::vector<std::string> failures;
  void Expect(bool ok, const std::string &what) {
    if (!ok) failures.push_back(what);
  }
};

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string Fmt(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3fs", seconds);
  return buf;
}

// Shared fixture state, built once.
struct Fixture {
  Manifest manifest = LoadManifest(FixturePath("manifest.conf"));
  KnowledgeBase kb = BuildKnowledgeBase(manifest);
  Lexicon lexicon = Lexicon::Build(kb.store);
  Term X(const std::string &name) const { return kb.prefixes.ExpandIri(name); }
  std::set<Term> Xs(std::initializer_list<const char *> names) const {
    std::set<Term> out;
    for (const char *n : names) out.insert(X(n));
    return out;
  }
};

bool Includes(const std::vector<Term> &big, const std::set<Term> &small) {
  std::set<Term> b(big.begin(), big.end());
  return std::includes(b.begin(), b.end(), small.begin(), small.end());
}

int RunTool(std::vector<std::string> args, std::string *err = nullptr) {
  args.insert(args.begin(), "folkgraph");
  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  std::ostringstream out, errs;
  int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, errs);
  if (err != nullptr) *err = errs.str();
  return code;
}

std::map<std::string, std::string> Snapshot(const fs::path &dir) {
  std::map<std::string, std::string> out;
  for (const auto &e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) {
      out[fs::relative(e.path(), dir).string()] = ReadFile(e.path().string());
    }
  }
  return out;
}

class TempDir {
 public:
  explicit TempDir(const std::string &tag)
      : path_(fs::temp_directory_path() /
              ("folkgraph_acceptance_" + tag + "_" + std::to_string(::getpid()))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path &path() const { return path_; }

 private:
  fs::path path_;
};

Check RiskExpansion(const Fixture &fx) {
  Check c;
  Quokka quokka(fx.kb.store, fx.lexicon, fx.kb.prefixes);
  auto start = std::chrono::steady_clock::now();
  std::vector<Term> frames = quokka.FrameActivationQuery({"risk", {}});
  std::vector<Term> units = quokka.LexicalUnitExpansion(frames);
  std::vector<Term> factual = quokka.FactualExpansionQuery(fx.X("cn:risk"));
  double seconds = Seconds(start);
  c.Expect(std::set<Term>(frames.begin(), frames.end()) ==
               fx.Xs({"fs:RiskySituation", "fs:RunRisk", "fs:BeingAtRisk",
                      "fs:Daring", "fs:Endangering"}),
           "frame set differs");
  c.Expect(Includes(units, fx.Xs({"wn:risk-verb-2", "wn:gamble-verb-1",
                                  "wn:venture-verb-3", "vn:Risk_94000000",
                                  "vn:Gamble_70000000", "vn:Venture_94100000"})),
           "lexical units missing");
  c.Expect(Includes(factual, fx.Xs({"dbpedia:Risk", "wiki:Q104493"})),
           "factual entities missing");
  c.Expect(seconds < 1.0, "took " + Fmt(seconds));
  return c;
}

Check MacronSentence(const Fixture &fx, const KnowledgeBase &expanded) {
  Check c;
  Lexicon lexicon = Lexicon::Build(expanded.store);
  Detector detector(expanded.store, lexicon, expanded.prefixes);
  auto start = std::chrono::steady_clock::now();
  DetectionResult r = detector.Detect("357", kMacron);
  double seconds = Seconds(start);
  c.Expect(std::set<Term>(r.values.begin(), r.values.end()) ==
               fx.Xs({"mft:Loyalty", "mft:Betrayal", "folk:Rigor",
                      "folk:Learning", "folk:Risk"}),
           "value set differs");
  auto has_path = [&](const std::string &surface,
                      std::initializer_list<const char *> chain) {
    std::vector<Term> want;
    for (const char *n : chain) want.push_back(fx.X(n));
    for (const ActivationPath &p : r.paths) {
      std::vector<Term> got;
      for (const ChainLink &l : p.chain) got.push_back(l.entity);
      if (r.sentence.nodes[p.node].surface == surface && got == want) return true;
    }
    return false;
  };
  struct Narrative {
    const char *surface;
    std::initializer_list<const char *> chain;
  };
  const Narrative paths[] = {
      {"dishonest", {"wn:dishonest-adjective-1", "fs:Candidness", "mft:Loyalty"}},
      {"national", {"wn:national-adjective-1", "mft:Loyalty"}},
      {"expose",
       {"wn:expose-verb-1", "vb:Expose_48012000", "fs:RevealSecret", "mft:Betrayal"}},
      {"act of dishonesty", {"wn:act_of_dishonesty-noun-1", "fs:Law", "folk:Rigor"}},
      {"dangerous", {"wn:dangerous-adjective-1", "folk:Risk"}},
      {"dangerous", {"wn:dangerous-adjective-1", "fs:RiskySituation", "folk:Risk"}},
      {"course", {"wn:course-noun-1", "fs:EducationTeaching", "folk:Learning"}},
  };
  for (const Narrative &n : paths) {
    c.Expect(has_path(n.surface, n.chain),
             std::string("missing path from \"") + n.surface + "\"");
  }
  c.Expect(seconds < 1.0, "took " + Fmt(seconds));
  return c;
}

Check TableReproduction(const Fixture &fx, const KnowledgeBase &expanded) {
  Check c;
  Lexicon lexicon = Lexicon::Build(expanded.store);
  Detector detector(expanded.store, lexicon, expanded.prefixes);
  std::vector<SentenceDetection> detections;
  for (const DetectionResult &r : detector.DetectAll(
           ParseSentenceInput(ReadFile(fx.manifest.corpus)), 4)) {
    detections.push_back({r.id, r.no_graph, r.values});
  }
  LabelMap labels = LabelMap::Parse(ReadFile(fx.manifest.label_map), fx.kb.prefixes);
  CorpusLoad corpus = LoadCorpus(fx.manifest.corpus,
                                 CorpusFormatForPath(fx.manifest.corpus), labels);
  CoverageReport report = CoverageStats(corpus.rows, detections);

  auto cell = [&](const std::string &name, int got, int want) {
    c.Expect(got == want, name + " " + std::to_string(got) + " != " +
                              std::to_string(want));
  };
  const AnnotatorRow expected[] = {
      {"A00", 157, 63, 52, 62, 34},   {"A01", 137, 136, 53, 60, 60},
      {"A02", 185, 180, 65, 75, 75},  {"A03", 302, 296, 122, 130, 130},
      {"A04", 163, 163, 6, 63, 63},
  };
  std::map<std::string, AnnotatorRow> got;
  for (const AnnotatorRow &row : report.annotators) got[row.annotator] = row;
  c.Expect(got.size() == std::size(expected), "annotator count differs");
  for (const AnnotatorRow &want : expected) {
    const AnnotatorRow &row = got[want.annotator];
    const std::string a = "Table1 " + want.annotator + " ";
    cell(a + "Tot", row.tot, want.tot);
    cell(a + "Tot-NC", row.tot_nc, want.tot_nc);
    cell(a + "Agree", row.agree, want.agree);
    cell(a + "Agree+TM", row.agree_tm, want.agree_tm);
    cell(a + "Agree+TM-NC", row.agree_tm_nc, want.agree_tm_nc);
  }
  cell("Table2 total", report.total, 1000);
  cell("Table2 graphs", report.graphs, 944);
  cell("Table2 mftAnnotated", report.mft_annotated, 228);
  cell("Table2 thinMorality", report.thin_morality, 153);
  cell("Table2 nonMoral", report.non_moral, 563);
  cell("Table2 detected", report.detected_any, 855);
  cell("Table2 overlapTmNm", report.overlap_tm_nm, 635);
  return c;
}

Check BgpOracle() {
  Check c;
  testing::RandomGraphs gen(20261016);
  auto start = std::chrono::steady_clock::now();
  int checked = 0;
  for (int g = 0; g < 50; ++g) {
    Graph graph = gen.MakeGraph(200);
    std::map<std::string, std::vector<Triple>> plain;
    plain[graph.name().value()] = {graph.begin(), graph.end()};
    Store store;
    store.AddGraph(graph);
    store.Freeze();
    for (int q = 0; q < 10; ++q, ++checked) {
      auto bgp = gen.MakeBgp(3, 3);
      if (store.MatchBGP(bgp) != testing::BruteForceBgp(bgp, plain)) {
        c.Expect(false, "graph " + std::to_string(g) + " query " + std::to_string(q));
      }
    }
  }
  double seconds = Seconds(start);
  c.Expect(checked == 500, "ran " + std::to_string(checked) + " queries");
  c.Expect(seconds < 30.0, "took " + Fmt(seconds));
  return c;
}

Check TriggerClosure() {
  Check c;
  TempDir dir("closure");
  testing::RandomGraphs rnd(20261017);
  int checked = 0;
  for (int round = 0; round < 100; ++round) {
    testing::ClosureTrial t = testing::RunClosureTrial(rnd, dir.path().string(), round);
    checked += t.checked;
    for (const std::string &v : t.violations) c.Expect(false, "unjustified " + v);
  }
  c.Expect(checked > 0, "no derivedClosure edges generated");
  return c;
}

Check RoundTrip() {
  Check c;
  testing::RandomGraphs gen(20261018);
  PrefixTable prefixes;
  prefixes.Add("ex", "http://ex.org/");
  for (int i = 0; i < 100; ++i) {
    Graph g = gen.MakeGraph(100);
    for (RdfFormat format : {RdfFormat::kNTriples, RdfFormat::kTurtle}) {
      Graph back = ParseGraph(Serialize(g, format, &prefixes), format, g.name());
      c.Expect(testing::Isomorphic(g, back),
               "graph " + std::to_string(i) +
                   (format == RdfFormat::kTurtle ? " (turtle)" : " (n-triples)"));
    }
  }
  return c;
}

Check Determinism() {
  Check c;
  TempDir dir("determinism");
  const std::string manifest = FixturePath("manifest.conf");
  auto pass = [&](const std::string &tag) {
    std::string ws = (dir.path() / ("ws_" + tag)).string();
    std::string out = (dir.path() / ("det_" + tag)).string();
    std::string err;
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"build-kb"},
             {"expand", "--all"},
             {"detect", "--input", FixturePath("corpus/mfrc_fixture.csv"), "--out",
              out, "--jobs", "4"}}) {
      std::vector<std::string> full = {"--manifest", manifest, "--workspace", ws};
      full.insert(full.end(), args.begin(), args.end());
      c.Expect(RunTool(full, &err) == 0, args[0] + " failed: " + err);
    }
    auto snap = Snapshot(ws);
    for (auto &[k, v] : Snapshot(out)) snap["detect/" + k] = v;
    return snap;
  };
  auto a = pass("a");
  auto b = pass("b");
  c.Expect(!a.empty(), "no output files");
  c.Expect(a == b, "outputs differ between runs");
  return c;
}

Check Throughput() {
  Check c;
  TempDir dir("throughput");
  const std::string manifest = FixturePath("manifest.conf");
  std::string ws = (dir.path() / "ws").string(), err;
  std::vector<std::string> base = {"--manifest", manifest, "--workspace", ws};
  auto with = [&](std::vector<std::string> args) {
    std::vector<std::string> full = base;
    full.insert(full.end(), args.begin(), args.end());
    return full;
  };
  c.Expect(RunTool(with({"build-kb"}), &err) == 0, "build-kb failed: " + err);
  c.Expect(RunTool(with({"expand", "--all"}), &err) == 0, "expand failed: " + err);
  size_t sentences = ParseSentenceInput(
      ReadFile(FixturePath("corpus/mfrc_fixture.csv"))).size();
  c.Expect(sentences == 1000, "corpus has " + std::to_string(sentences) + " sentences");
  auto start = std::chrono::steady_clock::now();
  c.Expect(RunTool(with({"detect", "--input", FixturePath("corpus/mfrc_fixture.csv"),
                         "--out", (dir.path() / "det").string(), "--jobs", "4"}),
                   &err) == 0,
           "detect failed: " + err);
  double seconds = Seconds(start);
  c.Expect(seconds < 10.0, "took " + Fmt(seconds));
  return c;
}

int Main(int argc, char **argv) {
  CLI::App app("folkgraph acceptance suite");
  std::vector<int> expect_fail;
  app.add_option("--expect-fail", expect_fail,
                 "Criteria known to fail; the run succeeds only if exactly "
                 "these fail");
  CLI11_PARSE(app, argc, argv);

  Fixture fx;
  KnowledgeBase expanded = BuildExpandedKb(fx.manifest);
  struct Criterion {
    const char *name;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {"risk expansion", [&] { return RiskExpansion(fx); }},
      {"Macron sentence (firstSense)", [&] { return MacronSentence(fx, expanded); }},
      {"table reproduction", [&] { return TableReproduction(fx, expanded); }},
      {"BGP oracle", [] { return BgpOracle(); }},
      {"trigger closure", [] { return TriggerClosure(); }},
      {"serialization round trip", [] { return RoundTrip(); }},
      {"determinism", [] { return Determinism(); }},
      {"throughput", [] { return Throughput(); }},
  };
  std::set<int> failed;
  for (size_t i = 0; i < criteria.size(); ++i) {
    int n = static_cast<int>(i + 1);
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      c = criteria[i].run();
    } catch (const std::exception &e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double seconds = Seconds(start);
    if (!c.failures.empty()) failed.insert(n);
    std::printf("%s %d %s (%s)\n", c.failures.empty() ? "PASS" : "FAIL", n,
                criteria[i].name, Fmt(seconds).c_str());
    for (const std::string &f : c.failures) std::printf("    %s\n", f.c_str());
  }
  std::set<int> expected(expect_fail.begin(), expect_fail.end());
  if (failed != expected) {
    std::printf("failing criteria do not match --expect-fail\n");
    return 1;
  }
  return 0;
}

}  // namespace
}  // namespace folkgraph

int main(int argc, char **argv) { return folkgraph::Main(argc, argv); }
