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

// Random small lexical knowledge bases for the trigger-closure property:
// every derivedClosure edge emitted by an expansion plan must be justified
// by store triples seed lemma -> entry -> sense -> frame, through a frame
// the plan accepted.

#ifndef FOLKGRAPH_TESTS_CLOSURE_CHECK_H_
#define FOLKGRAPH_TESTS_CLOSURE_CHECK_H_

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "folkgraph/lexicon.h"
#include "folkgraph/quokka.h"
#include "folkgraph/rdf_io.h"
#include "folkgraph/store.h"
#include "folkgraph/vocab.h"
#include "test_util.h"

namespace folkgraph::testing {

struct ClosureTrial {
  int checked = 0;  // derivedClosure edges examined
  std::vector<std::string> violations;
};

// Frames reachable from a lemma, by BGP over the store alone.
inline std::vector<Term> LemmaFramesByBgp(const Store &store,
                                          const std::string &lemma) {
  std::set<Term> out;
  for (const Binding &b : store.MatchBGP(
           {{Var("e"), vocab::Fschema("lemma"), Term::Literal(lemma), std::nullopt},
            {Var("e"), Var("n"), Var("s"), std::nullopt},
            {Var("s"), vocab::Fschema("evokes"), Var("f"), std::nullopt},
            {Var("f"), vocab::Rdf("type"), vocab::Fschema("Frame"), std::nullopt}})) {
    if (vocab::RdfMemberIndex(b.at("n")) > 0) out.insert(b.at("f"));
  }
  return {out.begin(), out.end()};
}

// Builds one random KB and plan (frames selected at random through a
// selection file in `dir`, lexical units automatic), runs it and checks
// every derivedClosure edge.
inline ClosureTrial RunClosureTrial(RandomGraphs &rnd, const std::string &dir,
                                    int round) {
  auto I = [](const std::string &local) { return Ex(local); };
  auto N = [](const char *p, size_t i) { return Ex(p + std::to_string(i)); };
  const Term type = vocab::Rdf("type");
  Graph g(I("lex"));
  size_t frames = 2 + rnd.Uniform(5), synsets = 3 + rnd.Uniform(10),
         classes = rnd.Uniform(4), entries = 1 + rnd.Uniform(5);
  for (size_t f = 0; f < frames; ++f) g.Insert(N("F", f), type, vocab::Fschema("Frame"));
  for (size_t c = 0; c < classes; ++c) {
    g.Insert(N("V", c), type, vocab::Fschema("VerbClass"));
    if (rnd.Chance(0.3)) {
      g.Insert(N("V", c), vocab::Fschema("evokes"), N("F", rnd.Uniform(frames)));
    }
  }
  for (size_t s = 0; s < synsets; ++s) {
    g.Insert(N("S", s), type, vocab::Fschema("Synset"));
    for (size_t f = 0; f < frames; ++f) {
      if (rnd.Chance(0.3)) g.Insert(N("S", s), vocab::Fschema("evokes"), N("F", f));
    }
    if (classes > 0 && rnd.Chance(0.4)) {
      g.Insert(N("S", s), vocab::Fschema("senseKey"), N("V", rnd.Uniform(classes)));
    }
  }
  for (size_t e = 0; e < entries; ++e) {
    g.Insert(N("E", e), type, vocab::Fschema("LexicalEntry"));
    g.Insert(N("E", e), vocab::Fschema("lemma"),
             Term::Literal("w" + std::to_string(rnd.Uniform(3))));
    g.Insert(N("E", e), vocab::Fschema("pos"), vocab::Fschema("Noun"));
    size_t senses = 1 + rnd.Uniform(3);
    for (size_t n = 1; n <= senses; ++n) {
      g.Insert(N("E", e), vocab::RdfMember(static_cast<int>(n)),
               N("S", rnd.Uniform(synsets)));
    }
  }
  Store store;
  store.AddGraph(std::move(g), "lexical");
  store.Freeze();
  Lexicon lexicon = Lexicon::Build(store);
  PrefixTable prefixes;
  Quokka quokka(store, lexicon, prefixes);

  ExpansionPlan plan;
  plan.value = I("Value");
  plan.seeds.push_back({"w" + std::to_string(rnd.Uniform(3)), std::nullopt});
  if (rnd.Chance(0.5)) {
    plan.seeds.push_back({"w" + std::to_string(rnd.Uniform(3)), std::nullopt});
  }
  std::set<Term> candidates;
  for (const Lexeme &seed : plan.seeds) {
    for (const Term &f : quokka.FrameActivationQuery(seed)) candidates.insert(f);
  }
  std::string selection;
  for (const Term &f : candidates) {
    if (rnd.Chance(0.6)) selection += f.ToNTriples() + "\n";
  }
  std::string path =
      (std::filesystem::path(dir) / ("sel" + std::to_string(round))).string();
  WriteFile(path, selection);
  plan.selection_files[QueryKind::kFrameActivation] = path;
  plan.auto_accept.insert(QueryKind::kLexicalUnit);
  Quokka::Result r = quokka.RunPlan(plan);

  ClosureTrial trial;
  std::set<Term> frame_edges;
  for (const TriggerEdge &e : r.report.edges) {
    if (e.kind == ActivationKind::kFrame) frame_edges.insert(e.trigger);
  }
  auto seed_reaches = [&](const Term &frame) {
    for (const Lexeme &seed : plan.seeds) {
      std::vector<Term> reach = LemmaFramesByBgp(store, seed.lemma);
      if (std::binary_search(reach.begin(), reach.end(), frame)) return true;
    }
    return false;
  };
  for (const TriggerEdge &e : r.report.edges) {
    if (e.provenance != TriggerProvenance::kDerivedClosure) continue;
    ++trial.checked;
    bool ok = !e.via.empty() && frame_edges.count(e.via.back()) &&
              seed_reaches(e.via.back()) && e.value == plan.value;
    if (ok && e.kind == ActivationKind::kSynset) {
      ok = e.via.size() == 1 &&
           store.Contains({e.trigger, vocab::Fschema("evokes"), e.via[0]});
    } else if (ok && e.kind == ActivationKind::kVerbClass) {
      ok = e.via.size() == 2 &&
           store.Contains({e.via[0], vocab::Fschema("senseKey"), e.trigger}) &&
           store.Contains({e.via[0], vocab::Fschema("evokes"), e.via[1]});
    } else if (ok) {
      ok = false;
    }
    if (!ok) {
      trial.violations.push_back("round " + std::to_string(round) + ": " +
                                 e.trigger.value());
    }
  }
  return trial;
}

}  // namespace folkgraph::testing

#endif  // FOLKGRAPH_TESTS_CLOSURE_CHECK_H_
