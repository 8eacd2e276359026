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

// Test-only generators and independent oracles for the triple store:
// a nested-loop BGP evaluator and a brute-force graph isomorphism check.

#ifndef FOLKGRAPH_TESTS_TEST_UTIL_H_
#define FOLKGRAPH_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "folkgraph/graph.h"
#include "folkgraph/store.h"
#include "folkgraph/term.h"

namespace folkgraph::testing {

inline Term Ex(const std::string &local) {
  return Term::Iri("http://ex.org/" + local);
}

inline std::string FixturePath(const std::string &relative) {
  return std::string(FOLKGRAPH_FIXTURE_DIR) + "/" + relative;
}

// Random term pools are kept small so that random patterns hit often.
class RandomGraphs {
 public:
  explicit RandomGraphs(uint32_t seed) : rng_(seed) {}

  Term Subject() {
    if (Chance(0.15)) return Term::Blank("b" + std::to_string(Uniform(4)));
    return Ex("e" + std::to_string(Uniform(10)));
  }
  Term Predicate() { return Ex("p" + std::to_string(Uniform(5))); }
  Term Object() {
    double r = Real();
    if (r < 0.55) return Ex("e" + std::to_string(Uniform(10)));
    if (r < 0.65) return Term::Blank("b" + std::to_string(Uniform(4)));
    static const char *kLexical[] = {"plain", "with \"quotes\"", "line\nbreak",
                                     "tab\there", "caf\xc3\xa9", "back\\slash",
                                     "42"};
    std::string lexical = kLexical[Uniform(7)];
    double k = Real();
    if (k < 0.2) return Term::Literal(lexical, "", "en");
    if (k < 0.4) {
      return Term::Literal(lexical, "http://www.w3.org/2001/XMLSchema#token");
    }
    return Term::Literal(lexical);
  }

  Graph MakeGraph(size_t max_triples, const Term &name = Ex("g")) {
    Graph g(name);
    size_t n = Uniform(max_triples + 1);
    for (size_t i = 0; i < n; ++i) g.Insert(Subject(), Predicate(), Object());
    return g;
  }

  PatternTerm Position(int which, int max_vars) {
    if (Chance(0.5)) {
      return Var("v" + std::to_string(Uniform(max_vars)));
    }
    if (which == 0) return Subject();
    if (which == 1) return Predicate();
    return Object();
  }

  std::vector<Pattern> MakeBgp(int max_patterns, int max_vars) {
    std::vector<Pattern> bgp;
    int n = 1 + static_cast<int>(Uniform(max_patterns));
    for (int i = 0; i < n; ++i) {
      bgp.push_back({Position(0, max_vars), Position(1, max_vars),
                     Position(2, max_vars), std::nullopt});
    }
    return bgp;
  }

  size_t Uniform(size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(rng_);
  }
  double Real() { return std::uniform_real_distribution<double>(0, 1)(rng_); }
  bool Chance(double p) { return Real() < p; }
  std::mt19937 &rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

// Nested-loop join over plain triple lists; no indexes involved.
inline void BruteForceJoin(const std::vector<Pattern> &patterns, size_t i,
                           const std::map<std::string, std::vector<Triple>> &graphs,
                           Binding &current, std::set<Binding> *out) {
  if (i == patterns.size()) {
    out->insert(current);
    return;
  }
  const Pattern &p = patterns[i];
  std::vector<const Triple *> scope;
  for (const auto &[name, triples] : graphs) {
    if (p.graph && p.graph->value() != name) continue;
    for (const Triple &t : triples) scope.push_back(&t);
  }
  for (const Triple *t : scope) {
    Binding next = current;
    bool ok = true;
    const PatternTerm *pos[3] = {&p.subject, &p.predicate, &p.object};
    const Term *val[3] = {&t->subject, &t->predicate, &t->object};
    for (int k = 0; k < 3 && ok; ++k) {
      if (const Term *c = std::get_if<Term>(pos[k])) {
        ok = *c == *val[k];
      } else {
        const std::string &name = std::get<Variable>(*pos[k]).name;
        auto it = next.find(name);
        if (it == next.end()) {
          next[name] = *val[k];
        } else {
          ok = it->second == *val[k];
        }
      }
    }
    if (ok) BruteForceJoin(patterns, i + 1, graphs, next, out);
  }
}

inline std::vector<Binding> BruteForceBgp(
    const std::vector<Pattern> &patterns,
    const std::map<std::string, std::vector<Triple>> &graphs) {
  std::set<Binding> out;
  Binding empty;
  BruteForceJoin(patterns, 0, graphs, empty, &out);
  return {out.begin(), out.end()};
}

// Isomorphism up to blank node relabeling, by trying every bijection.
// Only meant for graphs with a handful of blank nodes.
inline bool Isomorphic(const Graph &a, const Graph &b) {
  if (a.size() != b.size()) return false;
  std::set<std::string> blanks_a, blanks_b;
  for (const Triple &t : a) {
    if (t.subject.is_blank()) blanks_a.insert(t.subject.value());
    if (t.object.is_blank()) blanks_a.insert(t.object.value());
  }
  for (const Triple &t : b) {
    if (t.subject.is_blank()) blanks_b.insert(t.subject.value());
    if (t.object.is_blank()) blanks_b.insert(t.object.value());
  }
  if (blanks_a.size() != blanks_b.size()) return false;
  std::vector<std::string> from(blanks_a.begin(), blanks_a.end());
  std::vector<std::string> to(blanks_b.begin(), blanks_b.end());
  do {
    std::map<std::string, std::string> m;
    for (size_t i = 0; i < from.size(); ++i) m[from[i]] = to[i];
    auto map_term = [&m](const Term &t) {
      return t.is_blank() ? Term::Blank(m.at(t.value())) : t;
    };
    bool all = true;
    for (const Triple &t : a) {
      if (!b.Contains({map_term(t.subject), t.predicate, map_term(t.object)})) {
        all = false;
        break;
      }
    }
    if (all) return true;
  } while (std::next_permutation(to.begin(), to.end()));
  return false;
}

}  // namespace folkgraph::testing

#endif  // FOLKGRAPH_TESTS_TEST_UTIL_H_
