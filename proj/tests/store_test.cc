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

#include "folkgraph/store.h"

#include <gtest/gtest.h>

#include "folkgraph/errors.h"
#include "test_util.h"

namespace folkgraph {
namespace {

using testing::Ex;

Store ThreeTriples() {
  Store store;
  store.Load(
      "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .\n"
      "<http://ex.org/b> <http://ex.org/p> <http://ex.org/c> .\n"
      "<http://ex.org/c> <http://ex.org/q> \"lit\" .\n",
      RdfFormat::kNTriples, Ex("g"));
  store.Freeze();
  return store;
}

TEST(StoreTest, FullScan) {
  Store store = ThreeTriples();
  auto rows = store.MatchBGP({{Var("s"), Var("p"), Var("o"), std::nullopt}});
  EXPECT_EQ(rows.size(), 3u);
}

TEST(StoreTest, JoinOnSharedVariable) {
  Store store = ThreeTriples();
  auto rows = store.MatchBGP({{Var("x"), Ex("p"), Var("y"), std::nullopt},
                              {Var("y"), Ex("p"), Var("z"), std::nullopt}});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].at("x"), Ex("a"));
  EXPECT_EQ(rows[0].at("z"), Ex("c"));
}

TEST(StoreTest, RepeatedVariableInOnePattern) {
  Store store;
  Graph g(Ex("g"));
  g.Insert(Ex("a"), Ex("p"), Ex("a"));
  g.Insert(Ex("a"), Ex("p"), Ex("b"));
  store.AddGraph(std::move(g));
  store.Freeze();
  auto rows = store.MatchBGP({{Var("x"), Ex("p"), Var("x"), std::nullopt}});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].at("x"), Ex("a"));
}

TEST(StoreTest, ConstantPatternIsMembershipTest) {
  Store store = ThreeTriples();
  EXPECT_EQ(store.MatchBGP({{Ex("a"), Ex("p"), Ex("b"), std::nullopt}}).size(), 1u);
  EXPECT_TRUE(store.MatchBGP({{Ex("a"), Ex("p"), Ex("c"), std::nullopt}}).empty());
  EXPECT_TRUE(store.MatchBGP({{Ex("zz"), Var("p"), Var("o"), std::nullopt}}).empty());
}

TEST(StoreTest, Errors) {
  Store store;
  store.Load("", RdfFormat::kNTriples, Ex("g"));
  EXPECT_THROW(store.Load("", RdfFormat::kNTriples, Ex("g")), InputError);
  EXPECT_THROW(store.MatchBGP({{Var("s"), Var("p"), Var("o"), std::nullopt}}),
               std::logic_error);
  store.Freeze();
  EXPECT_THROW(store.MatchBGP({}), std::invalid_argument);
  EXPECT_THROW(store.MatchBGP({{Var("s"), Var("p"), Var("o"), Ex("nope")}}),
               InputError);
  EXPECT_THROW(store.Insert(Ex("g"), {Ex("a"), Ex("p"), Ex("b")}),
               std::logic_error);
  EXPECT_EQ(store.GetGraph(Ex("g")).size(), 0u);
}

TEST(StoreTest, GraphScope) {
  Store store;
  store.Load("<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .",
             RdfFormat::kNTriples, Ex("g1"), "lexical");
  store.Load("<http://ex.org/a> <http://ex.org/p> <http://ex.org/c> .",
             RdfFormat::kNTriples, Ex("g2"), "triggers");
  store.Freeze();
  EXPECT_EQ(store.MatchBGP({{Ex("a"), Ex("p"), Var("o"), std::nullopt}}).size(), 2u);
  auto scoped = store.MatchBGP({{Ex("a"), Ex("p"), Var("o"), Ex("g2")}});
  ASSERT_EQ(scoped.size(), 1u);
  EXPECT_EQ(scoped[0].at("o"), Ex("c"));
  EXPECT_EQ(store.GraphsWithRole("lexical"), std::vector<Term>{Ex("g1")});
}

TEST(StoreTest, BlankNodesScopedPerDocument) {
  Store store;
  store.Load("_:b <http://ex.org/p> <http://ex.org/x> .", RdfFormat::kNTriples,
             Ex("g1"));
  store.Load("_:b <http://ex.org/p> <http://ex.org/y> .", RdfFormat::kNTriples,
             Ex("g2"));
  store.Freeze();
  auto rows = store.MatchBGP({{Var("b"), Ex("p"), Ex("x"), std::nullopt},
                              {Var("b"), Ex("p"), Ex("y"), std::nullopt}});
  EXPECT_TRUE(rows.empty());
}

// Property: indexed evaluation agrees with a nested-loop join, and
// all-constant patterns agree with direct set membership.
TEST(StoreTest, MatchesBruteForceOnRandomGraphs) {
  testing::RandomGraphs gen(7);
  for (int g = 0; g < 40; ++g) {
    Graph graph = gen.MakeGraph(200);
    std::map<std::string, std::vector<Triple>> plain;
    plain[graph.name().value()] = {graph.begin(), graph.end()};
    Store store;
    store.AddGraph(graph);
    store.Freeze();
    for (int q = 0; q < 20; ++q) {
      auto bgp = gen.MakeBgp(3, 2);
      ASSERT_EQ(store.MatchBGP(bgp), testing::BruteForceBgp(bgp, plain));
    }
    for (int q = 0; q < 20; ++q) {
      Triple t{gen.Subject(), gen.Predicate(), gen.Object()};
      bool member = graph.Contains(t);
      EXPECT_EQ(store.Contains(t), member);
      EXPECT_EQ(store.MatchBGP({{t.subject, t.predicate, t.object, std::nullopt}})
                    .size(),
                member ? 1u : 0u);
    }
  }
}

// Property: adding triples never removes bindings.
TEST(StoreTest, Monotone) {
  testing::RandomGraphs gen(99);
  for (int i = 0; i < 30; ++i) {
    Graph small = gen.MakeGraph(60);
    Graph big = small;
    for (int k = 0; k < 30; ++k) big.Insert(gen.Subject(), gen.Predicate(), gen.Object());
    Store a, b;
    a.AddGraph(small);
    b.AddGraph(big);
    a.Freeze();
    b.Freeze();
    auto bgp = gen.MakeBgp(3, 2);
    auto ra = a.MatchBGP(bgp), rb = b.MatchBGP(bgp);
    EXPECT_TRUE(std::includes(rb.begin(), rb.end(), ra.begin(), ra.end()));
  }
}

}  // namespace
}  // namespace folkgraph
