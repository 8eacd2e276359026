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

#include <gtest/gtest.h>

#include "folkgraph/errors.h"
#include "test_util.h"

namespace folkgraph {
namespace {

using testing::Ex;

TEST(RdfIoTest, EmptyDocument) {
  EXPECT_TRUE(ParseRdf("", RdfFormat::kNTriples).empty());
  EXPECT_TRUE(ParseRdf("  \n# just a comment\n", RdfFormat::kTurtle).empty());
  Graph g(Ex("g"));
  EXPECT_EQ(Serialize(g, RdfFormat::kNTriples), "");
  EXPECT_EQ(Serialize(g, RdfFormat::kTurtle), "");
}

TEST(RdfIoTest, SingleStatement) {
  auto triples = ParseRdf(
      "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .\n",
      RdfFormat::kNTriples);
  ASSERT_EQ(triples.size(), 1u);
  EXPECT_EQ(triples[0].subject, Ex("a"));
  EXPECT_EQ(triples[0].predicate, Ex("p"));
  EXPECT_EQ(triples[0].object, Ex("b"));
}

TEST(RdfIoTest, LiteralForms) {
  auto triples = ParseRdf(
      "_:x <http://ex.org/p> \"caf\\u00E9 \\\"q\\\"\"@fr .\n"
      "_:x <http://ex.org/p> \"7\"^^<http://www.w3.org/2001/XMLSchema#int> .\n"
      "_:x <http://ex.org/p> \"s\"^^<http://www.w3.org/2001/XMLSchema#string> .\n",
      RdfFormat::kNTriples);
  ASSERT_EQ(triples.size(), 3u);
  EXPECT_TRUE(triples[0].subject.is_blank());
  EXPECT_EQ(triples[0].object.value(), "caf\xc3\xa9 \"q\"");
  EXPECT_EQ(triples[0].object.lang(), "fr");
  EXPECT_EQ(triples[1].object.datatype(),
            "http://www.w3.org/2001/XMLSchema#int");
  // xsd:string is the same as a simple literal.
  EXPECT_EQ(triples[2].object, Term::Literal("s"));
}

TEST(RdfIoTest, DuplicatesCollapse) {
  Graph g = ParseGraph(
      "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .\n"
      "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .\n",
      RdfFormat::kNTriples, Ex("g"));
  EXPECT_EQ(g.size(), 1u);
}

TEST(RdfIoTest, SyntaxErrorsCarryPosition) {
  try {
    ParseRdf("<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .\n"
             "<http://ex.org/a> <http://ex.org/p> \"open .\n",
             RdfFormat::kNTriples);
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 30);
  }
  EXPECT_THROW(ParseRdf("<a> <http://ex.org/p> <http://ex.org/b> .",
                        RdfFormat::kNTriples),
               ParseError);
  EXPECT_THROW(ParseRdf("\"lit\" <http://ex.org/p> <http://ex.org/b> .",
                        RdfFormat::kNTriples),
               ParseError);
  EXPECT_THROW(ParseRdf("<http://ex.org/a> <http://ex.org/p> <http://ex.org/b>",
                        RdfFormat::kNTriples),
               ParseError);
}

TEST(RdfIoTest, TurtleSubset) {
  const char *doc = R"(
@prefix ex: <http://ex.org/> .
PREFIX fs: <https://w3id.org/framester/framenet/abox/frame/>
ex:risk a ex:Entry ;
    ex:label "risk"@en, 'venture' ;
    ex:count 3 ;
    ex:ratio 0.5 ;
    ex:flag true ;
    ex:evokes fs:RunRisk, fs:Daring ; .
ex:pb ex:id ex:risk.01 .
)";
  Graph g = ParseGraph(doc, RdfFormat::kTurtle, Ex("g"));
  EXPECT_EQ(g.size(), 9u);
  EXPECT_TRUE(g.Contains({Ex("risk"),
                          Term::Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type"),
                          Ex("Entry")}));
  EXPECT_TRUE(g.Contains(
      {Ex("risk"), Ex("evokes"),
       Term::Iri("https://w3id.org/framester/framenet/abox/frame/Daring")}));
  EXPECT_TRUE(g.Contains({Ex("risk"), Ex("count"),
                          Term::Literal("3", "http://www.w3.org/2001/XMLSchema#integer")}));
  EXPECT_TRUE(g.Contains({Ex("pb"), Ex("id"), Ex("risk.01")}));
}

TEST(RdfIoTest, TurtleRejectsOutOfSubsetSyntax) {
  const std::string head = "@prefix ex: <http://ex.org/> .\n";
  EXPECT_THROW(ParseRdf(head + "ex:a ex:p ( ex:b ex:c ) .", RdfFormat::kTurtle),
               ParseError);
  EXPECT_THROW(ParseRdf(head + "ex:a ex:p [ ex:q ex:c ] .", RdfFormat::kTurtle),
               ParseError);
  EXPECT_THROW(ParseRdf(head + "<< ex:a ex:p ex:b >> ex:q ex:c .",
                        RdfFormat::kTurtle),
               ParseError);
  EXPECT_THROW(ParseRdf("nope:a nope:p nope:b .", RdfFormat::kTurtle),
               ParseError);
}

TEST(RdfIoTest, PredeclaredPrefixes) {
  PrefixTable prefixes;
  prefixes.Add("ex", "http://ex.org/");
  auto triples = ParseRdf("ex:a ex:p ex:b .", RdfFormat::kTurtle, &prefixes);
  ASSERT_EQ(triples.size(), 1u);
  EXPECT_EQ(triples[0].object, Ex("b"));
}

TEST(RdfIoTest, NTriplesOutputIsSorted) {
  Graph g(Ex("g"));
  g.Insert(Ex("b"), Ex("p"), Ex("a"));
  g.Insert(Ex("a"), Ex("q"), Term::Literal("x"));
  g.Insert(Ex("a"), Ex("p"), Ex("z"));
  EXPECT_EQ(Serialize(g, RdfFormat::kNTriples),
            "<http://ex.org/a> <http://ex.org/p> <http://ex.org/z> .\n"
            "<http://ex.org/a> <http://ex.org/q> \"x\" .\n"
            "<http://ex.org/b> <http://ex.org/p> <http://ex.org/a> .\n");
}

TEST(RdfIoTest, FramesterIrisRoundTripByteIdentical) {
  PrefixTable prefixes;
  prefixes.Add("wn", "https://w3id.org/framester/wn/wn30/instances/synset-");
  prefixes.Add("vn", "https://w3id.org/framester/vn/vn31/data/");
  prefixes.Add("fschema", "https://w3id.org/framester/schema/");
  const Term synset = prefixes.ExpandIri("wn:risk-verb-2");
  const Term verb_class = prefixes.ExpandIri("vn:Risk_94000000");
  Graph g(Ex("g"));
  g.Insert(synset, prefixes.ExpandIri("fschema:senseKey"), verb_class);
  for (RdfFormat format : {RdfFormat::kNTriples, RdfFormat::kTurtle}) {
    std::string text = Serialize(g, format, &prefixes);
    Graph back = ParseGraph(text, format, Ex("g"));
    ASSERT_EQ(back.size(), 1u);
    const Triple &t = *back.begin();
    EXPECT_EQ(t.subject.value(),
              "https://w3id.org/framester/wn/wn30/instances/synset-risk-verb-2");
    EXPECT_EQ(t.object.value(),
              "https://w3id.org/framester/vn/vn31/data/Risk_94000000");
  }
  EXPECT_NE(Serialize(g, RdfFormat::kTurtle, &prefixes).find("wn:risk-verb-2"),
            std::string::npos);
}

// Property: load(serialize(g)) is isomorphic to g, for both formats.
TEST(RdfIoTest, RandomRoundTrip) {
  testing::RandomGraphs gen(20260101);
  PrefixTable prefixes;
  prefixes.Add("ex", "http://ex.org/");
  for (int i = 0; i < 100; ++i) {
    Graph g = gen.MakeGraph(50);
    for (RdfFormat format : {RdfFormat::kNTriples, RdfFormat::kTurtle}) {
      std::string text = Serialize(g, format, &prefixes);
      Graph back = ParseGraph(text, format, g.name());
      ASSERT_TRUE(testing::Isomorphic(g, back))
          << RdfFormatName(format) << " round trip failed on graph " << i
          << ":\n" << text;
    }
  }
}

}  // namespace
}  // namespace folkgraph
