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

#include "folkgraph/valuenet.h"

#include <gtest/gtest.h>

#include <set>

#include "folkgraph/errors.h"
#include "folkgraph/lexicon.h"
#include "folkgraph/manifest.h"
#include "folkgraph/vocab.h"
#include "test_util.h"

namespace folkgraph {
namespace {

using testing::FixturePath;

const char kFolk[] = "https://w3id.org/spice/SON/FolkValues#";
const char kMft[] = "https://w3id.org/spice/SON/HaidtValues#";

Term Folk(const std::string &l) { return Term::Iri(kFolk + l); }
Term Mft(const std::string &l) { return Term::Iri(kMft + l); }
Term Url(const std::string &l) { return Term::Iri("https://lists.example/" + l); }

ValueConcept FolkValue(const std::string &local, std::vector<Term> urls) {
  ValueConcept v;
  v.id = Folk(local);
  v.module = ValueModule::kFolk;
  v.provenance = std::move(urls);
  return v;
}

ValueConcept MftValue(const std::string &local, Polarity pol,
                      const std::string &partner) {
  ValueConcept v;
  v.id = Mft(local);
  v.module = ValueModule::kMft;
  v.polarity = pol;
  v.dyad_partner = Mft(partner);
  return v;
}

class FixtureKb : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    kb_ = new KnowledgeBase(
        BuildKnowledgeBase(LoadManifest(FixturePath("manifest.conf"))));
    lexicon_ = new Lexicon(Lexicon::Build(kb_->store));
  }
  static void TearDownTestSuite() {
    delete lexicon_;
    delete kb_;
  }
  static KnowledgeBase *kb_;
  static Lexicon *lexicon_;
};
KnowledgeBase *FixtureKb::kb_ = nullptr;
Lexicon *FixtureKb::lexicon_ = nullptr;

TEST(ValueModelTest, RegistersFolkValueWithProvenance) {
  ValueModel model;
  const ValueConcept &v = model.Register(FolkValue("Risk", {Url("b"), Url("a")}));
  EXPECT_EQ(v.provenance, (std::vector<Term>{Url("a"), Url("b")}));
  EXPECT_EQ(v.label, "Risk");
  EXPECT_EQ(v.concept_node(), v.situation_class_node());
}

TEST(ValueModelTest, DyadPartnersAreSymmetric) {
  ValueModel model;
  model.Register(MftValue("Loyalty", Polarity::kPositive, "Betrayal"));
  model.Register(MftValue("Betrayal", Polarity::kNegative, "Loyalty"));
  model.Validate();
  EXPECT_EQ(*model.Find(Mft("Loyalty"))->dyad_partner, Mft("Betrayal"));
  EXPECT_EQ(*model.Find(Mft("Betrayal"))->dyad_partner, Mft("Loyalty"));
}

TEST(ValueModelTest, RejectsInvalidRegistrations) {
  ValueModel model;
  EXPECT_THROW(model.Register(FolkValue("Empty", {})), InputError);
  model.Register(FolkValue("Risk", {Url("a")}));
  EXPECT_THROW(model.Register(FolkValue("Risk", {Url("b")})), InputError);

  ValueConcept lonely = MftValue("Care", Polarity::kPositive, "Harm");
  lonely.dyad_partner.reset();
  EXPECT_THROW(model.Register(lonely), InputError);

  model.Register(MftValue("Care", Polarity::kPositive, "Harm"));
  // Same polarity as its partner.
  EXPECT_THROW(model.Register(MftValue("Harm", Polarity::kPositive, "Care")),
               InputError);
  // Partner points elsewhere.
  EXPECT_THROW(model.Register(MftValue("Harm", Polarity::kNegative, "Purity")),
               InputError);
}

TEST(ValueModelTest, ValidateCatchesDanglingReferences) {
  ValueModel model;
  model.Register(MftValue("Care", Polarity::kPositive, "Harm"));
  EXPECT_THROW(model.Validate(), InputError);

  ValueModel other;
  ValueConcept child = FolkValue("Brilliance", {Url("a")});
  child.parents = {Folk("Intelligence")};
  other.Register(child);
  EXPECT_THROW(other.Validate(), InputError);
  other.Register(FolkValue("Intelligence", {Url("a")}));
  EXPECT_NO_THROW(other.Validate());
}

TEST(ValueModelTest, RejectsTaxonomyCycles) {
  ValueModel model;
  ValueConcept a = FolkValue("A", {Url("a")});
  a.parents = {Folk("B")};
  ValueConcept b = FolkValue("B", {Url("a")});
  b.parents = {Folk("C")};
  ValueConcept c = FolkValue("C", {Url("a")});
  c.parents = {Folk("A")};
  model.Register(a);
  model.Register(b);
  EXPECT_THROW(model.Register(c), InputError);
  ValueConcept self = FolkValue("D", {Url("a")});
  self.parents = {Folk("D")};
  EXPECT_THROW(model.Register(self), InputError);
}

TEST(ValueModelTest, AlignsFolkToMftOnly) {
  ValueModel model;
  model.Register(MftValue("Authority", Polarity::kPositive, "Subversion"));
  model.Register(FolkValue("Rigor", {Url("a")}));
  model.Register(FolkValue("Risk", {Url("a")}));
  model.Register(FolkValue("Winning", {Url("a")}));
  model.Align(Folk("Rigor"), Mft("Authority"));
  model.Align(Folk("Rigor"), Mft("Authority"));
  EXPECT_EQ(model.alignments().size(), 1u);
  EXPECT_EQ(model.Find(Folk("Rigor"))->aligned_to,
            std::vector<Term>{Mft("Authority")});
  EXPECT_THROW(model.Align(Folk("Risk"), Folk("Winning")), InputError);
  EXPECT_THROW(model.Align(Folk("Risk"), Mft("Nope")), InputError);
  EXPECT_THROW(model.Align(Mft("Authority"), Mft("Authority")), InputError);
}

TEST(TriggerEdgeTest, EmitAndReadBack) {
  Graph g(Term::Iri("urn:g"));
  TriggerEdge e{Term::Iri("urn:s"), Folk("Risk"), ActivationKind::kSynset,
                TriggerProvenance::kDerivedClosure, {Term::Iri("urn:f")}};
  EmitTriggerEdge(e, &g);
  EmitTriggerEdge(e, &g);
  EXPECT_TRUE(g.Contains({e.trigger, vocab::Vcore("triggers"), e.value}));
  EXPECT_EQ(ReadTriggerEdges(g), std::vector<TriggerEdge>{e});
}

TEST(CamelCaseTest, Words) {
  EXPECT_EQ(CamelCase("self direction"), "SelfDirection");
  EXPECT_EQ(CamelCase("Winning"), "Winning");
  EXPECT_EQ(CamelCase("non-moral"), "NonMoral");
}

TEST_F(FixtureKb, FixtureModuleSizes) {
  EXPECT_EQ(kb_->values.ValuesIn(ValueModule::kMft).size(), 12u);
  EXPECT_EQ(kb_->values.ValuesIn(ValueModule::kBhv).size(), 23u);
  EXPECT_EQ(kb_->values.BhvRing().size(), 19u);
  EXPECT_GE(kb_->values.ValuesIn(ValueModule::kFolk).size(), 300u);
  const ValueConcept *risk = kb_->values.Find(Folk("Risk"));
  ASSERT_NE(risk, nullptr);
  EXPECT_EQ(risk->provenance.size(), 2u);
}

TEST_F(FixtureKb, PunningAndProvenanceHoldInModuleGraphs) {
  for (ValueModule m : {ValueModule::kMft, ValueModule::kBhv,
                        ValueModule::kFolk}) {
    const Graph &g = kb_->store.GetGraph(ValueModel::ModuleGraphName(m));
    for (const ValueConcept *v : kb_->values.ValuesIn(m)) {
      EXPECT_TRUE(g.Contains({v->id, vocab::Rdf("type"), vocab::Vcore("Value")}));
      EXPECT_TRUE(g.Contains({v->id, vocab::Rdf("type"), vocab::Owl("Class")}));
      EXPECT_TRUE(g.Contains(
          {v->id, vocab::Rdfs("subClassOf"), vocab::Vcore("ValueSituation")}));
      if (m == ValueModule::kFolk) {
        Pattern p{v->id, vocab::Prov("wasAttributedTo"), Var("u"), g.name()};
        EXPECT_FALSE(kb_->store.Match(p).empty()) << v->id.value();
      }
    }
  }
}

TEST_F(FixtureKb, DyadSymmetry) {
  for (const ValueConcept *v : kb_->values.ValuesIn(ValueModule::kMft)) {
    ASSERT_TRUE(v->dyad_partner);
    const ValueConcept *p = kb_->values.Find(*v->dyad_partner);
    ASSERT_NE(p, nullptr);
    EXPECT_EQ(*p->dyad_partner, v->id);
    EXPECT_NE(p->polarity, v->polarity);
  }
}

TEST_F(FixtureKb, TaxonomyIsAcyclic) {
  // Independent check: repeatedly strip values with no remaining parents.
  std::map<Term, std::set<Term>> pending;
  for (const ValueConcept *v : kb_->values.Values()) {
    pending[v->id] = {v->parents.begin(), v->parents.end()};
  }
  bool progress = true;
  while (progress && !pending.empty()) {
    progress = false;
    for (auto it = pending.begin(); it != pending.end();) {
      if (it->second.empty()) {
        Term done = it->first;
        it = pending.erase(it);
        for (auto &[id, parents] : pending) parents.erase(done);
        progress = true;
      } else {
        ++it;
      }
    }
  }
  EXPECT_TRUE(pending.empty());
}

TEST_F(FixtureKb, ModelRoundTripsThroughStore) {
  ValueModel back = ValueModel::FromStore(kb_->store);
  ASSERT_EQ(back.size(), kb_->values.size());
  for (const ValueConcept *v : kb_->values.Values()) {
    const ValueConcept *w = back.Find(v->id);
    ASSERT_NE(w, nullptr);
    EXPECT_EQ(*w, *v);
  }
  EXPECT_EQ(back.BhvRing(), kb_->values.BhvRing());
  EXPECT_EQ(back.alignments(), kb_->values.alignments());
}

TEST_F(FixtureKb, DedupeMergesWinningAndVictory) {
  std::vector<ValueCandidate> c = {{"Winning", "", Url("one")},
                                   {"Victory", "", Url("two")}};
  DedupeResult r = DedupeCandidates(c, *lexicon_, {}, kFolk);
  ASSERT_EQ(r.values.size(), 1u);
  EXPECT_EQ(r.values[0].id, Folk("Winning"));
  EXPECT_EQ(r.values[0].provenance, (std::vector<Term>{Url("one"), Url("two")}));
  ASSERT_EQ(r.merges.size(), 1u);
  EXPECT_EQ(r.merges[0].absorbed, "Victory");
}

TEST_F(FixtureKb, DedupeKeepsDisjointLabels) {
  std::vector<ValueCandidate> c = {{"Courage", "", Url("a")},
                                   {"Wisdom", "", Url("a")},
                                   {"Unheard Of", "", Url("a")}};
  EXPECT_EQ(DedupeCandidates(c, *lexicon_, {}, kFolk).values.size(), 3u);
}

TEST_F(FixtureKb, DedupeOverridesWin) {
  std::vector<ValueCandidate> c = {{"Brilliance", "", Url("a")},
                                   {"Cleverness", "", Url("b")},
                                   {"Meekness", "", Url("c")},
                                   {"Modesty", "", Url("d")}};
  EXPECT_EQ(DedupeCandidates(c, *lexicon_, {}, kFolk).values.size(), 3u);
  DedupeOverrides o;
  o.split = {{"Brilliance", "Cleverness"}};
  o.merge = {{"Meekness", "Modesty"}};
  EXPECT_EQ(DedupeCandidates(c, *lexicon_, o, kFolk).values.size(), 3u);
  o.merge.clear();
  EXPECT_EQ(DedupeCandidates(c, *lexicon_, o, kFolk).values.size(), 4u);
}

// Oracle: naive fixpoint merging over noun senses fetched with BGPs.
std::vector<std::set<std::string>> NaiveGroups(
    const Store &store, const std::vector<ValueCandidate> &cands,
    const DedupeOverrides &o) {
  auto senses = [&](const std::string &lemma) {
    std::vector<Pattern> bgp = {
        {Var("e"), vocab::Fschema("lemma"), Term::Literal(lemma)},
        {Var("e"), vocab::Fschema("pos"), vocab::Fschema("Noun")},
        {Var("e"), Var("r"), Var("s")},
        {Var("s"), vocab::Rdf("type"), vocab::Fschema("Synset")}};
    std::set<Term> out;
    for (const Binding &b : store.MatchBGP(bgp)) out.insert(b.at("s"));
    return out;
  };
  auto lower = [](std::string s) {
    for (char &ch : s) ch = static_cast<char>(std::tolower(ch));
    return s;
  };
  std::vector<std::set<std::string>> groups;
  std::map<std::string, std::set<Term>> sense_of;
  for (const ValueCandidate &c : cands) {
    std::string k = lower(c.label);
    if (sense_of.count(k)) continue;
    sense_of[k] = senses(k);
    groups.push_back({k});
  }
  auto split = [&](const std::string &a, const std::string &b) {
    for (const auto &[x, y] : o.split) {
      if ((lower(x) == a && lower(y) == b) || (lower(x) == b && lower(y) == a)) {
        return true;
      }
    }
    return false;
  };
  auto linked = [&](const std::set<std::string> &g, const std::set<std::string> &h) {
    for (const std::string &a : g) {
      for (const std::string &b : h) {
        for (const auto &[x, y] : o.merge) {
          if ((lower(x) == a && lower(y) == b) || (lower(x) == b && lower(y) == a)) {
            return true;
          }
        }
        if (split(a, b)) continue;
        for (const Term &s : sense_of[a]) {
          if (sense_of[b].count(s)) return true;
        }
      }
    }
    return false;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < groups.size() && !changed; ++i) {
      for (size_t j = i + 1; j < groups.size() && !changed; ++j) {
        if (linked(groups[i], groups[j])) {
          groups[i].insert(groups[j].begin(), groups[j].end());
          groups.erase(groups.begin() + j);
          changed = true;
        }
      }
    }
  }
  return groups;
}

TEST_F(FixtureKb, FixtureCandidatesDedupeToManifest) {
  auto cands = ParseValueCandidates(ReadFile(FixturePath("folk_candidates.tsv")));
  auto overrides =
      ParseDedupeOverrides(ReadFile(FixturePath("dedupe_overrides.tsv")));
  ASSERT_EQ(cands.size(), 350u);
  DedupeResult r = DedupeCandidates(cands, *lexicon_, overrides, kFolk);
  EXPECT_GE(r.values.size(), 300u);
  EXPECT_EQ(r.values.size(), NaiveGroups(kb_->store, cands, overrides).size());

  // The shipped manifest is the dedupe output.
  std::set<Term> manifest_ids;
  for (const ValueConcept *v : kb_->values.ValuesIn(ValueModule::kFolk)) {
    manifest_ids.insert(v->id);
  }
  std::set<Term> dedupe_ids;
  for (const ValueConcept &v : r.values) {
    dedupe_ids.insert(v.id);
    EXPECT_EQ(kb_->values.Find(v.id)->provenance, v.provenance);
  }
  EXPECT_EQ(dedupe_ids, manifest_ids);
}

TEST(ValueManifestTest, ParsesColumns) {
  PrefixTable p;
  p.Add("mft", kMft);
  p.Add("folk", kFolk);
  auto m = ParseValueManifest(
      "# header\n"
      "mft:Care\tMFT\tpositive\tmft:Harm\t\t\t\n"
      "mft:Harm\tMFT\tnegative\tmft:Care\n"
      "folk:X\tFOLK\t\t\t\thttps://a.example/|https://b.example/\tmft:Care\tEx\n",
      p);
  ASSERT_EQ(m.values.size(), 3u);
  EXPECT_EQ(m.values[2].provenance.size(), 2u);
  EXPECT_EQ(m.values[2].label, "Ex");
  ASSERT_EQ(m.alignments.size(), 1u);
  ValueModel model = BuildValueModel(m);
  EXPECT_EQ(model.Find(Folk("X"))->aligned_to, std::vector<Term>{Mft("Care")});
  EXPECT_THROW(ParseValueManifest("mft:Care\tNOPE\n", p), InputError);
  EXPECT_THROW(ParseValueManifest("mft:Care\n", p), InputError);
}

}  // namespace
}  // namespace folkgraph
