#!/usr/bin/env python3
# Copyright 2026 The Folkgraph Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generates the synthetic parts of data/fixture.

Writes the padding lexicon, the value manifest, the folk value candidate
list, the curated trigger graphs and the annotated corpus. The corpus is
solved as a small integer program so that its per-annotator and coverage
marginals hit fixed targets. Output is deterministic.

Usage: gen_fixtures.py [fixture_dir]
"""

import csv
import io
import itertools
import os
import random
import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

SEED = 20231107

HEADER = """@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix fschema: <https://w3id.org/framester/schema/> .
@prefix wn: <https://w3id.org/framester/wn/wn30/instances/synset-> .
@prefix lex: <https://w3id.org/framester/lexicon/entry/> .
@prefix fs: <https://w3id.org/framester/framenet/abox/frame/> .
@prefix vcore: <https://w3id.org/spice/SON/ValueCore#> .
@prefix mft: <https://w3id.org/spice/SON/HaidtValues#> .
@prefix folk: <https://w3id.org/spice/SON/FolkValues#> .
"""

# Folk value labels, one per distinct value.
FOLK_LABELS = """
Abundance Acceptance Accountability Accuracy Achievement Adaptability
Adventure Affection Agility Alertness Altruism Ambition Appreciation
Assertiveness Attentiveness Authenticity Autonomy Awareness Balance Beauty
Belonging Benevolence Bliss Boldness Brilliance Brotherhood Calmness Candor
Carefulness Caution Certainty Challenge Charisma Charity Chastity
Cheerfulness Civility Clarity Cleanliness Cleverness Closeness Comfort
Commitment Community Compassion Competence Composure Compromise
Concentration Confidence Conformity Connection Conscientiousness
Consideration Consistency Contentment Contribution Control Conviction
Cooperation Courage Courtesy Craftsmanship Creativity Credibility
Curiosity Daring Decency Decisiveness Dedication Delight Democracy
Dependability Depth Determination Devotion Dignity Diligence Discipline
Discovery Discretion Diversity Dominance Drive Duty Eagerness Ecology
Efficiency Elegance Empathy Empowerment Endurance Energy Enjoyment
Enthusiasm Equality Equanimity Ethics Excellence Excitement Expertise
Exploration Expressiveness Faith Fame Family Fearlessness Fidelity Fitness
Flexibility Focus Foresight Forgiveness Fortitude Fortune Freedom
Freshness Friendship Fulfillment Fun Gallantry Generosity Gentleness
Glory Goodness Grace Gratitude Gravitas Growth Guidance Happiness Hardiness
Harmony Health Helpfulness Heritage Heroism Holiness Honesty Honor Hope
Hospitality Humanity Humility Humor Imagination Impartiality Independence
Individuality Influence Ingenuity Innovation Insight Inspiration Integrity
Intelligence Intensity Intimacy Intuition Inventiveness Justice Kindness
Kinship Knowledge Leadership Learning Legacy Leisure Lightness Logic
Longevity Love Majesty Mastery Maturity Meaning Meekness Mercy
Mindfulness Moderation Modesty Motivation Neatness Nobility Nurture
Obedience Obligation Openness Optimism Order Organization Originality
Partnership Passion Patience Patriotism Peace Perfection Perseverance
Philanthropy Piety Playfulness Pleasure Poise Popularity Power
Practicality Precision Preparedness Presence Pride Privacy
Productivity Professionalism Progress Prominence Prosperity Prudence
Punctuality Rationality Reason Recognition Recreation Reflection
Relaxation Reliability Religion Reputation Resilience Resolve
Resourcefulness Respect Responsibility Restraint Reverence Rigor Risk
Romance Sacrifice Safety Sanctity Satisfaction Science Security
Sensitivity Serenity Service Sharing Silence Simplicity Sincerity Skill
Solidarity Sophistication Speed Spirituality Spontaneity Stability
Status Stewardship Strength Structure Success Support Surprise
Sustainability Sympathy Talent Teamwork Temperance Tenacity Thoroughness
Thoughtfulness Thrift Timeliness Tolerance Toughness Tradition
Transparency Trust Truth Understanding Uniqueness Unity Usefulness Variety
Virtue Vision Vitality Vulnerability Warmth Wealth Wellness Winning
Wisdom Wit Wonder Youthfulness Zeal Aspiration Audacity Chivalry Decorum
Diplomacy Elation Enlightenment Fellowship Grit Hygiene Idealism Mirth
Neighborliness
""".split()

# Synonymous candidate label -> label whose synset it shares.
SYNONYMS = {
    "Victory": "Winning", "Bravery": "Courage", "Valor": "Courage",
    "Joy": "Happiness", "Tranquility": "Serenity", "Frugality": "Thrift",
    "Industry": "Diligence", "Affluence": "Wealth", "Vigor": "Vitality",
    "Liveliness": "Vitality", "Persistence": "Perseverance",
    "Steadfastness": "Perseverance", "Candour": "Candor",
    "Truthfulness": "Honesty", "Faithfulness": "Fidelity",
    "Gladness": "Happiness", "Cheer": "Cheerfulness", "Kindliness": "Kindness",
    "Inventivity": "Inventiveness", "Wittiness": "Wit",
    "Thankfulness": "Gratitude", "Righteousness": "Virtue",
    "Fairmindedness": "Impartiality", "Sagacity": "Wisdom",
    "Prowess": "Skill", "Proficiency": "Competence", "Zest": "Zeal",
    "Ardor": "Passion", "Caring": "Compassion", "Comradeship": "Friendship",
    "Camaraderie": "Friendship", "Peacefulness": "Peace",
    "Safeness": "Safety", "Sturdiness": "Toughness",
}

# Labels scraped from two lists (same label, two provenance URLs).
DOUBLE_LISTED = ["Risk", "Courage", "Honesty", "Freedom"]

# Override file entries.
OVERRIDE_SPLIT = [("Brilliance", "Cleverness")]
OVERRIDE_MERGE = [("Meekness", "Modesty")]

TAXONOMY = {
    "Brilliance": ["Intelligence"], "Cleverness": ["Intelligence"],
    "Wit": ["Intelligence"], "Risk": ["Adventure"], "Daring": ["Adventure"],
    "Rigor": ["Discipline"], "Learning": ["Knowledge"],
    "Winning": ["Success"], "Thrift": ["Prudence"], "Serenity": ["Peace"],
}

ALIGN = {
    "Rigor": ["mft:Authority"], "Risk": ["bhv:Stimulation"],
    "Learning": ["bhv:SelfDirectionThought"], "Obedience": ["mft:Authority"],
    "Patriotism": ["mft:Loyalty"], "Compassion": ["mft:Care"],
    "Equality": ["mft:Fairness"], "Freedom": ["mft:Liberty"],
    "Tradition": ["bhv:Tradition"], "Wealth": ["bhv:PowerResources"],
    "Humility": ["bhv:Humility"], "Sanctity": ["mft:Purity"],
}

LISTS = [
    "https://values.example.org/lists/core-values",
    "https://values.example.org/lists/personal-values",
    "https://values.example.org/lists/virtues",
]

MFT = [("Care", "positive", "Harm"), ("Harm", "negative", "Care"),
       ("Fairness", "positive", "Cheating"), ("Cheating", "negative", "Fairness"),
       ("Loyalty", "positive", "Betrayal"), ("Betrayal", "negative", "Loyalty"),
       ("Authority", "positive", "Subversion"),
       ("Subversion", "negative", "Authority"),
       ("Purity", "positive", "Degradation"),
       ("Degradation", "negative", "Purity"),
       ("Liberty", "positive", "Oppression"),
       ("Oppression", "negative", "Liberty")]

# Refined circle in ring order, with higher-order parents.
BHV = [("SelfDirectionThought", ["OpennessToChange"]),
       ("SelfDirectionAction", ["OpennessToChange"]),
       ("Stimulation", ["OpennessToChange"]),
       ("Hedonism", ["OpennessToChange", "SelfEnhancement"]),
       ("Achievement", ["SelfEnhancement"]),
       ("PowerDominance", ["SelfEnhancement"]),
       ("PowerResources", ["SelfEnhancement"]),
       ("Face", ["SelfEnhancement", "Conservation"]),
       ("SecurityPersonal", ["Conservation"]),
       ("SecuritySocietal", ["Conservation"]),
       ("Tradition", ["Conservation"]),
       ("ConformityRules", ["Conservation"]),
       ("ConformityInterpersonal", ["Conservation"]),
       ("Humility", ["Conservation", "SelfTranscendence"]),
       ("BenevolenceDependability", ["SelfTranscendence"]),
       ("BenevolenceCaring", ["SelfTranscendence"]),
       ("UniversalismConcern", ["SelfTranscendence"]),
       ("UniversalismNature", ["SelfTranscendence"]),
       ("UniversalismTolerance", ["SelfTranscendence"])]
BHV_PARENTS = ["OpennessToChange", "SelfEnhancement", "Conservation",
               "SelfTranscendence"]

# Lemmas with hand-written entries in lexicon/*.ttl.
HAND_NOUNS = {"risk", "rigor", "learning"}

# Verbs whose first synset directly triggers an MFT value.
MFT_VERBS = {
    "protect": "Care", "shelter": "Care", "hurt": "Harm", "wound": "Harm",
    "reciprocate": "Fairness", "cheat": "Cheating", "bribe": "Cheating",
    "pledge": "Loyalty", "betray": "Betrayal", "obey": "Authority",
    "rebel": "Subversion", "defy": "Subversion", "sanctify": "Purity",
    "defile": "Degradation", "desecrate": "Degradation",
    "liberate": "Liberty", "oppress": "Oppression", "enslave": "Oppression",
}

# Folk labels whose synset triggers the value in the curated graph.
FOLK_TRIGGER_LABELS = [
    "Courage", "Honesty", "Kindness", "Wisdom", "Generosity", "Patience",
    "Freedom", "Tradition", "Friendship", "Gratitude", "Humility", "Justice",
    "Family", "Faith", "Ambition", "Curiosity", "Creativity", "Discipline",
    "Harmony", "Respect", "Safety", "Success", "Trust", "Wealth",
]

NEUTRAL_NOUNS = """table weather car phone city book road window river coffee
computer street movie music garden kitchen office train bus ticket price
tax report news picture story dog cat house door letter email meeting week
morning night summer winter country town market bank doctor video article
thread sandwich bicycle camera keyboard airport bridge""".split()
NEUTRAL_VERBS = """read write buy sell watch walk eat cook open close
call visit move wait talk paint carry fix wash park""".split()
SLANG = """imho lol smh tbh idk omg ngl fwiw afaik rofl brb irl ikr tfw jk
yolo fomo tldr""".split()


def camel(label):
  return label[0].upper() + label[1:]


def verb_forms(v):
  if v.endswith("e"):
    return [v + "s", v + "d", v[:-1] + "ing"]
  if v.endswith(("sh", "ch", "x", "s")):
    return [v + "es", v + "ed", v + "ing"]
  if v.endswith("y") and v[-2] not in "aeiou":
    return [v[:-1] + "ies", v[:-1] + "ied", v + "ing"]
  return [v + "s", v + "ed", v + "ing"]


IRREGULAR = {"read": ["reads", "reading"], "write": ["writes", "wrote", "written", "writing"],
             "buy": ["buys", "bought", "buying"], "sell": ["sells", "sold", "selling"],
             "eat": ["eats", "ate", "eaten", "eating"],
             "hurt": ["hurts", "hurting"], "wound": ["wounds", "wounded", "wounding"],
             "wait": ["waits", "waited", "waiting"], "visit": ["visits", "visited", "visiting"],
             "rebel": ["rebels", "rebelled", "rebelling"], "fix": ["fixes", "fixed", "fixing"],
             "betray": ["betrays", "betrayed", "betraying"], "obey": ["obeys", "obeyed", "obeying"],
             "defy": ["defies", "defied", "defying"], "sanctify": ["sanctifies", "sanctified", "sanctifying"],
             "carry": ["carries", "carried", "carrying"], "pledge": ["pledges", "pledged", "pledging"]}


def forms_of(v):
  return IRREGULAR.get(v, verb_forms(v))


def candidates():
  """Returns (label, definition, url) rows in scrape order."""
  rows = []
  for i, label in enumerate(FOLK_LABELS):
    rows.append((label, "the quality of %s" % label.lower(), LISTS[i % 2]))
  for label in DOUBLE_LISTED:
    rows.append((label, "valuing %s" % label.lower(), LISTS[2]))
  for syn in SYNONYMS:
    rows.append((syn, "the quality of %s" % syn.lower(), LISTS[2]))
  return rows


def synset_of(label):
  return SYNONYMS.get(label, label).lower()


def dedupe(rows):
  """Union-find over normalized labels and shared synsets with overrides."""
  parent = {}

  def find(x):
    while parent[x] != x:
      parent[x] = parent[parent[x]]
      x = parent[x]
    return x

  labels = []
  for label, _, _ in rows:
    key = label.lower()
    if key not in parent:
      parent[key] = key
      labels.append(key)
  senses = {}
  for key in labels:
    s = {synset_of(camel(key))}
    if key == "cleverness":
      s.add("brilliance")
    senses[key] = s
  split = {frozenset((a.lower(), b.lower())) for a, b in OVERRIDE_SPLIT}
  links = []
  for a, b in itertools.combinations(labels, 2):
    if senses[a] & senses[b] and frozenset((a, b)) not in split:
      links.append((a, b))
  links += [(a.lower(), b.lower()) for a, b in OVERRIDE_MERGE]
  for a, b in links:
    ra, rb = find(a), find(b)
    if ra != rb:
      # The earlier label in scrape order names the group.
      if labels.index(ra) < labels.index(rb):
        parent[rb] = ra
      else:
        parent[ra] = rb
  groups = {}
  for label, _, url in rows:
    root = find(label.lower())
    groups.setdefault(root, set()).add(url)
  return [(camel(r), sorted(groups[r])) for r in labels if r in groups and find(r) == r]


def write(path, text):
  os.makedirs(os.path.dirname(path), exist_ok=True)
  with open(path, "w", encoding="utf-8", newline="") as f:
    f.write(text)


def gen_values(root):
  out = io.StringIO()
  out.write("# id\tmodule\tpolarity\tdyadPartner\tparents\tprovenance\talignments\n")
  for name, pol, partner in MFT:
    out.write("mft:%s\tMFT\t%s\tmft:%s\t\t\t\n" % (name, pol, partner))
  for name in BHV_PARENTS:
    out.write("bhv:%s\tBHV\tunpolarized\t\t\t\t\n" % name)
  for name, parents in BHV:
    out.write("bhv:%s\tBHV\tunpolarized\t\t%s\t\t\n"
              % (name, "|".join("bhv:" + p for p in parents)))
  folk = dedupe(candidates())
  ids = {label for label, _ in folk}
  # Parents first so that the file is registrable top-down.
  order = sorted(folk, key=lambda f: 0 if f[0] not in TAXONOMY else 1)
  for label, urls in order:
    parents = [p for p in TAXONOMY.get(label, []) if p in ids]
    out.write("folk:%s\tFOLK\tunpolarized\t\t%s\t%s\t%s\n" % (
        label, "|".join("folk:" + p for p in parents), "|".join(urls),
        "|".join(ALIGN.get(label, []))))
  write(os.path.join(root, "values.tsv"), out.getvalue())

  cand = io.StringIO()
  cand.write("# label\tdefinition\tsource\n")
  for label, definition, url in candidates():
    cand.write("%s\t%s\t%s\n" % (label, definition, url))
  write(os.path.join(root, "folk_candidates.tsv"), cand.getvalue())

  ov = io.StringIO()
  ov.write("# Manual dedupe decisions; these win over lexicon synonymy.\n")
  for a, b in OVERRIDE_SPLIT:
    ov.write("split\t%s\t%s\n" % (a, b))
  for a, b in OVERRIDE_MERGE:
    ov.write("merge\t%s\t%s\n" % (a, b))
  write(os.path.join(root, "dedupe_overrides.tsv"), ov.getvalue())
  return folk


def gen_lexicon(root):
  out = io.StringIO()
  out.write("# Generated by tools/gen_fixtures.py; do not edit.\n")
  out.write(HEADER + "\n")
  seen = set()
  labels = list(FOLK_LABELS) + list(SYNONYMS)
  for label in labels:
    lemma = label.lower()
    if lemma in HAND_NOUNS or lemma in seen:
      continue
    seen.add(lemma)
    senses = ["wn:%s-noun-1" % synset_of(label)]
    if lemma == "cleverness":
      senses.append("wn:brilliance-noun-1")
    out.write("lex:%s-noun a fschema:LexicalEntry ; fschema:lemma \"%s\" ; "
              "fschema:pos fschema:Noun ;\n    %s .\n" % (
                  lemma, lemma,
                  " ; ".join("rdf:_%d %s" % (i + 1, s)
                             for i, s in enumerate(senses))))
  synsets = sorted({synset_of(l) for l in labels
                    if l.lower() not in HAND_NOUNS})
  for s in synsets:
    out.write("wn:%s-noun-1 a fschema:Synset .\n" % s)
  out.write("\n")
  for v in sorted(MFT_VERBS):
    out.write("lex:%s-verb a fschema:LexicalEntry ; fschema:lemma \"%s\" ; "
              "fschema:pos fschema:Verb ;\n    fschema:form %s ;\n"
              "    rdf:_1 wn:%s-verb-1 .\nwn:%s-verb-1 a fschema:Synset .\n" % (
                  v, v, " , ".join('"%s"' % f for f in forms_of(v)), v, v))
  out.write("\n")
  for n in NEUTRAL_NOUNS:
    out.write("lex:%s-noun a fschema:LexicalEntry ; fschema:lemma \"%s\" ; "
              "fschema:pos fschema:Noun ;\n    fschema:form \"%s\" ; "
              "rdf:_1 wn:%s-noun-1 .\nwn:%s-noun-1 a fschema:Synset .\n" % (
                  n, n, n + ("es" if n.endswith(("s", "x", "ch", "sh")) else "s"), n, n))
  for v in NEUTRAL_VERBS:
    out.write("lex:%s-verb a fschema:LexicalEntry ; fschema:lemma \"%s\" ; "
              "fschema:pos fschema:Verb ;\n    fschema:form %s ;\n"
              "    rdf:_1 wn:%s-verb-1 .\nwn:%s-verb-1 a fschema:Synset .\n" % (
                  v, v, " , ".join('"%s"' % f for f in forms_of(v)), v, v))
  write(os.path.join(root, "lexicon", "padding.ttl"), out.getvalue())


def gen_triggers(root, folk):
  folk_ids = {label for label, _ in folk}
  out = io.StringIO()
  out.write("# Generated by tools/gen_fixtures.py; do not edit.\n")
  out.write(HEADER + "\n")
  out.write("fs:Candidness vcore:triggers mft:Loyalty .\n")
  out.write("wn:national-adjective-1 vcore:triggers mft:Loyalty .\n")
  out.write("fs:RevealSecret vcore:triggers mft:Betrayal .\n")
  for v in sorted(MFT_VERBS):
    out.write("wn:%s-verb-1 vcore:triggers mft:%s .\n" % (v, MFT_VERBS[v]))
  write(os.path.join(root, "triggers", "mft_triggers.ttl"), out.getvalue())

  out = io.StringIO()
  out.write("# Generated by tools/gen_fixtures.py; do not edit.\n")
  out.write(HEADER + "\n")
  for label in FOLK_TRIGGER_LABELS:
    assert label in folk_ids, label
    out.write("wn:%s-noun-1 vcore:triggers folk:%s .\n"
              % (synset_of(label), label))
  write(os.path.join(root, "triggers", "taf_curated.ttl"), out.getvalue())


# Per-annotator targets: Tot, Agree, Agree+TM and NotConfident split.
ANNOTATORS = ["A00", "A01", "A02", "A03", "A04"]
TOT = [157, 137, 185, 302, 163]
AGREE = [52, 53, 65, 122, 6]
AGREE_TM = [62, 60, 75, 130, 63]
NC_IN_AGREE_TM = [28, 0, 0, 0, 0]
TOT_NC = [63, 136, 180, 296, 163]
VALUE_ROWS, TM_ROWS, NM_ROWS = 228, 153, 563
DETECTED_VALUE_ROWS, DETECTED_TMNM_ROWS = 220, 635
SENTENCES_3, SENTENCES_4 = 280, 26
FAILED_3, FAILED_4 = 16, 2

VA, VB, TM, NM = range(4)


def templates():
  out = []
  for k in (3, 4):
    for combo in itertools.combinations(range(5), k):
      for labs in itertools.product(range(4), repeat=k):
        if VB in labs and VA not in labs:
          continue
        majority = {l for l in set(labs) if labs.count(l) * 2 > k}
        moral_majority = any(l != NM for l in majority)
        rows = []
        for a, l in zip(combo, labs):
          agree = l in majority
          extra = not agree and l != NM and moral_majority
          rows.append((a, l, agree, extra))
        for d in (0, 1):
          out.append((k, tuple(rows), d))
  return out


def solve_corpus():
  """Integer program over sentence templates.

  Every target is a hard equality except the Agree column, which cannot be
  met together with the others under majority agreement; its total
  absolute deviation is minimized instead.
  """
  ts = templates()
  n = len(ts)
  rows_a, rhs, soft = [], [], []

  def add(coef, value, is_soft=False):
    rows_a.append(coef)
    rhs.append(value)
    soft.append(is_soft)

  add([1.0 if t[0] == 3 else 0.0 for t in ts], SENTENCES_3)
  add([1.0 if t[0] == 4 else 0.0 for t in ts], SENTENCES_4)
  for a in range(5):
    add([sum(1 for r in t[1] if r[0] == a) for t in ts], TOT[a])
    add([sum(1 for r in t[1] if r[0] == a and r[2]) for t in ts], AGREE[a],
        True)
    add([sum(1 for r in t[1] if r[0] == a and (r[2] or r[3])) for t in ts],
        AGREE_TM[a])
  add([sum(1 for r in t[1] if r[1] in (VA, VB)) for t in ts], VALUE_ROWS)
  add([sum(1 for r in t[1] if r[1] == TM) for t in ts], TM_ROWS)
  add([sum(1 for r in t[1] if r[1] == NM) for t in ts], NM_ROWS)
  add([t[2] * sum(1 for r in t[1] if r[1] in (VA, VB)) for t in ts],
      DETECTED_VALUE_ROWS)
  add([t[2] * sum(1 for r in t[1] if r[1] in (TM, NM)) for t in ts],
      DETECTED_TMNM_ROWS)
  n_slack = 2 * sum(soft)
  a = np.zeros((len(rows_a), n + n_slack))
  j = n
  for i, coef in enumerate(rows_a):
    a[i, :n] = coef
    if soft[i]:
      a[i, j], a[i, j + 1] = 1.0, -1.0
      j += 2
  b = np.array(rhs, dtype=float)
  rng = np.random.default_rng(SEED)
  # Slack dominates; the small random cost only breaks ties.
  cost = np.concatenate([rng.random(n) * 1e-3, np.ones(n_slack)])
  res = milp(cost, constraints=LinearConstraint(a, b, b),
             integrality=np.ones(n + n_slack), bounds=Bounds(0, 60),
             options={"time_limit": 120})
  if res.x is None:
    sys.exit("corpus program infeasible: " + res.message)
  x = np.rint(res.x).astype(int)
  sentences = []
  for t, count in zip(ts, x[:n]):
    sentences += [t] * int(count)
  return sentences

class TextMaker:
  def __init__(self, rng):
    self.rng = rng
    self.used = set()

  def unique(self, make):
    while True:
      text = make()
      if text not in self.used:
        self.used.add(text)
        return text

  def neutral(self):
    r = self.rng
    return self.unique(lambda: "The %s and the %s %s the %s near the %s." % (
        r.choice(NEUTRAL_NOUNS), r.choice(NEUTRAL_NOUNS),
        r.choice([forms_of(v)[0] for v in NEUTRAL_VERBS]),
        r.choice(NEUTRAL_NOUNS), r.choice(NEUTRAL_NOUNS)))

  def detected(self):
    r = self.rng

    def make():
      if r.random() < 0.5:
        trig = "they will %s the %s" % (r.choice(sorted(MFT_VERBS)),
                                        r.choice(NEUTRAL_NOUNS))
      else:
        trig = "it takes real %s" % r.choice(FOLK_TRIGGER_LABELS).lower()
      return "The %s by the %s, %s." % (r.choice(NEUTRAL_NOUNS),
                                        r.choice(NEUTRAL_NOUNS), trig)
    return self.unique(make)

  def failed(self):
    r = self.rng
    return self.unique(lambda: " ".join(r.sample(SLANG, 4)) + "!!")


def gen_corpus(root):
  rng = random.Random(SEED)
  sentences = solve_corpus()
  rng.shuffle(sentences)
  maker = TextMaker(rng)
  mft_names = [m[0] for m in MFT]
  records = []  # (text, annotator, label, agree_tm, graph)
  for i, (k, rows, d) in enumerate(sentences):
    text = maker.detected() if d else maker.neutral()
    va = mft_names[i % len(mft_names)]
    vb = mft_names[(i + 5) % len(mft_names)]
    names = {VA: va, VB: vb, TM: "Thin Morality", NM: "Non-Moral"}
    for a, l, agree, extra in rows:
      records.append([text, ANNOTATORS[a], names[l], agree or extra, True])
  for j in range(FAILED_3 + FAILED_4):
    k = 3 if j < FAILED_3 else 4
    text = maker.failed()
    for a in sorted(rng.sample(range(5), k)):
      label = rng.choice(["Care", "Thin Morality", "Non-Moral", "Non-Moral"])
      records.append([text, ANNOTATORS[a], label, False, False])
  rng.shuffle(records)

  # Confidence: NotConfident quotas first, the rest split between the two
  # confident levels.
  conf = [None] * len(records)
  for a, name in enumerate(ANNOTATORS):
    mine = [i for i, r in enumerate(records) if r[1] == name and r[4]]
    good = [i for i in mine if records[i][3]]
    rest = [i for i in mine if not records[i][3]]
    nc_total = TOT[a] - TOT_NC[a]
    for i in rng.sample(good, NC_IN_AGREE_TM[a]):
      conf[i] = "Not Confident"
    for i in rng.sample(rest, nc_total - NC_IN_AGREE_TM[a]):
      conf[i] = "Not Confident"
  for i in range(len(conf)):
    if conf[i] is None:
      if records[i][4]:
        conf[i] = rng.choice(["Confident", "Somewhat Confident"])
      else:
        conf[i] = rng.choice(["Confident", "Somewhat Confident",
                              "Not Confident"])

  def dump(only_graph):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "text", "annotator", "labels", "confidence"])
    for i, r in enumerate(records):
      if only_graph and not r[4]:
        continue
      w.writerow(["s%04d" % (i + 1), r[0], r[1], r[2], conf[i]])
    return buf.getvalue()

  write(os.path.join(root, "corpus", "mfrc_fixture.csv"), dump(False))
  write(os.path.join(root, "corpus", "mfrc_fred_subset.csv"), dump(True))

  labels = io.StringIO()
  labels.write("# label\tvalue\n")
  for name, _, _ in MFT:
    labels.write("%s\tmft:%s\n" % (name, name))
  labels.write("Thin Morality\tvcore:ThinMorality\n")
  labels.write("Non-Moral\tvcore:NonMoral\n")
  write(os.path.join(root, "corpus", "labels.tsv"), labels.getvalue())


def main():
  root = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
      os.path.dirname(os.path.abspath(__file__)), "..", "data", "fixture")
  for n in NEUTRAL_NOUNS + NEUTRAL_VERBS:
    assert camel(n) not in FOLK_LABELS and n not in MFT_VERBS, n
  folk = gen_values(root)
  gen_lexicon(root)
  gen_triggers(root, folk)
  gen_corpus(root)
  print("folk values: %d (from %d candidates)" % (len(folk), len(candidates())))


if __name__ == "__main__":
  main()
