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

#include "folkgraph/pipeline.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>

#include "CLI11.hpp"
#include "folkgraph/errors.h"
#include "folkgraph/evalharness.h"
#include "folkgraph/rdf_io.h"
#include "folkgraph/text.h"

namespace folkgraph {

namespace fs = std::filesystem;

namespace {

std::string Path(const std::string &dir, const std::string &name) {
  return (fs::path(dir) / name).string();
}

void MakeDirs(const std::string &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create directory " + dir + ": " + ec.message());
}

std::string FileStem(const PrefixTable &prefixes, const Term &value) {
  return Slug(prefixes.Display(value));
}

std::vector<std::vector<std::string>> ReadIndex(const std::string &path) {
  std::vector<std::vector<std::string>> rows;
  for (const std::string &line : Split(ReadFile(path), '\n')) {
    if (Trim(line).empty() || line[0] == '#') continue;
    rows.push_back(Split(line, '\t'));
  }
  return rows;
}

void WriteIndex(const std::string &path, const std::string &header,
                std::vector<std::vector<std::string>> rows) {
  std::sort(rows.begin(), rows.end());
  std::string out = "# " + header + "\n";
  for (const auto &r : rows) out += Join(r, "\t") + "\n";
  WriteFile(path, out);
}

std::vector<std::string> CheckedRow(const std::vector<std::string> &row,
                                    size_t n, const std::string &index) {
  if (row.size() != n) throw InputError("corrupt workspace index " + index);
  return row;
}

}  // namespace

std::string ResolveWorkspace(const Manifest &manifest, const std::string &flag) {
  if (!flag.empty()) return flag;
  if (const char *env = std::getenv("FOLKGRAPH_WORKSPACE"); env && *env) {
    return env;
  }
  return Path(manifest.dir, ".folkgraph");
}

Store CopyStore(const Store &base, std::vector<Graph> extra,
                const std::string &role) {
  Store store;
  for (const Term &name : base.GraphNames()) {
    store.AddGraph(base.GetGraph(name), base.GraphRole(name));
  }
  for (Graph &g : extra) store.AddGraph(std::move(g), role);
  store.Freeze();
  return store;
}

std::vector<ExpansionRun> RunPlans(const KnowledgeBase &kb, const Lexicon &lexicon,
                                   const std::vector<std::string> &plan_paths) {
  Quokka quokka(kb.store, lexicon, kb.prefixes);
  std::vector<ExpansionRun> runs;
  std::set<Term> seen;
  for (const std::string &path : plan_paths) {
    ExpansionRun run;
    run.plan_path = path;
    run.plan = LoadPlan(path, kb.prefixes);
    if (!seen.insert(run.plan.value).second) {
      throw InputError(path + ": second plan for " +
                       kb.prefixes.Display(run.plan.value));
    }
    try {
      run.result = quokka.RunPlan(run.plan, &kb.values);
    } catch (const InputError &e) {
      throw InputError(path + ": " + e.what());
    }
    runs.push_back(std::move(run));
  }
  return runs;
}

KnowledgeBase BuildExpandedKb(const Manifest &manifest) {
  KnowledgeBase base = BuildKnowledgeBase(manifest);
  Lexicon lexicon = Lexicon::Build(base.store);
  std::vector<Graph> graphs;
  for (ExpansionRun &run : RunPlans(base, lexicon, manifest.plans)) {
    if (run.result.graph) graphs.push_back(std::move(*run.result.graph));
  }
  KnowledgeBase kb;
  kb.prefixes = base.prefixes;
  kb.values = base.values;
  kb.store = CopyStore(base.store, std::move(graphs), "triggers");
  return kb;
}

void WriteWorkspaceKb(const KnowledgeBase &kb, const std::string &workspace) {
  const std::string dir = Path(workspace, "kb");
  std::error_code ec;
  fs::remove_all(dir, ec);
  MakeDirs(dir);
  std::vector<std::vector<std::string>> rows;
  int n = 0;
  for (const Term &name : kb.store.GraphNames()) {
    char file[32];
    std::snprintf(file, sizeof(file), "%03d.nt", n++);
    WriteFile(Path(dir, file),
              Serialize(kb.store.GetGraph(name), RdfFormat::kNTriples));
    rows.push_back({name.value(), kb.store.GraphRole(name), file});
  }
  WriteIndex(Path(dir, "index.tsv"), "graph\trole\tfile", std::move(rows));
}

KnowledgeBase LoadWorkspaceKb(const Manifest &manifest,
                              const std::string &workspace, bool with_triggers) {
  const std::string dir = Path(workspace, "kb");
  const std::string index = Path(dir, "index.tsv");
  if (!fs::exists(index)) {
    throw InputError("workspace " + workspace +
                     " has not been built; run build-kb first");
  }
  KnowledgeBase kb;
  kb.prefixes = PrefixTable::Load(manifest.prefixes);
  std::vector<Term> value_graphs;
  for (const auto &raw : ReadIndex(index)) {
    auto row = CheckedRow(raw, 3, index);
    Term name = Term::Iri(row[0]);
    kb.store.Load(ReadFile(Path(dir, row[2])), RdfFormat::kNTriples, name, row[1]);
    if (row[1] == "values") value_graphs.push_back(name);
  }
  const std::string triggers = Path(Path(workspace, "triggers"), "index.tsv");
  if (with_triggers && fs::exists(triggers)) {
    for (const auto &raw : ReadIndex(triggers)) {
      auto row = CheckedRow(raw, 3, triggers);
      Term name = Term::Iri(row[0]);
      kb.store.Load(ReadFile(Path(Path(workspace, "triggers"), row[2])),
                    RdfFormat::kNTriples, name, "triggers");
    }
  }
  kb.store.Freeze();
  kb.values = ValueModel::FromStore(kb.store, value_graphs);
  return kb;
}

void CmdBuildKb(const Manifest &manifest, const std::string &workspace,
                std::ostream &out) {
  KnowledgeBase kb = BuildKnowledgeBase(manifest);
  Lexicon lexicon = Lexicon::Build(kb.store);
  MakeDirs(workspace);
  WriteWorkspaceKb(kb, workspace);
  out << "workspace: " << workspace << "\n";
  out << "graphs: " << kb.store.GraphNames().size() << " ("
      << kb.store.TotalTriples() << " triples)\n";
  for (const Term &name : kb.store.GraphNames()) {
    out << "  " << kb.prefixes.Display(name) << "  " << kb.store.GraphRole(name)
        << "  " << kb.store.GetGraph(name).size() << "\n";
  }
  out << "values: " << kb.values.size();
  for (ValueModule m : {ValueModule::kMft, ValueModule::kBhv, ValueModule::kFolk}) {
    out << "  " << ValueModuleName(m) << "=" << kb.values.ValuesIn(m).size();
  }
  out << "\nlexical entries: " << lexicon.entry_count() << "\n";
}

void CmdExpand(const Manifest &manifest, const std::string &workspace,
               const std::optional<std::string> &value, std::ostream &out) {
  KnowledgeBase kb = LoadWorkspaceKb(manifest, workspace, false);
  Lexicon lexicon = Lexicon::Build(kb.store);
  std::vector<std::string> plans = manifest.plans;
  if (value) {
    Term v = kb.prefixes.ExpandIri(*value);
    if (!kb.values.Contains(v)) throw InputError("unknown value: " + *value);
    plans.clear();
    for (const std::string &p : manifest.plans) {
      if (LoadPlan(p, kb.prefixes).value == v) plans.push_back(p);
    }
    if (plans.empty()) throw InputError("no expansion plan for " + *value);
  }
  std::vector<ExpansionRun> runs = RunPlans(kb, lexicon, plans);

  const std::string tdir = Path(workspace, "triggers");
  const std::string rdir = Path(workspace, "reports");
  std::vector<std::vector<std::string>> index;
  std::error_code ec;
  if (!value) {
    fs::remove_all(tdir, ec);
    fs::remove_all(rdir, ec);
  } else if (fs::exists(Path(tdir, "index.tsv"))) {
    index = ReadIndex(Path(tdir, "index.tsv"));
  }
  MakeDirs(tdir);
  MakeDirs(rdir);
  int graphs = 0;
  for (const ExpansionRun &run : runs) {
    const std::string stem = FileStem(kb.prefixes, run.plan.value);
    const std::string value_iri = run.plan.value.value();
    std::erase_if(index, [&](const auto &row) {
      return row.size() > 1 && row[1] == value_iri;
    });
    WriteFile(Path(rdir, stem + ".json"), run.result.report.ToJson(kb.prefixes));
    std::error_code ignore;
    fs::remove(Path(tdir, stem + ".nt"), ignore);
    out << kb.prefixes.Display(run.plan.value) << ": ";
    if (run.result.graph) {
      ++graphs;
      WriteFile(Path(tdir, stem + ".nt"),
                Serialize(*run.result.graph, RdfFormat::kNTriples));
      index.push_back({run.result.graph->name().value(), value_iri, stem + ".nt"});
      out << run.result.report.edges.size() << " trigger edges";
    } else {
      out << "no seeds, no graph";
    }
    out << "\n";
    std::vector<QueryKind> pending = run.result.report.ProposeOnly();
    if (!pending.empty()) {
      std::vector<std::string> names;
      for (QueryKind k : pending) names.push_back(QueryKindName(k));
      out << "  propose-only (no selection): " << Join(names, ", ") << "\n";
    }
  }
  WriteIndex(Path(tdir, "index.tsv"), "graph\tvalue\tfile", std::move(index));
  out << "plans: " << runs.size() << ", trigger graphs written: " << graphs << "\n";
}

void CmdDetect(const Manifest &manifest, const std::string &workspace,
               const DetectOptions &options, std::ostream &out) {
  KnowledgeBase kb = LoadWorkspaceKb(manifest, workspace, true);
  Lexicon lexicon = Lexicon::Build(kb.store);
  DetectorOptions dopt;
  dopt.mode = ParseSenseMode(options.mode.value_or(manifest.detector_mode));
  dopt.kinds = options.kinds;
  Detector detector(kb.store, lexicon, kb.prefixes, dopt);
  std::vector<SentenceInput> inputs = ParseSentenceInput(ReadFile(options.input));
  std::map<std::string, std::string> files;
  for (const SentenceInput &in : inputs) {
    if (Trim(in.text).empty()) throw InputError("empty text for sentence " + in.id);
    std::string file = Slug(in.id) + ".nt";
    auto [it, fresh] = files.emplace(file, in.id);
    if (!fresh) {
      throw InputError("sentence ids " + it->second + " and " + in.id +
                       " map to the same file");
    }
  }
  std::vector<DetectionResult> results =
      detector.DetectAll(inputs, std::max(1, options.jobs));

  MakeDirs(options.out_dir);
  std::string summary;
  int graphs = 0, detected = 0;
  for (const DetectionResult &r : results) {
    summary += detector.SummaryJson(r);
    if (r.no_graph) continue;
    ++graphs;
    detected += !r.values.empty();
    WriteFile(Path(options.out_dir, Slug(r.id) + ".nt"),
              Serialize(r.sentence.graph, RdfFormat::kNTriples));
  }
  WriteFile(Path(options.out_dir, "detections.jsonl"), summary);
  out << "sentences: " << results.size() << ", graphs: " << graphs
      << ", noGraph: " << results.size() - graphs
      << ", with values: " << detected << "\n";
  out << "summary: " << Path(options.out_dir, "detections.jsonl") << "\n";
}

void CmdEval(const Manifest &manifest, const std::string &workspace,
             const std::optional<std::string> &detections, std::ostream &out) {
  if (manifest.corpus.empty()) throw InputError("manifest declares no corpus");
  if (manifest.label_map.empty()) throw InputError("manifest declares no label_map");
  PrefixTable prefixes = PrefixTable::Load(manifest.prefixes);
  LabelMap labels = LabelMap::Parse(ReadFile(manifest.label_map), prefixes);
  CorpusLoad corpus = LoadCorpus(manifest.corpus,
                                 CorpusFormatForPath(manifest.corpus), labels);
  if (corpus.skipped > 0) {
    out << "skipped " << corpus.skipped << " malformed rows\n";
    for (const std::string &w : corpus.warnings) out << "  " << w << "\n";
  }
  const std::string dir = Path(workspace, "eval");
  MakeDirs(dir);
  if (!detections) {
    std::vector<AnnotatorRow> rows = AnnotatorStats(corpus.rows);
    std::string t1 = FormatTable1(rows);
    WriteFile(Path(dir, "table1.txt"), t1);
    WriteFile(Path(dir, "annotators.json"), AnnotatorJson(rows));
    out << "Table 1 (all " << corpus.rows.size() << " rows)\n" << t1;
    return;
  }
  CoverageReport report = CoverageStats(
      corpus.rows, ParseDetections(ReadFile(*detections), prefixes));
  std::string t1 = FormatTable1(report.annotators);
  std::string t2 = FormatTable2(report);
  WriteFile(Path(dir, "table1.txt"), t1);
  WriteFile(Path(dir, "table2.txt"), t2);
  WriteFile(Path(dir, "report.json"), ReportJson(report, prefixes));
  WriteFile(Path(dir, "histogram.tsv"), HistogramTsv(report, prefixes));
  out << "Table 1 (" << report.graphs << " graph rows)\n" << t1 << "\n";
  out << "Table 2\n" << t2;
}

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Value knowledge graph pipeline", "folkgraph"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string manifest_path, workspace;
  app.add_option("--manifest", manifest_path, "pipeline manifest")->required();
  app.add_option("--workspace", workspace,
                 "workspace directory (default: $FOLKGRAPH_WORKSPACE or "
                 "<manifest dir>/.folkgraph)");

  CLI::App *build = app.add_subcommand("build-kb", "load and validate the KB");
  CLI::App *expand = app.add_subcommand("expand", "run expansion plans");
  std::string value;
  bool all = false;
  auto *value_opt = expand->add_option("--value", value, "value IRI or name");
  auto *all_opt = expand->add_flag("--all", all, "run every plan");
  value_opt->excludes(all_opt);

  CLI::App *detect = app.add_subcommand("detect", "detect values in sentences");
  DetectOptions dopt;
  std::string mode, kinds;
  detect->add_option("--input", dopt.input, "sentences: text, JSONL or CSV")
      ->required();
  detect->add_option("--out", dopt.out_dir, "output directory")->required();
  detect->add_option("--jobs", dopt.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  detect->add_option("--mode", mode, "firstSense or allSenses");
  detect->add_option("--kinds", kinds,
                     "comma-separated trigger kinds that count as detection");

  CLI::App *eval = app.add_subcommand("eval", "corpus statistics");
  std::string detections;
  eval->add_option("--detections", detections, "detector JSONL summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    Manifest manifest = LoadManifest(manifest_path);
    std::string ws = ResolveWorkspace(manifest, workspace);
    if (build->parsed()) {
      CmdBuildKb(manifest, ws, out);
    } else if (expand->parsed()) {
      if (value.empty() && !all) throw InputError("expand needs --value or --all");
      CmdExpand(manifest, ws,
                value.empty() ? std::nullopt : std::optional<std::string>(value),
                out);
    } else if (detect->parsed()) {
      if (!mode.empty()) dopt.mode = mode;
      for (const std::string &k : Split(kinds, ',')) {
        if (Trim(k).empty()) continue;
        auto kind = ParseActivationKind(Trim(k));
        if (!kind) throw InputError("unknown activation kind: " + k);
        dopt.kinds.insert(*kind);
      }
      CmdDetect(manifest, ws, dopt, out);
    } else if (eval->parsed()) {
      CmdEval(manifest, ws,
              detections.empty() ? std::nullopt
                                 : std::optional<std::string>(detections),
              out);
    }
  } catch (const ConsistencyError &e) {
    err << "error: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const InputError &e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace folkgraph
