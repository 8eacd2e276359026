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

// End-to-end pipeline driven by a manifest: knowledge base construction,
// trigger expansion, detection and evaluation. The command-line tool is a
// thin wrapper around RunCli.
//
// Workspace layout (all files UTF-8, graphs as sorted N-Triples):
//   kb/index.tsv            graph name, role, file
//   kb/NNN.nt               one file per knowledge-base graph
//   triggers/index.tsv      graph name, value, file
//   triggers/<value>.nt     emitted trigger graphs
//   reports/<value>.json    expansion reports
//   eval/                   evaluation tables and reports

#ifndef FOLKGRAPH_PIPELINE_H_
#define FOLKGRAPH_PIPELINE_H_

#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "folkgraph/detector.h"
#include "folkgraph/lexicon.h"
#include "folkgraph/manifest.h"
#include "folkgraph/quokka.h"
#include "folkgraph/store.h"

namespace folkgraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitConsistency = 3;

// --workspace flag, else $FOLKGRAPH_WORKSPACE, else <manifest dir>/.folkgraph.
std::string ResolveWorkspace(const Manifest &manifest, const std::string &flag);

// A new store with every graph (and role) of `base` plus `extra` under
// `role`; frozen.
Store CopyStore(const Store &base, std::vector<Graph> extra,
                const std::string &role);

struct ExpansionRun {
  std::string plan_path;
  ExpansionPlan plan;
  Quokka::Result result;
};

// Runs the given plans in order. Throws InputError for a plan whose value
// is unknown and ConsistencyError for stale selections.
std::vector<ExpansionRun> RunPlans(const KnowledgeBase &kb, const Lexicon &lexicon,
                                   const std::vector<std::string> &plan_paths);

// The manifest knowledge base plus the trigger graphs of all its plans.
KnowledgeBase BuildExpandedKb(const Manifest &manifest);

void WriteWorkspaceKb(const KnowledgeBase &kb, const std::string &workspace);
// Reads kb/ and, if requested, triggers/ back into a frozen store.
// Throws InputError if the workspace has not been built.
KnowledgeBase LoadWorkspaceKb(const Manifest &manifest,
                              const std::string &workspace, bool with_triggers);

struct DetectOptions {
  std::string input;
  std::string out_dir;
  int jobs = 1;
  std::optional<std::string> mode;  // overrides the manifest
  std::set<ActivationKind> kinds;   // empty: all
};

// Each command throws InputError / ConsistencyError on failure and prints
// a summary to `out`.
void CmdBuildKb(const Manifest &manifest, const std::string &workspace,
                std::ostream &out);
void CmdExpand(const Manifest &manifest, const std::string &workspace,
               const std::optional<std::string> &value, std::ostream &out);
void CmdDetect(const Manifest &manifest, const std::string &workspace,
               const DetectOptions &options, std::ostream &out);
void CmdEval(const Manifest &manifest, const std::string &workspace,
             const std::optional<std::string> &detections, std::ostream &out);

// Parses arguments (argv[0] is the program name), runs one command and
// returns its exit code: 0 success, 2 input or configuration error,
// 3 data-consistency error.
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

}  // namespace folkgraph

#endif  // FOLKGRAPH_PIPELINE_H_
