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

// The pipeline manifest and the knowledge base it describes.

#ifndef FOLKGRAPH_MANIFEST_H_
#define FOLKGRAPH_MANIFEST_H_

#include <optional>
#include <string>
#include <vector>

#include "folkgraph/graph.h"
#include "folkgraph/prefix_table.h"
#include "folkgraph/rdf_io.h"
#include "folkgraph/store.h"
#include "folkgraph/term.h"
#include "folkgraph/valuenet.h"

namespace folkgraph {

struct GraphFile {
  std::string path;  // absolute, or relative to the working directory
  RdfFormat format = RdfFormat::kTurtle;
  Term name;
  std::string role;  // "lexical", "values" or "triggers"
};

// Line-oriented "key = value" file; '#' starts a comment line. Keys:
//   prefixes = <path>
//   graph = <role> <format> <graph name> <path>     (repeatable)
//   values = <path>
//   candidates = <path>, dedupe_overrides = <path>
//   plan = <path>                                   (repeatable)
//   detector_mode = firstSense | allSenses
//   corpus = <path>, label_map = <path>
// Relative paths are resolved against the manifest's directory.
struct Manifest {
  std::string path;
  std::string dir;
  std::string prefixes;
  std::vector<GraphFile> graphs;
  std::string values;
  std::string candidates;
  std::string dedupe_overrides;
  std::vector<std::string> plans;
  std::string detector_mode = "firstSense";
  std::string corpus;
  std::string label_map;
};

// Throws InputError on syntax errors, unknown keys, duplicate graph names
// or referenced files that do not exist.
Manifest LoadManifest(const std::string &path);

struct KnowledgeBase {
  PrefixTable prefixes;
  ValueModel values;
  Store store;
};

// Loads every manifest graph and the value module graphs, plus any
// `extra` graphs (e.g. emitted trigger graphs), then freezes the store.
KnowledgeBase BuildKnowledgeBase(const Manifest &manifest,
                                 std::vector<GraphFile> extra = {});

}  // namespace folkgraph

#endif  // FOLKGRAPH_MANIFEST_H_
