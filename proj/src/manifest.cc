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

#include "folkgraph/manifest.h"

#include <filesystem>
#include <set>

#include "folkgraph/errors.h"
#include "folkgraph/text.h"

namespace folkgraph {

namespace fs = std::filesystem;

namespace {

std::string Resolve(const std::string &dir, std::string_view value) {
  fs::path p{std::string(value)};
  if (p.is_relative()) p = fs::path(dir) / p;
  return p.lexically_normal().string();
}

void RequireFile(const std::string &path, const std::string &what) {
  if (!fs::is_regular_file(path)) {
    throw InputError(what + " not found: " + path);
  }
}

}  // namespace

Manifest LoadManifest(const std::string &path) {
  Manifest m;
  m.path = path;
  m.dir = fs::absolute(fs::path(path)).parent_path().string();
  const std::string text = ReadFile(path);
  std::vector<std::string> raw_names;  // may use prefixes
  int line_no = 0;
  for (std::string line : Split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto where = [&] { return path + ":" + std::to_string(line_no) + ": "; };
    size_t eq = t.find('=');
    if (eq == std::string_view::npos) throw InputError(where() + "expected key = value");
    std::string key(Trim(t.substr(0, eq)));
    std::string value(Trim(t.substr(eq + 1)));
    if (value.empty()) throw InputError(where() + "empty value for " + key);
    if (key == "prefixes") {
      m.prefixes = Resolve(m.dir, value);
      RequireFile(m.prefixes, "prefix table");
    } else if (key == "graph") {
      std::vector<std::string> f;
      for (const std::string &w : Split(value, ' ')) {
        if (!Trim(w).empty()) f.emplace_back(Trim(w));
      }
      if (f.size() != 4) {
        throw InputError(where() + "expected: graph = <role> <format> <name> <path>");
      }
      if (f[0] != "lexical" && f[0] != "values" && f[0] != "triggers") {
        throw InputError(where() + "unknown graph role " + f[0]);
      }
      GraphFile g;
      g.role = f[0];
      g.format = ParseRdfFormat(f[1]);
      raw_names.push_back(f[2]);
      g.path = Resolve(m.dir, f[3]);
      RequireFile(g.path, "graph file");
      m.graphs.push_back(std::move(g));
    } else if (key == "values") {
      m.values = Resolve(m.dir, value);
      RequireFile(m.values, "value manifest");
    } else if (key == "candidates") {
      m.candidates = Resolve(m.dir, value);
      RequireFile(m.candidates, "candidate list");
    } else if (key == "dedupe_overrides") {
      m.dedupe_overrides = Resolve(m.dir, value);
      RequireFile(m.dedupe_overrides, "override file");
    } else if (key == "plan") {
      m.plans.push_back(Resolve(m.dir, value));
      RequireFile(m.plans.back(), "plan");
    } else if (key == "detector_mode") {
      if (value != "firstSense" && value != "allSenses") {
        throw InputError(where() + "detector_mode must be firstSense or allSenses");
      }
      m.detector_mode = value;
    } else if (key == "corpus") {
      m.corpus = Resolve(m.dir, value);
      RequireFile(m.corpus, "corpus");
    } else if (key == "label_map") {
      m.label_map = Resolve(m.dir, value);
      RequireFile(m.label_map, "label map");
    } else {
      throw InputError(where() + "unknown key " + key);
    }
  }
  if (m.prefixes.empty()) throw InputError(path + ": missing prefixes");
  PrefixTable prefixes = PrefixTable::Load(m.prefixes);
  std::set<Term> names;
  for (size_t i = 0; i < m.graphs.size(); ++i) {
    GraphFile &g = m.graphs[i];
    g.name = prefixes.ExpandIri(raw_names[i]);
    if (!names.insert(g.name).second) {
      throw InputError(path + ": duplicate graph name " + g.name.value());
    }
  }
  return m;
}

KnowledgeBase BuildKnowledgeBase(const Manifest &manifest,
                                 std::vector<GraphFile> extra) {
  KnowledgeBase kb;
  kb.prefixes = PrefixTable::Load(manifest.prefixes);
  std::vector<GraphFile> files = manifest.graphs;
  files.insert(files.end(), extra.begin(), extra.end());
  for (const GraphFile &g : files) {
    try {
      kb.store.Load(ReadFile(g.path), g.format, g.name, g.role, &kb.prefixes);
    } catch (const ParseError &e) {
      throw InputError(g.path + ": " + e.what());
    }
  }
  if (!manifest.values.empty()) {
    kb.values = BuildValueModel(
        ParseValueManifest(ReadFile(manifest.values), kb.prefixes));
    for (ValueModule m :
         {ValueModule::kMft, ValueModule::kBhv, ValueModule::kFolk}) {
      kb.store.AddGraph(kb.values.ModuleGraph(m), "values");
    }
  }
  kb.store.Freeze();
  return kb;
}

}  // namespace folkgraph
