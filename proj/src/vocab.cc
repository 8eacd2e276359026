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

#include "folkgraph/vocab.h"

#include <charconv>

namespace folkgraph::vocab {

int RdfMemberIndex(const Term &term) {
  if (!term.is_iri()) return 0;
  std::string_view v = term.value();
  if (!v.starts_with(kRdfNs)) return 0;
  v.remove_prefix(kRdfNs.size());
  if (v.size() < 2 || v[0] != '_') return 0;
  int n = 0;
  auto [ptr, ec] = std::from_chars(v.data() + 1, v.data() + v.size(), n);
  if (ec != std::errc() || ptr != v.data() + v.size() || n < 1) return 0;
  return n;
}

}  // namespace folkgraph::vocab
