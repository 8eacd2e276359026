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

#ifndef FOLKGRAPH_ERRORS_H_
#define FOLKGRAPH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace folkgraph {

// Bad input or configuration: malformed files, unknown names, duplicates.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in an RDF document, with 1-based position.
class ParseError : public InputError {
 public:
  ParseError(const std::string &message, int line, int column)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Inputs are individually valid but inconsistent with each other
// (stale curation, detections for unknown sentences, ...).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace folkgraph

#endif  // FOLKGRAPH_ERRORS_H_
