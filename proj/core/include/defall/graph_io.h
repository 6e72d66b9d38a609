// Copyright 2026 The defall Authors.
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

// Edge-list documents.
//
//   # comment
//   a b          edge between labels a and b
//   v c          isolated (or additional) vertex c
//   U a          forced vertex; extension documents only
//
// Tokens are separated by whitespace. Vertex indices follow first
// appearance in the document. A line whose first token is `v` (or `U` in an
// extension document) is always a declaration, never an edge.

#ifndef DEFALL_GRAPH_IO_H_
#define DEFALL_GRAPH_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "defall/graph.h"

namespace defall {

// Throws ParseError (with line number) on self-loops, duplicate edges,
// `U` lines and any line that is not one of the forms above.
Graph ParseGraph(std::string_view text);

// Canonical form: one edge per line, smaller label first, lines sorted;
// then `v` lines for isolated vertices, sorted.
std::string SerializeGraph(const Graph& g);

// A graph document that may also carry `U <label>` lines.
struct GraphDocument {
  Graph graph;
  std::vector<std::string> forced_labels;
};

GraphDocument ParseGraphDocument(std::string_view text);

// Reads a whole file; throws ParseError(0, ...) if it cannot be opened.
std::string ReadFile(const std::string& path);

}  // namespace defall

#endif  // DEFALL_GRAPH_IO_H_
