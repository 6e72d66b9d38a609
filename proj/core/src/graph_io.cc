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

#include "defall/graph_io.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "defall/error.h"

namespace defall {
namespace {

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

GraphDocument Parse(std::string_view text, bool allow_forced) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::string> forced;

  auto intern = [&](std::string_view label) {
    auto [it, inserted] =
        index.emplace(std::string(label), static_cast<Vertex>(labels.size()));
    if (inserted) labels.emplace_back(label);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto tokens = Tokenize(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two labels, got " +
                                    std::to_string(tokens.size()) + " tokens");
    }
    if (tokens[0] == "v") {
      intern(tokens[1]);
      continue;
    }
    if (tokens[0] == "U") {
      if (!allow_forced) {
        throw ParseError(line_no, "unexpected forced-vertex line");
      }
      intern(tokens[1]);
      forced.emplace_back(tokens[1]);
      continue;
    }
    if (tokens[0] == tokens[1]) {
      throw ParseError(line_no, "self-loop at '" + std::string(tokens[0]) + "'");
    }
    const Vertex a = intern(tokens[0]);
    const Vertex b = intern(tokens[1]);
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      throw ParseError(line_no, "duplicate edge '" + std::string(tokens[0]) +
                                    "' -- '" + std::string(tokens[1]) + "'");
    }
    edges.emplace_back(a, b);
  }
  return GraphDocument{Graph(std::move(labels), edges), std::move(forced)};
}

}  // namespace

Graph ParseGraph(std::string_view text) {
  return Parse(text, /*allow_forced=*/false).graph;
}

GraphDocument ParseGraphDocument(std::string_view text) {
  return Parse(text, /*allow_forced=*/true);
}

std::string SerializeGraph(const Graph& g) {
  std::vector<std::pair<std::string, std::string>> lines;
  lines.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) {
    const std::string& a = g.label(u);
    const std::string& b = g.label(v);
    lines.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(lines.begin(), lines.end());

  std::vector<std::string> isolated;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) isolated.push_back(g.label(v));
  }
  std::sort(isolated.begin(), isolated.end());

  std::string out;
  for (const auto& [a, b] : lines) out += a + ' ' + b + '\n';
  for (const auto& label : isolated) out += "v " + label + '\n';
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace defall
