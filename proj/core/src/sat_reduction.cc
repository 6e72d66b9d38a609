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

#include "defall/sat_reduction.h"

#include <algorithm>
#include <charconv>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

#include "defall/error.h"
#include "defall/graph_io.h"

namespace defall {
namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<long long> ToInt(std::string_view token) {
  long long value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace

void ValidateCnf(const MonotoneCnf& phi) {
  if (phi.variables < 1) throw PreconditionError("formula has no variables");
  std::vector<int> occurrences(static_cast<std::size_t>(phi.variables) + 1, 0);
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    const auto& c = phi.clauses[j];
    for (int x : c) {
      if (x < 1 || x > phi.variables) {
        throw PreconditionError("clause " + std::to_string(j + 1) +
                                " uses unknown variable " + std::to_string(x));
      }
      ++occurrences[static_cast<std::size_t>(x)];
    }
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) {
      throw PreconditionError("clause " + std::to_string(j + 1) +
                              " repeats a variable");
    }
  }
  for (int x = 1; x <= phi.variables; ++x) {
    const int k = occurrences[static_cast<std::size_t>(x)];
    if (k != 3) {
      throw PreconditionError("variable " + std::to_string(x) + " occurs in " +
                              std::to_string(k) + " clauses, expected 3");
    }
  }
}

MonotoneCnf ParseCnf(std::string_view text) {
  MonotoneCnf phi;
  std::size_t declared_clauses = 0;
  std::size_t header_line = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = Tokens(line);
    if (tokens.empty() || tokens[0][0] == 'c') continue;
    if (tokens[0] == "p") {
      if (header_line != 0) throw ParseError(line_no, "second header line");
      if (tokens.size() != 4 || tokens[1] != "cnf") {
        throw ParseError(line_no, "expected 'p cnf <variables> <clauses>'");
      }
      const auto n = ToInt(tokens[2]);
      const auto m = ToInt(tokens[3]);
      if (!n || !m || *n < 1 || *m < 0 || *n > 1'000'000 || *m > 1'000'000) {
        throw ParseError(line_no, "bad header counts");
      }
      phi.variables = static_cast<int>(*n);
      declared_clauses = static_cast<std::size_t>(*m);
      header_line = line_no;
      continue;
    }
    if (header_line == 0) throw ParseError(line_no, "clause before 'p cnf' header");
    std::vector<long long> literals;
    for (auto token : tokens) {
      const auto value = ToInt(token);
      if (!value) throw ParseError(line_no, "not an integer: " + std::string(token));
      literals.push_back(*value);
    }
    if (literals.back() != 0) throw ParseError(line_no, "clause must end with 0");
    literals.pop_back();
    for (long long x : literals) {
      if (x < 0) throw ParseError(line_no, "negative literal; formula must be monotone");
      if (x == 0) throw ParseError(line_no, "0 inside a clause");
      if (x > phi.variables) {
        throw ParseError(line_no, "variable " + std::to_string(x) + " exceeds header");
      }
    }
    if (literals.size() != 3) {
      throw ParseError(line_no, "clause has " + std::to_string(literals.size()) +
                                    " literals, expected 3");
    }
    phi.clauses.push_back({static_cast<int>(literals[0]), static_cast<int>(literals[1]),
                           static_cast<int>(literals[2])});
  }
  if (header_line == 0) throw ParseError(0, "missing 'p cnf' header");
  if (phi.clauses.size() != declared_clauses) {
    throw ParseError(header_line, "header declares " + std::to_string(declared_clauses) +
                                      " clauses, found " +
                                      std::to_string(phi.clauses.size()));
  }
  try {
    ValidateCnf(phi);
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
  return phi;
}

std::string SerializeCnf(const MonotoneCnf& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.variables << ' ' << phi.clauses.size() << '\n';
  for (const auto& c : phi.clauses) {
    out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  }
  return out.str();
}

ExtensionInstance BuildExtensionInstance(const MonotoneCnf& phi) {
  ValidateCnf(phi);
  const int n = phi.variables;
  const int m = static_cast<int>(phi.clauses.size());
  if (m < 2) throw PreconditionError("reduction needs at least 2 clauses");

  std::vector<std::string> labels;
  auto add = [&](std::string label) {
    labels.push_back(std::move(label));
    return static_cast<Vertex>(labels.size() - 1);
  };
  std::vector<Vertex> v(static_cast<std::size_t>(n) + 1);
  std::vector<Vertex> c(static_cast<std::size_t>(m) + 1);
  std::vector<Vertex> e(static_cast<std::size_t>(m) + 1);
  std::vector<Vertex> f(static_cast<std::size_t>(m) + 1);
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) v[i] = add("v" + std::to_string(i));
  for (int j = 1; j <= m; ++j) {
    const std::string s = std::to_string(j);
    c[j] = add("c" + s);
    e[j] = add("e" + s);
    f[j] = add("f" + s);
  }
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= 4; ++k) {
      edges.emplace_back(v[i], add("y" + std::to_string(i) + "_" + std::to_string(k)));
    }
  }
  for (int j = 1; j <= m; ++j) {
    const std::string s = std::to_string(j);
    for (int x : phi.clauses[static_cast<std::size_t>(j - 1)]) edges.emplace_back(c[j], v[x]);
    for (int t = 1; t <= 3; ++t) edges.emplace_back(c[j], add("z" + s + "_" + std::to_string(t)));
    edges.emplace_back(c[j], f[j]);
    for (int t = 1; t <= 2; ++t) edges.emplace_back(f[j], add("f" + s + "_" + std::to_string(t)));
    edges.emplace_back(c[j], e[j]);
    edges.emplace_back(c[j], e[j % m + 1]);
    for (int l = 1; l <= 3; ++l) edges.emplace_back(e[j], add("e" + s + "_" + std::to_string(l)));
  }
  const int order = static_cast<int>(labels.size());
  ExtensionInstance instance{Graph(std::move(labels), edges), VertexSet(order),
                             VertexSet(order)};
  for (int j = 1; j <= m; ++j) {
    instance.forced.insert(c[j]);
    instance.forced.insert(e[j]);
    instance.forced.insert(f[j]);
  }
  if (const std::string problem = CheckReductionStructure(phi, instance);
      !problem.empty()) {
    throw std::logic_error("reduction structure: " + problem);
  }
  return instance;
}

std::string CheckReductionStructure(const MonotoneCnf& phi,
                                    const ExtensionInstance& instance) {
  const Graph& g = instance.graph;
  const int n = phi.variables;
  const int m = static_cast<int>(phi.clauses.size());
  if (g.order() != 5 * n + 11 * m) {
    return "order " + std::to_string(g.order()) + " != 5n + 11m";
  }
  for (int i = 1; i <= n; ++i) {
    const auto vi = g.FindLabel("v" + std::to_string(i));
    if (!vi || g.degree(*vi) != 7) return "deg(v" + std::to_string(i) + ") != 7";
  }
  for (int j = 1; j <= m; ++j) {
    const auto cj = g.FindLabel("c" + std::to_string(j));
    if (!cj || g.degree(*cj) != 9) return "deg(c" + std::to_string(j) + ") != 9";
  }
  int max_degree = 0;
  for (Vertex x = 0; x < g.order(); ++x) max_degree = std::max(max_degree, g.degree(x));
  if (max_degree > 9) return "max degree " + std::to_string(max_degree) + " > 9";

  // Expected side 0: c, e_{j,l}, f_{j,t}, y. Side 1: v, z, f_j, e_j.
  auto expected_side = [](const std::string& label) {
    const char head = label[0];
    const bool sub = label.find('_') != std::string::npos;
    if (head == 'c' || head == 'y') return 0;
    if (head == 'v' || head == 'z') return 1;
    return sub ? 0 : 1;  // e/f with a subscript pair vs e_j, f_j
  };
  for (const auto& [a, b] : g.edges()) {
    if (expected_side(g.label(a)) == expected_side(g.label(b))) {
      return "edge " + g.label(a) + " - " + g.label(b) + " inside one side";
    }
  }
  // Independent two-colouring, so the check does not rest on labels alone.
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[static_cast<std::size_t>(s)] >= 0) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(x)) {
        auto& cw = colour[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - colour[static_cast<std::size_t>(x)];
          queue.push(w);
        } else if (cw == colour[static_cast<std::size_t>(x)]) {
          return "graph is not bipartite";
        }
      }
    }
  }
  if (!instance.forbidden.empty()) return "forbidden set is not empty";
  if (instance.forced.size() != 3 * m) return "forced set size != 3m";
  return "";
}

std::optional<std::vector<bool>> OneInThreeBrute(const MonotoneCnf& phi) {
  if (phi.variables > kOneInThreeCap) {
    throw CapExceededError("1-in-3 search is capped at " +
                           std::to_string(kOneInThreeCap) + " variables");
  }
  const std::uint32_t limit = std::uint32_t{1} << phi.variables;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool ok = true;
    for (const auto& c : phi.clauses) {
      int on = 0;
      for (int x : c) on += static_cast<int>((mask >> (x - 1)) & 1U);
      if (on != 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<bool> assignment(static_cast<std::size_t>(phi.variables));
    for (int i = 0; i < phi.variables; ++i) {
      assignment[static_cast<std::size_t>(i)] = ((mask >> i) & 1U) != 0;
    }
    return assignment;
  }
  return std::nullopt;
}

std::string SerializeInstance(const ExtensionInstance& instance) {
  std::string out = SerializeGraph(instance.graph);
  for (const auto& label : SortedLabels(instance.graph, instance.forced)) {
    out += "U " + label + "\n";
  }
  return out;
}

MonotoneCnf RandomCubicCnf(int n, std::uint64_t seed) {
  if (n < 3) throw PreconditionError("a cubic formula needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<int> slots;
  for (int x = 1; x <= n; ++x) slots.insert(slots.end(), 3, x);
  while (true) {
    std::shuffle(slots.begin(), slots.end(), rng);
    MonotoneCnf phi{n, {}};
    bool ok = true;
    for (std::size_t j = 0; j + 2 < slots.size() && ok; j += 3) {
      std::array<int, 3> c{slots[j], slots[j + 1], slots[j + 2]};
      ok = c[0] != c[1] && c[0] != c[2] && c[1] != c[2];
      std::sort(c.begin(), c.end());
      phi.clauses.push_back(c);
    }
    if (ok) return phi;
  }
}

}  // namespace defall
