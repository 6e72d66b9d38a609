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

#include "defall/families.h"

#include <algorithm>
#include <sstream>

#include "defall/brute_enum.h"
#include "defall/error.h"
#include "defall/tree_algorithms.h"

namespace defall {
namespace {

// Tree enumeration in the table stops where the expected count gets large.
constexpr int kTreeMeasureLimit = 1'000'000;

void Require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

int CeilHalf(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

Graph Build(std::vector<std::string> labels,
            const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back(Edge{a, b});
  return Graph(std::move(labels), edges);
}

}  // namespace

std::string_view ToString(Family family) {
  switch (family) {
    case Family::kDiamond:
      return "diamond";
    case Family::kSpider:
      return "spider";
    case Family::kCaterpillar:
      return "caterpillar";
    case Family::kPath:
      return "path";
  }
  return "?";
}

std::optional<Family> ParseFamily(std::string_view text) {
  if (text == "diamond") return Family::kDiamond;
  if (text == "spider") return Family::kSpider;
  if (text == "caterpillar") return Family::kCaterpillar;
  if (text == "path") return Family::kPath;
  return std::nullopt;
}

Graph GenerateFamily(const FamilySpec& spec) {
  const int p = spec.parameter;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  switch (spec.family) {
    case Family::kDiamond:
      Require(p > 2, "diamond needs n > 2");
      labels = {"u1", "u2"};
      for (int i = 1; i <= p - 2; ++i) {
        labels.push_back("v" + std::to_string(i));
        edges.emplace_back(0, i + 1);
        edges.emplace_back(1, i + 1);
      }
      break;
    case Family::kSpider:
      Require(p >= 1, "spider needs k >= 1");
      labels = {"r"};
      for (int i = 1; i <= p; ++i) labels.push_back("u" + std::to_string(i));
      for (int i = 1; i <= p; ++i) labels.push_back("u" + std::to_string(i) + "'");
      for (int i = 1; i <= p; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, p + i);
      }
      break;
    case Family::kCaterpillar:
      Require(p >= 1, "caterpillar needs k >= 1");
      labels = {"a", "b", "c"};
      edges = {{0, 1}, {1, 2}};
      for (int i = 1; i <= p; ++i) {
        labels.push_back("v" + std::to_string(i));
        edges.emplace_back(0, i + 2);
      }
      break;
    case Family::kPath:
      Require(p >= 1, "path needs n >= 1");
      for (int i = 1; i <= p; ++i) labels.push_back("v" + std::to_string(i));
      for (int i = 1; i < p; ++i) edges.emplace_back(i - 1, i);
      break;
  }
  return Build(std::move(labels), edges);
}

BigInt Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // Each prefix product is itself a binomial, so the division is exact.
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt PathRecurrenceF(int n) {
  Require(n >= 1, "f_n needs n >= 1");
  BigInt f1 = 0, f2 = 1, f3 = 2;
  if (n == 1) return f1;
  if (n == 2) return f2;
  for (int i = 4; i <= n; ++i) {
    BigInt next = f3 + f1 + 1;
    f1 = std::move(f2);
    f2 = std::move(f3);
    f3 = std::move(next);
  }
  return f3;
}

BigInt PathLmdaCount(int n) {
  Require(n >= 1, "path needs n >= 1");
  if (n == 1) return 1;
  if (n == 2) return 2;
  if (n == 3) return 2;  // f_1 + 2
  return PathRecurrenceF(n - 2) + 2;
}

BigInt PathGmdaCount(int n) {
  Require(n >= 1, "path needs n >= 1");
  if (n <= 2) return n;
  return n - 1;
}

BigInt SpiderGmdaCount(int k) {
  Require(k >= 2, "spider count needs k >= 2");
  return k + Binomial(k, CeilHalf(k - 1));
}

BigInt CaterpillarLmdaLower(int k) {
  Require(k >= 2, "caterpillar bound needs k >= 2");
  return k + Binomial(k, CeilHalf(k - 2));
}

BigInt DiamondGmdaLower(int n) {
  Require(n >= 4, "diamond bound needs n >= 4");
  return Binomial(n - 2, CeilHalf(n - 3));
}

std::vector<FamilyTableRow> FamilyTable(Family family, int max_parameter,
                                        int brute_cap) {
  struct Column {
    AllianceKind kind;
    bool exact;
    int min_formula;
    BigInt (*formula)(int);
  };
  std::vector<Column> columns;
  int first = 1;
  bool is_tree = true;
  switch (family) {
    case Family::kDiamond:
      columns = {{AllianceKind::kGloballyMinimal, false, 4, &DiamondGmdaLower}};
      first = 3;
      is_tree = false;
      break;
    case Family::kSpider:
      columns = {{AllianceKind::kGloballyMinimal, true, 2, &SpiderGmdaCount}};
      break;
    case Family::kCaterpillar:
      columns = {{AllianceKind::kLocallyMinimal, false, 2, &CaterpillarLmdaLower}};
      break;
    case Family::kPath:
      columns = {{AllianceKind::kLocallyMinimal, true, 1, &PathLmdaCount},
                 {AllianceKind::kGloballyMinimal, true, 1, &PathGmdaCount}};
      break;
  }
  std::vector<FamilyTableRow> rows;
  for (int p = first; p <= max_parameter; ++p) {
    const Graph g = GenerateFamily({family, p});
    for (const Column& column : columns) {
      FamilyTableRow row{p, std::string(ToString(column.kind)),
                         column.exact ? "exact" : "lower", "NA", "NA"};
      std::optional<BigInt> value;
      if (p >= column.min_formula) {
        value = column.formula(p);
        row.formula = value->str();
      }
      if (g.order() <= brute_cap) {
        BruteOptions options;
        options.max_order = brute_cap;
        row.measured = std::to_string(CountAlliances(g, column.kind, options));
      } else if (is_tree && column.kind == AllianceKind::kGloballyMinimal &&
                 value && *value <= kTreeMeasureLimit) {
        row.measured = std::to_string(CountGmdaTree(g));
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string FormatFamilyTable(const std::vector<FamilyTableRow>& rows) {
  std::ostringstream out;
  out << "parameter\tkind\trelation\tformula\tmeasured\n";
  for (const auto& row : rows) {
    out << row.parameter << '\t' << row.kind << '\t' << row.relation << '\t'
        << row.formula << '\t' << row.measured << '\n';
  }
  return out.str();
}

}  // namespace defall
