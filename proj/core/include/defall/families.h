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

// Graph families with many minimal defensive alliances, and their counts.

#ifndef DEFALL_FAMILIES_H_
#define DEFALL_FAMILIES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "defall/graph.h"

namespace defall {

using BigInt = boost::multiprecision::cpp_int;

enum class Family { kDiamond, kSpider, kCaterpillar, kPath };

std::string_view ToString(Family family);
std::optional<Family> ParseFamily(std::string_view text);

// parameter is n for diamond and path, k for spider and caterpillar.
struct FamilySpec {
  Family family;
  int parameter;
};

// diamond n > 2: K_{2,n-2} on u1,u2,v1..v_{n-2}.
// spider k >= 1: r, legs r - u_i - u_i' (labels ui and ui').
// caterpillar k >= 1: path a - b - c plus leaves v1..vk on a.
// path n >= 1: v1 - v2 - ... - vn.
// Throws PreconditionError outside those ranges.
Graph GenerateFamily(const FamilySpec& spec);

BigInt Binomial(int n, int k);

// f_1 = 0, f_2 = 1, f_3 = 2, f_n = f_{n-1} + f_{n-3} + 1. n >= 1.
BigInt PathRecurrenceF(int n);

// Locally minimal alliances of P_n: f_{n-2} + 2 for n >= 3; 1 and 2 for
// n = 1, 2 (measured). Throws for n < 1.
BigInt PathLmdaCount(int n);
// Globally minimal alliances of P_n: n - 1 for n >= 3; 1 and 2 for n = 1, 2
// (measured; P2 has both leaves). Throws for n < 1.
BigInt PathGmdaCount(int n);
// k + C(k, ceil((k-1)/2)) for k >= 2. Throws for k < 2.
BigInt SpiderGmdaCount(int k);
// Lower bound k + C(k, ceil((k-2)/2)) for k >= 2. Throws for k < 2.
BigInt CaterpillarLmdaLower(int k);
// Lower bound C(n-2, ceil((n-3)/2)) for n >= 4. Throws for n < 4.
BigInt DiamondGmdaLower(int n);

struct FamilyTableRow {
  int parameter;
  std::string kind;      // "gmda" or "lmda"
  std::string relation;  // "exact" or "lower"
  std::string formula;   // decimal, or "NA" outside the formula's domain
  std::string measured;  // decimal, or "NA" beyond the measurement caps
};

// One row per parameter from the family's minimum to `max_parameter`.
// Measured values come from exhaustive search up to `brute_cap` vertices,
// and from the tree enumerator beyond that for the tree families.
std::vector<FamilyTableRow> FamilyTable(Family family, int max_parameter,
                                        int brute_cap);

// Header plus rows, tab separated.
std::string FormatFamilyTable(const std::vector<FamilyTableRow>& rows);

}  // namespace defall

#endif  // DEFALL_FAMILIES_H_
