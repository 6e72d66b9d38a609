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

// Cubic monotone 1-in-3-SAT to the GMDA extension problem.

#ifndef DEFALL_SAT_REDUCTION_H_
#define DEFALL_SAT_REDUCTION_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "defall/graph.h"
#include "defall/tree_algorithms.h"

namespace defall {

// Variables are 1..variables. Every clause has three distinct variables
// and every variable occurs in exactly three clauses.
struct MonotoneCnf {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;
};

// "p cnf <n> <m>" followed by m lines of three positive integers and a
// terminating 0. Lines starting with 'c' are comments. Throws ParseError.
MonotoneCnf ParseCnf(std::string_view text);

// Throws PreconditionError naming the first violated rule.
void ValidateCnf(const MonotoneCnf& phi);

std::string SerializeCnf(const MonotoneCnf& phi);

// Vertices, per variable i and clause j (1-based labels):
//   vi, yi_1..yi_4                      variable vertex and its pendants
//   cj, ej, ej_1..ej_3, fj, fj_1, fj_2  clause gadget
//   zj_1..zj_3                          pendants on cj
// Edges: cj - vi for xi in Cj, cj - ej, cj - e(j+1 mod m), cj - fj,
// cj - zj_s, ej - ej_l, fj - fj_t, vi - yi_k.
// forced = {cj, ej, fj}, forbidden = {}. Throws PreconditionError for an
// invalid formula, std::logic_error if a structural check fails.
ExtensionInstance BuildExtensionInstance(const MonotoneCnf& phi);

// Structural facts of a built instance: |V| = 5n + 11m, deg(vi) = 7,
// deg(cj) = 9, bipartite with the expected classes, max degree 9.
// Returns the first violation, or an empty string.
std::string CheckReductionStructure(const MonotoneCnf& phi,
                                    const ExtensionInstance& instance);

inline constexpr int kOneInThreeCap = 24;

// An assignment (index i - 1 holds xi) making exactly one variable true in
// every clause, or nullopt. Throws CapExceededError above kOneInThreeCap.
std::optional<std::vector<bool>> OneInThreeBrute(const MonotoneCnf& phi);

// Graph lines followed by "U <label>" for each forced vertex.
std::string SerializeInstance(const ExtensionInstance& instance);

// Uniform pairing of three copies of each variable into clauses,
// resampled until every clause has distinct variables. n >= 3.
MonotoneCnf RandomCubicCnf(int n, std::uint64_t seed);

}  // namespace defall

#endif  // DEFALL_SAT_REDUCTION_H_
