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

#include "cli.h"

#include <memory>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "defall/alliance.h"
#include "defall/brute_enum.h"
#include "defall/error.h"
#include "defall/families.h"
#include "defall/graph.h"
#include "defall/graph_io.h"
#include "defall/sat_reduction.h"
#include "defall/tree.h"
#include "defall/tree_algorithms.h"

namespace defall::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph_path;
  std::string set;
  std::string forced;
  std::string forbidden;
  std::string kind = "gmda";
  std::string algorithm = "brute";
  std::string extend_algorithm = "auto";
  int max_order = kDefaultBruteCap;
  int table_max_order = 20;
  bool include_empty = false;
  std::string family;
  int param = 0;
  bool table = false;
  std::string cnf_path;
};

Graph LoadGraph(const std::string& path) { return ParseGraph(ReadFile(path)); }

AllianceKind KindOf(const Options& o) { return *ParseAllianceKind(o.kind); }

BruteOptions BruteOf(const Options& o) {
  BruteOptions b;
  b.max_order = o.max_order;
  b.include_empty = o.include_empty;
  return b;
}

void RequireTreeAlgorithm(const Options& o, const Graph& g) {
  if (KindOf(o) != AllianceKind::kGloballyMinimal) {
    throw UsageError("--algorithm tree supports only --kind gmda");
  }
  if (!IsTree(g)) throw UsageError("--algorithm tree needs a tree");
}

std::unique_ptr<AllianceStream> OpenStream(const Options& o, const Graph& g) {
  if (o.algorithm == "tree") {
    RequireTreeAlgorithm(o, g);
    return std::make_unique<TreeGmdaEnumerator>(g);
  }
  return std::make_unique<BruteEnumerator>(g, KindOf(o), BruteOf(o));
}

int Check(const Options& o, std::ostream& out) {
  const Graph g = LoadGraph(o.graph_path);
  const VertexSet a = ParseSetLabels(g, o.set);
  const AllianceReport r = Classify(g, a);
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  out << "defensive=" << yes_no(r.is_defensive)
      << " locally_minimal=" << yes_no(r.is_locally_minimal)
      << " globally_minimal=" << yes_no(r.is_globally_minimal)
      << " violator=" << (r.witness_violator ? g.label(*r.witness_violator) : "-")
      << " suballiance="
      << (r.witness_suballiance ? FormatSet(g, *r.witness_suballiance) : "-")
      << '\n';
  return kOk;
}

int Enumerate(const Options& o, std::ostream& out) {
  const Graph g = LoadGraph(o.graph_path);
  // Brute output is canonical; tree output follows the enumerator's own
  // order (same set of lines).
  auto stream = OpenStream(o, g);
  while (auto s = stream->Next()) out << FormatSet(g, *s) << '\n';
  return kOk;
}

int Count(const Options& o, std::ostream& out) {
  const Graph g = LoadGraph(o.graph_path);
  if (o.algorithm == "tree") {
    RequireTreeAlgorithm(o, g);
    out << CountGmdaTree(g) << '\n';
  } else {
    out << CountAlliances(g, KindOf(o), BruteOf(o)) << '\n';
  }
  return kOk;
}

int Extend(const Options& o, std::ostream& out) {
  const GraphDocument doc = ParseGraphDocument(ReadFile(o.graph_path));
  const Graph& g = doc.graph;
  VertexSet forced = ParseSetLabels(g, o.forced);
  for (const auto& label : doc.forced_labels) forced.insert(g.VertexOf(label));
  const VertexSet forbidden = ParseSetLabels(g, o.forbidden);
  if (forced.Intersects(forbidden)) {
    throw UsageError("forced and forbidden sets overlap");
  }
  bool use_tree = o.extend_algorithm == "tree";
  if (o.extend_algorithm == "auto") use_tree = IsTree(g);
  if (use_tree && !IsTree(g)) throw UsageError("--algorithm tree needs a tree");

  std::optional<VertexSet> witness;
  if (use_tree) {
    TreeExtensionSolver solver(g);
    witness = solver.Solve(forced, forbidden);
  } else {
    witness = BruteExtension(g, forced, forbidden, BruteOf(o));
  }
  out << (witness ? FormatSet(g, *witness) : "NONE") << '\n';
  return kOk;
}

int Generate(const Options& o, std::ostream& out) {
  const auto family = *ParseFamily(o.family);
  if (o.table) {
    out << FormatFamilyTable(FamilyTable(family, o.param, o.table_max_order));
  } else {
    out << SerializeGraph(GenerateFamily({family, o.param}));
  }
  return kOk;
}

int Reduce(const Options& o, std::ostream& out) {
  const MonotoneCnf phi = ParseCnf(ReadFile(o.cnf_path));
  out << SerializeInstance(BuildExtensionInstance(phi));
  return kOk;
}

int DelayStatsCommand(const Options& o, std::ostream& out) {
  const Graph g = LoadGraph(o.graph_path);
  if (!IsTree(g)) throw UsageError("delay-stats needs a tree");
  TreeGmdaEnumerator stream(g);
  while (stream.Next()) {
  }
  out << DelayStatsJson(stream.stats()) << '\n';
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Defensive alliance toolkit", "defall"};
  app.require_subcommand(1, 1);
  const std::vector<std::string> kinds{"da", "lmda", "gmda"};
  const std::vector<std::string> families{"diamond", "spider", "caterpillar", "path"};

  auto* check = app.add_subcommand("check", "Classify a vertex set");
  check->add_option("graph", o.graph_path, "Edge-list file")->required();
  check->add_option("--set", o.set, "Comma-separated labels")->required();

  auto add_enum_flags = [&](CLI::App* cmd) {
    cmd->add_option("graph", o.graph_path, "Edge-list file")->required();
    cmd->add_option("--kind", o.kind, "da, lmda or gmda")
        ->check(CLI::IsMember(kinds));
    cmd->add_option("--algorithm", o.algorithm, "brute, or tree (gmda on trees)")
        ->check(CLI::IsMember({"brute", "tree"}));
    cmd->add_option("--max-order", o.max_order, "Exhaustive search vertex cap")
        ->check(CLI::Range(1, kMaxBruteCap));
    cmd->add_flag("--include-empty", o.include_empty,
                  "Report the empty set for --kind da");
  };
  auto* enumerate = app.add_subcommand("enumerate", "List alliances, one per line");
  add_enum_flags(enumerate);
  auto* count = app.add_subcommand("count", "Count alliances");
  add_enum_flags(count);

  auto* extend = app.add_subcommand(
      "extend", "Find a globally minimal alliance containing --forced and avoiding --forbidden");
  extend->add_option("graph", o.graph_path, "Edge-list file, may carry U lines")
      ->required();
  extend->add_option("--forced", o.forced, "Comma-separated labels");
  extend->add_option("--forbidden", o.forbidden, "Comma-separated labels");
  extend->add_option("--algorithm", o.extend_algorithm, "auto, brute or tree")
      ->check(CLI::IsMember({"auto", "brute", "tree"}));
  extend->add_option("--max-order", o.max_order, "Exhaustive search free-vertex cap")
      ->check(CLI::Range(1, kMaxBruteCap));

  auto* generate = app.add_subcommand("generate", "Emit a family graph or its count table");
  generate->add_option("--family", o.family, "diamond, spider, caterpillar or path")
      ->required()
      ->check(CLI::IsMember(families));
  generate->add_option("--param", o.param, "n for diamond/path, k for spider/caterpillar")
      ->required();
  generate->add_flag("--table", o.table, "Print formula and measured counts up to --param");
  generate->add_option("--max-order", o.table_max_order,
                       "Largest order measured by exhaustive search in --table")
      ->check(CLI::Range(1, kMaxBruteCap));

  auto* reduce = app.add_subcommand("reduce", "Build the extension instance of a CNF");
  reduce->add_option("cnf", o.cnf_path, "Cubic monotone CNF file")->required();

  auto* delay = app.add_subcommand("delay-stats", "Tree enumerator delay statistics as JSON");
  delay->add_option("graph", o.graph_path, "Edge-list file of a tree")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return Check(o, out);
    if (*enumerate) return Enumerate(o, out);
    if (*count) return Count(o, out);
    if (*extend) return Extend(o, out);
    if (*generate) return Generate(o, out);
    if (*reduce) return Reduce(o, out);
    if (*delay) return DelayStatsCommand(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputFormat;
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace defall::cli
