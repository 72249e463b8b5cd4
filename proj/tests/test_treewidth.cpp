#include <doctest.h>

#include <sstream>

#include "checkers.hpp"
#include "wrp/instances.hpp"
#include "wrp/transform.hpp"
#include "wrp/treewidth.hpp"

using namespace wrp;

namespace {

CapacitatedGraph path(int n) {
  CapacitatedGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, 1, 1);
  return g;
}

CapacitatedGraph clique(int n) {
  CapacitatedGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j, 1, 1);
  }
  return g;
}

}  // namespace

TEST_CASE("exact widths of small graphs") {
  CHECK(exact_treewidth(path(5)) == 1);
  CHECK(exact_treewidth(clique(4)) == 3);
  CHECK(exact_treewidth(canonical("fig1-left").graph) == 2);
  CHECK(decompose(clique(4), {DecomposeMode::kExact}).width() == 3);
}

TEST_CASE("exact mode matches the subset recurrence and heuristic is an upper bound") {
  for (int seed = 1; seed <= 30; ++seed) {
    KTreeSpec spec;
    spec.n = 5 + seed % 4;
    spec.k = 1 + seed % 3;
    spec.seed = static_cast<std::uint64_t>(seed);
    const CapacitatedGraph g = gen_partial_ktree(spec).graph;
    const int exact = exact_treewidth(g);
    CHECK(exact == checks::brute_force_treewidth(g));
    CHECK(decompose(g).width() >= exact);
  }
}

TEST_CASE("exact mode respects its budget") {
  // Cliques collapse under simplicial reduction, a grid does not.
  CapacitatedGraph grid(36);
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      if (c + 1 < 6) grid.add_edge(6 * r + c, 6 * r + c + 1, 1, 1);
      if (r + 1 < 6) grid.add_edge(6 * r + c, 6 * r + c + 6, 1, 1);
    }
  }
  CHECK_THROWS_AS(decompose(grid, {DecomposeMode::kExact, 10}), LimitError);
  CHECK(decompose(clique(12), {DecomposeMode::kExact, 10}).width() == 11);
}

TEST_CASE("validation reports uncovered edges and broken connectivity") {
  const CapacitatedGraph g = path(3);
  TreeDecomposition missing;
  missing.bags = {{0, 1}, {2}};
  missing.links = {{0, 1}};
  const auto r1 = validate_decomposition(g, missing);
  CHECK_FALSE(r1.ok());
  bool uncovered = false;
  for (const auto& v : r1.violations) uncovered |= v.message.find("edge uncovered") != std::string::npos;
  CHECK(uncovered);

  TreeDecomposition split;
  split.bags = {{0, 1}, {1, 2}, {0}};
  split.links = {{0, 1}, {1, 2}};
  const auto r2 = validate_decomposition(g, split);
  bool connectivity = false;
  for (const auto& v : r2.violations) connectivity |= v.message.find("connectivity") != std::string::npos;
  CHECK(connectivity);
}

TEST_CASE("make_nice on a single K3 bag") {
  TreeDecomposition td;
  td.bags = {{0, 1, 2}};
  const NiceTreeDecomposition ntd = make_nice(td);
  CHECK(validate_nice(adjacency_of(clique(3)), ntd).empty());
  std::vector<NiceKind> kinds;
  for (int at = ntd.root; at >= 0;) {
    kinds.push_back(ntd.nodes[static_cast<std::size_t>(at)].kind);
    const auto& ch = ntd.nodes[static_cast<std::size_t>(at)].children;
    at = ch.empty() ? -1 : ch.front();
  }
  const std::vector<NiceKind> expect{NiceKind::kForget,    NiceKind::kForget,    NiceKind::kForget,
                                     NiceKind::kIntroduce, NiceKind::kIntroduce, NiceKind::kLeaf};
  CHECK(kinds == expect);
}

TEST_CASE("make_nice keeps width, validity and a linear node count") {
  for (int seed = 1; seed <= 50; ++seed) {
    KTreeSpec spec;
    spec.n = 5 + seed % 6;
    spec.k = 1 + seed % 3;
    spec.seed = static_cast<std::uint64_t>(seed);
    const CapacitatedGraph g = gen_partial_ktree(spec).graph;
    const TreeDecomposition td = decompose(g);
    CHECK(validate_decomposition(g, td).ok());
    const NiceTreeDecomposition ntd = make_nice(td);
    CHECK(validate_nice(adjacency_of(g), ntd).empty());
    CHECK(ntd.width() == td.width());
    CHECK(ntd.node_count() <= 4 * std::max(1, td.width()) * g.vertex_count());
    CHECK(ntd.nodes[static_cast<std::size_t>(ntd.root)].bag.empty());
  }
}

TEST_CASE("extended decompositions of unified graphs grow by at most one") {
  for (int seed = 1; seed <= 20; ++seed) {
    KTreeSpec spec;
    spec.n = 4 + seed % 5;
    spec.k = 2;
    spec.seed = static_cast<std::uint64_t>(seed);
    const CapacitatedGraph g = clamp_capacities(gen_partial_ktree(spec).graph).first;
    const TreeDecomposition td = decompose(g, {DecomposeMode::kExact});
    const auto [unified, trace] = unify(g);
    const TreeDecomposition ext = extend_to_unified(td, unified, trace.steps.front());
    CHECK(validate_decomposition(unified, ext).ok());
    CHECK(ext.width() <= td.width() + 1);
  }
}

TEST_CASE("decomposition text format") {
  std::ostringstream out;
  write_nice(out, make_nice(decompose(path(3))));
  const std::string text = out.str();
  CHECK(text.find("node ") != std::string::npos);
  CHECK(text.find("kind ") != std::string::npos);
  CHECK(text.find("root ") != std::string::npos);
}
