#include <doctest.h>

#include "checkers.hpp"
#include "wrp/instances.hpp"
#include "wrp/io.hpp"
#include "wrp/oracle.hpp"
#include "wrp/treewidth.hpp"

using namespace wrp;

TEST_CASE("generators are deterministic in the seed") {
  KTreeSpec spec;
  spec.n = 10;
  spec.k = 3;
  spec.seed = 42;
  CHECK(instance_text(gen_partial_ktree(spec)) == instance_text(gen_partial_ktree(spec)));
  KTreeSpec other = spec;
  other.seed = 43;
  CHECK(instance_text(gen_partial_ktree(spec)) != instance_text(gen_partial_ktree(other)));
  CHECK(instance_text(gen_ladder(6, 3, 9).instance) == instance_text(gen_ladder(6, 3, 9).instance));
}

TEST_CASE("partial k-trees stay within width k") {
  for (int seed = 1; seed <= 20; ++seed) {
    KTreeSpec spec;
    spec.n = 7 + seed % 5;
    spec.k = 1 + seed % 3;
    spec.seed = static_cast<std::uint64_t>(seed);
    const Instance inst = gen_partial_ktree(spec);
    CHECK(inst.graph.vertex_count() == spec.n);
    CHECK(exact_treewidth(inst.graph) <= spec.k);
    for (const Edge& e : inst.graph.edges()) {
      CHECK(e.capacity >= 1);
      CHECK(e.capacity <= 2);
      CHECK(e.weight >= 1);
      CHECK(e.weight <= 4);
    }
    CHECK(static_cast<int>(inst.waypoints.size()) <= spec.max_waypoints);
  }
}

TEST_CASE("ladder and tail") {
  const InstanceFile ladder = gen_ladder(5, 2, 3);
  CHECK(ladder.instance.graph.vertex_count() == 10);
  CHECK(ladder.instance.graph.edge_count() == 5 + 2 * 4);
  CHECK(ladder.instance.source == ladder.instance.target);
  const InstanceFile tail = gen_grid_tail(ladder, 2);
  CHECK(tail.instance.graph.vertex_count() == 10 + 100);
  CHECK(tail.instance.waypoints == ladder.instance.waypoints);
  CHECK(checks::max_degree(tail.instance.graph) <= 3);
}

TEST_CASE("hamiltonian encoding") {
  const Instance c5 = ham_encode(cycle_graph(5));
  CHECK(c5.source == 0);
  CHECK(c5.target == 0);
  CHECK(c5.waypoints.size() == 4);
  const Solution s = brute_force_solve(c5);
  CHECK(s.feasible);
  CHECK(s.cost == 5);
  CHECK(brute_force_solve(ham_encode(cube_graph())).cost == 8);
  // A path has no Hamiltonian cycle.
  CapacitatedGraph p(3);
  p.add_edge(0, 1, 1, 1);
  p.add_edge(1, 2, 1, 1);
  CHECK_FALSE(brute_force_solve(ham_encode(p)).feasible);
}

TEST_CASE("bipartite gadget keeps bipartiteness and degree three") {
  const Instance base = ham_encode(cube_graph());
  for (int r = 2; r <= 3; ++r) {
    const Instance out = gen_bipartite_trees_gadget(base, 0, r);
    const int tree = (1 << r) - 1;
    const int rim_mids = (1 << (r - 1)) - 1;  // keeps the leaf cycle even
    CHECK(out.graph.vertex_count() == base.graph.vertex_count() + 2 + 2 * tree + 2 * rim_mids);
    CHECK(checks::is_bipartite(out.graph));
    CHECK(checks::max_degree(out.graph) <= 3);
    CHECK(out.waypoints == base.waypoints);
  }
  CHECK_THROWS_AS(gen_bipartite_trees_gadget(base, 0, 1), InputError);
  CHECK_THROWS_AS(gen_bipartite_trees_gadget(ham_encode(cycle_graph(5)), 0, 2), InputError);
}

TEST_CASE("two-coloring") {
  CHECK(two_coloring(cycle_graph(5)).empty());
  const CapacitatedGraph c6 = cycle_graph(6);
  const auto col = two_coloring(c6);
  REQUIRE(col.size() == 6);
  for (const Edge& e : c6.edges()) {
    CHECK(col[static_cast<std::size_t>(e.u)] != col[static_cast<std::size_t>(e.v)]);
  }
}
