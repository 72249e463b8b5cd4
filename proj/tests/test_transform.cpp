#include <doctest.h>

#include "wrp/instances.hpp"
#include "wrp/oracle.hpp"
#include "wrp/transform.hpp"

using namespace wrp;

TEST_CASE("clamp caps capacities at two") {
  CapacitatedGraph g(2);
  g.add_edge(0, 1, 5, 3);
  g.add_edge(0, 1, 1, 2);
  const auto [out, trace] = clamp_capacities(g);
  CHECK(out.edge(0).capacity == 2);
  CHECK(out.edge(1).capacity == 1);
  CHECK(out.edge(0).weight == 3);
  CHECK(trace.scale() == 1);
  const auto [again, t2] = clamp_capacities(out);
  for (const Edge& e : again.edges()) CHECK(e.capacity == out.edge(e.id).capacity);
}

TEST_CASE("unify subdivides each unit of capacity") {
  CapacitatedGraph g(2);
  g.add_edge(0, 1, 2, 3);
  const auto [out, trace] = unify(g);
  CHECK(out.vertex_count() == 4);
  CHECK(out.edge_count() == 4);
  CHECK(trace.scale() == 2);
  for (const Edge& e : out.edges()) {
    CHECK(e.capacity == 1);
    CHECK(e.weight == 3);
  }
  CapacitatedGraph cap2(2);
  cap2.add_edge(0, 1, 3, 1);
  CHECK_THROWS_AS(unify(cap2), InputError);
}

TEST_CASE("unify on a unit graph adds |E| vertices and doubles edges") {
  const CapacitatedGraph g = cube_graph();
  const auto [out, trace] = unify(g);
  CHECK(out.vertex_count() == g.vertex_count() + g.edge_count());
  CHECK(out.edge_count() == 2 * g.edge_count());
}

TEST_CASE("reduce_to_cycle adds a hub joined to s and t") {
  const Instance inst = canonical("fig1-left");
  const auto [cycle, trace] = reduce_to_cycle(inst);
  CHECK(cycle.graph.vertex_count() == inst.graph.vertex_count() + 1);
  CHECK(cycle.source == cycle.target);
  CHECK(cycle.is_waypoint(inst.source));
  CHECK(cycle.is_waypoint(inst.target));
  CHECK(brute_force_solve(cycle).cost == 9);

  Instance closed = inst;
  closed.target = closed.source;
  const auto [same, t2] = reduce_to_cycle(closed);
  CHECK(same.graph.vertex_count() == closed.graph.vertex_count());
}

TEST_CASE("routes lift back through the whole pipeline") {
  for (const std::string name : {"fig1-left", "fig1-right"}) {
    const Instance inst = canonical(name);
    auto [clamped, trace] = clamp_instance(inst);
    auto [cycle, t2] = reduce_to_cycle(clamped);
    trace.append(std::move(t2));
    auto [unified, t3] = unify_instance(cycle);
    trace.append(std::move(t3));
    // Lower the depicted walk, lift it back, compare.
    const Route depicted = canonical_route(name);
    const Route low = lower_route(trace, depicted);
    CHECK(validate_route(unified, low).ok());
    CHECK(route_cost(unified, low) == trace.scale() * (route_cost(inst, depicted) + 2));
    const Route back = lift_route(trace, low);
    CHECK(validate_route(inst, back).ok());
    CHECK(route_cost(inst, back) == route_cost(inst, depicted));
  }
}

TEST_CASE("transforms preserve the optimum on small instances") {
  for (int seed = 1; seed <= 25; ++seed) {
    KTreeSpec spec;
    spec.n = 4 + seed % 4;
    spec.k = 1 + seed % 2;
    spec.max_edges = 9;
    spec.max_waypoints = 2;
    spec.seed = static_cast<std::uint64_t>(seed);
    const Instance inst = gen_partial_ktree(spec);
    const Solution base = brute_force_solve(inst);
    const Solution clamped = brute_force_solve(clamp_instance(inst).first);
    CHECK(base.feasible == clamped.feasible);
    if (base.feasible) CHECK(base.cost == clamped.cost);
  }
}

TEST_CASE("simple unit normalization") {
  const Instance inst = canonical("fig1-left");
  const auto [norm, trace] = normalize_instance_simple_unit(inst);
  for (const Edge& e : norm.graph.edges()) {
    CHECK(e.capacity == 1);
    CHECK(e.weight == 1);
  }
  CapacitatedGraph zero(2);
  zero.add_edge(0, 1, 1, 0);
  CHECK_THROWS_AS(normalize_simple_unit(zero), InputError);
}
