#include <doctest.h>

#include "wrp/instances.hpp"
#include "wrp/oracle.hpp"
#include "wrp/transform.hpp"

using namespace wrp;

TEST_CASE("oracle on the depicted instances") {
  for (const auto& [name, cost] : std::vector<std::pair<std::string, Weight>>{{"fig1-left", 7}, {"fig1-right", 6}}) {
    const Instance inst = canonical(name);
    const Solution s = brute_force_solve(inst);
    REQUIRE(s.feasible);
    CHECK(s.cost == cost);
    CHECK(validate_route(inst, s.route).ok());
    CHECK(route_cost(inst, s.route) == cost);
  }
}

TEST_CASE("capacities above two do not change the answer") {
  Instance inst = canonical("fig1-left");
  const Solution before = brute_force_solve(inst);
  CapacitatedGraph big(inst.graph.vertex_count());
  for (const Edge& e : inst.graph.edges()) big.add_edge(e.u, e.v, e.capacity == 2 ? 7 : e.capacity, e.weight);
  inst.graph = big;
  const Solution after = brute_force_solve(inst);
  CHECK(after.cost == before.cost);
  CHECK(validate_route(inst, after.route).ok());
}

TEST_CASE("infeasible when a waypoint is behind a bridge with capacity one") {
  Instance inst;
  inst.graph = CapacitatedGraph(3);
  inst.graph.add_edge(0, 1, 1, 1);
  inst.graph.add_edge(1, 2, 1, 1);
  inst.source = 0;
  inst.target = 1;
  inst.waypoints = {2};
  CHECK_FALSE(brute_force_solve(inst).feasible);
  inst.graph = CapacitatedGraph(3);
  inst.graph.add_edge(0, 1, 1, 1);
  inst.graph.add_edge(1, 2, 2, 1);
  const Solution s = brute_force_solve(inst);
  CHECK(s.feasible);
  CHECK(s.cost == 3);
}

TEST_CASE("oracle limits") {
  Instance inst;
  inst.graph = CapacitatedGraph(2);
  for (int i = 0; i < 33; ++i) inst.graph.add_edge(0, 1, 1, 1);
  inst.source = 0;
  inst.target = 1;
  CHECK_THROWS_AS(brute_force_solve(inst), LimitError);
  KTreeSpec spec;
  spec.n = 12;
  spec.k = 3;
  spec.max_waypoints = 6;
  spec.seed = 4;
  OracleOptions tiny;
  tiny.state_budget = 5;
  CHECK_THROWS_AS(brute_force_solve(gen_partial_ktree(spec), tiny), LimitError);
}
