#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wrp/graph.hpp"
#include "wrp/io.hpp"

namespace wrp {

/// Named instances: "fig1-left" (optimum 7) and "fig1-right" (optimum 6).
/// Throws InputError for unknown names.
Instance canonical(const std::string& name);
std::vector<std::string> canonical_names();

/// The depicted optimal walk of each canonical instance.
Route canonical_route(const std::string& name);

struct KTreeSpec {
  int n = 8;
  int k = 2;
  double keep = 0.8;      // probability of keeping each droppable edge
  int max_waypoints = 4;  // waypoint count is drawn from [0, max_waypoints]
  int max_edges = -1;     // extra edges are dropped while connectivity allows
  std::uint64_t seed = 1;
};

/// Random k-tree minus random edges (kept connected). Capacities in {1,2},
/// weights in [1,4], random s and t, a random waypoint set.
Instance gen_partial_ktree(const KTreeSpec& spec);

/// Ladder grid with `columns` columns (2 rows), unit capacities and weights,
/// s = t at the rightmost top vertex, and up to `waypoints` random waypoints.
InstanceFile gen_ladder(int columns, int waypoints, std::uint64_t seed);

/// Attaches a waypoint-free unit path of n^r vertices to the left of the
/// leftmost-bottom vertex of a coordinate-carrying grid instance.
InstanceFile gen_grid_tail(const InstanceFile& base, int r);

/// Hamiltonian-cycle encoding of a simple graph: unit capacities and weights,
/// s = t = `anchor`, every other vertex a waypoint.
Instance ham_encode(const CapacitatedGraph& g, VertexId anchor = 0);

/// Replaces edge `edge` = (u, w) of a bipartite instance of maximum degree 3
/// by the path u-v-v'-w and hangs two full binary trees of 2^r - 1 vertices
/// off v and v', joined through their leaves by a cycle and a crossing
/// matching. New vertices are not waypoints. Requires r >= 2.
Instance gen_bipartite_trees_gadget(const Instance& base, EdgeId edge, int r);

/// Graphs used as gadget bases and hardness examples.
CapacitatedGraph cycle_graph(int n);
CapacitatedGraph cube_graph();

/// Two-coloring of a graph, or empty when it is not bipartite.
std::vector<int> two_coloring(const CapacitatedGraph& g);

}  // namespace wrp
