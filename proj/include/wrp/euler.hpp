#pragma once

#include <vector>

#include "wrp/graph.hpp"

namespace wrp {

/// Closed walk from `start` using every edge of `edges` exactly once
/// (Hierholzer; at each vertex the lowest unused edge id is taken first).
/// Throws InputError when the edge set is not a connected even-degree
/// multigraph containing `start` (an empty set yields the empty walk).
Route eulerian_circuit(const CapacitatedGraph& g, const std::vector<EdgeId>& edges, VertexId start);

struct SeparatedWalks {
  std::vector<Route> walks;  // oriented so walks[i] ends where walks[i+1] starts
  std::vector<bool> in_a;    // side of each walk
};

/// Splits an Eulerian circuit of `g` into side-confined walks with endpoints
/// in the separator. `side_a` lists the vertices of A (the separator may be
/// included or not); B is everything outside A plus the separator. Edges with
/// both ends in the separator count as A edges. Concatenating `walks` in
/// order gives one Eulerian circuit of g.
///
/// Throws InputError for odd degrees, a disconnected graph, an empty
/// separator on a graph with edges, or an edge between A\sep and B\sep.
SeparatedWalks eulerian_separate(const CapacitatedGraph& g, const std::vector<VertexId>& separator,
                                 const std::vector<VertexId>& side_a);

}  // namespace wrp
