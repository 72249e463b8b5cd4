#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wrp/graph.hpp"
#include "wrp/transform.hpp"

namespace wrp {

enum class LineTag { kHub, kPort, kEdgePath, kCliqueSub };

std::string to_string(LineTag tag);

/// Waypoint line graph of a simple unit-weight unit-capacity instance.
/// Every vertex v of degree d becomes a hub plus d ports (one per incident
/// edge) forming a clique whose port-port edges are subdivided once; every
/// edge becomes a 3-edge path between the ports of its endpoints.
struct WaypointLineGraph {
  CapacitatedGraph graph;
  std::vector<LineTag> tag;
  std::vector<VertexId> origin_vertex;  // hub, port, clique-sub: the expanded vertex
  std::vector<EdgeId> origin_edge;      // port: its incident edge; edge-path: the edge
  std::vector<VertexId> hub;            // per source vertex
  /// Ports of each source vertex, indexed like that vertex's incident list.
  std::vector<std::vector<VertexId>> ports;
  /// Edge-path vertices of each source edge: [near edge.u, near edge.v].
  std::vector<std::pair<VertexId, VertexId>> edge_path;
  VertexId source_hub = kNoVertex;
  VertexId target_hub = kNoVertex;
  std::vector<VertexId> waypoint_hubs;  // sorted

  /// Subdivision vertex between ports i and j of vertex v.
  VertexId clique_sub(VertexId v, int i, int j) const;

  std::vector<std::vector<VertexId>> sub_index;  // per vertex, flattened i*d+j
};

/// Throws InputError unless every capacity and weight is 1 and the graph has
/// no parallel edges.
WaypointLineGraph build_waypoint_line_graph(const Instance& normalized);

/// Vertex sequence from source hub to target hub. When s = t the sequence is
/// a cycle (first == last) or the single hub for the empty route.
using LinePath = std::vector<VertexId>;

int line_path_length(const LinePath& p);

/// Route on the normalized instance -> vertex-disjoint path of length
/// 5 * cost. Each waypoint hub is entered on the first pass through it.
LinePath map_route_to_path(const WaypointLineGraph& lg, const Instance& normalized, const Route& r);

/// Vertex-disjoint hub-to-hub path -> route on the normalized instance.
/// Throws InputError for sequences that are not such paths.
Route map_path_to_route(const WaypointLineGraph& lg, const Instance& normalized, const LinePath& p);

/// Violations of the path contract (adjacency, vertex-disjointness, ends,
/// waypoint hubs); empty when p qualifies.
std::vector<std::string> check_line_path(const WaypointLineGraph& lg, const LinePath& p);

struct KCycleLimits {
  int max_terminals = 8;
  std::int64_t node_budget = 50'000'000;
};

/// Pruning information a backend may use without losing optimality.
struct SearchHints {
  std::vector<char> avoid;   // vertices never entered
  std::vector<int> group;    // -1 or a group id; empty means no grouping
  int max_group_run = 0;     // max consecutive path vertices in one group; 0 = unlimited
};

/// Shortest simple path (from == to: simple cycle) through all terminals.
class KCycleBackend {
 public:
  virtual ~KCycleBackend() = default;
  virtual std::string name() const = 0;
  /// Empty optional when no qualifying path exists. Throws LimitError.
  virtual std::optional<LinePath> shortest(const CapacitatedGraph& g, VertexId from, VertexId to,
                                           const std::vector<VertexId>& terminals, const SearchHints& hints,
                                           const KCycleLimits& limits) = 0;
};

/// Depth-first branch and bound over simple paths with BFS-distance lower
/// bounds; lowest-id neighbor first.
class ExhaustiveBackend : public KCycleBackend {
 public:
  std::string name() const override { return "exhaustive"; }
  std::optional<LinePath> shortest(const CapacitatedGraph& g, VertexId from, VertexId to,
                                   const std::vector<VertexId>& terminals, const SearchHints& hints,
                                   const KCycleLimits& limits) override;
};

/// Hubs that are not terminals are avoided (the parallel clique-sub vertex is
/// always free instead). Groups are the vertex gadgets: a shortest path
/// crosses a gadget as port, middle, port, so runs longer than 3 are pruned.
SearchHints search_hints(const WaypointLineGraph& lg);

struct LineOptions {
  KCycleLimits limits;
  /// Feasibility-only mode for backends that cannot guarantee shortest
  /// answers; no shipped backend supports it.
  bool feasibility_only = false;
};

struct LineSolution : Solution {
  int line_vertices = 0;
  int line_edges = 0;
  int path_length = 0;
};

/// reduce_to_cycle, normalize, build the line graph, find the shortest cycle
/// through the anchor hub and all waypoint hubs, map back.
LineSolution solve_via_kcycle(const Instance& inst, KCycleBackend& backend, const LineOptions& options = {});
LineSolution solve_via_kcycle(const Instance& inst, const LineOptions& options = {});

/// Size bounds: |V'|, |E'| <= |V| + 4|E| f and line graph sizes <= 199 |V|^4 f^2.
std::int64_t normalized_size_bound(const CapacitatedGraph& original);
std::int64_t line_graph_size_bound(const CapacitatedGraph& original);

/// `v`/`e` lines of the line graph plus `prov <vid> <tag>` lines.
void write_line_graph(std::ostream& out, const WaypointLineGraph& lg);

}  // namespace wrp
