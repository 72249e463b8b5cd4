#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wrp {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using Weight = std::int64_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

/// Raised for malformed graphs, instances, and input files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a solver exceeds a configured resource or width limit.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  EdgeId id = kNoEdge;
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  int capacity = 1;
  Weight weight = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool touches(VertexId x) const { return x == u || x == v; }
};

/// Undirected multigraph with per-edge capacity and weight. Vertices are the
/// dense range [0, vertex_count()), edge ids are dense indices into edges().
class CapacitatedGraph {
 public:
  CapacitatedGraph() = default;
  explicit CapacitatedGraph(int vertex_count);

  VertexId add_vertex();
  EdgeId add_edge(VertexId u, VertexId v, int capacity, Weight weight);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  Edge& mutable_edge(EdgeId e) { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }
  bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }

  bool is_connected() const;
  Weight max_weight() const;

  /// Simple adjacency (parallel edges merged), sorted neighbor lists.
  std::vector<std::vector<VertexId>> simple_adjacency() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adjacency_;
};

struct Instance {
  CapacitatedGraph graph;
  VertexId source = kNoVertex;
  VertexId target = kNoVertex;
  std::vector<VertexId> waypoints;  // sorted, unique, excludes source and target

  int waypoint_count() const { return static_cast<int>(waypoints.size()); }
  bool is_waypoint(VertexId v) const;
};

/// Checks the load-time invariants: positive capacities, non-negative weights,
/// no self-loops, connectivity, terminals in range. Normalizes the waypoint set
/// (sorted, deduplicated, s and t dropped). Throws InputError.
void normalize_instance(Instance& inst);

struct Step {
  EdgeId edge = kNoEdge;
  bool forward = true;  // true: traversed from edge.u to edge.v
};

struct Route {
  VertexId start = kNoVertex;
  std::vector<Step> steps;

  int length() const { return static_cast<int>(steps.size()); }
  /// Vertex sequence, size length()+1. Assumes the steps are contiguous.
  std::vector<VertexId> vertices(const CapacitatedGraph& g) const;
  VertexId end(const CapacitatedGraph& g) const;
};

enum class ViolationKind {
  kUnknownEdge,
  kDiscontinuous,
  kCapacityExceeded,
  kWrongStart,
  kWrongEnd,
  kWaypointUnvisited,
};

struct Violation {
  ViolationKind kind;
  int step = -1;
  EdgeId edge = kNoEdge;
  VertexId vertex = kNoVertex;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

ValidationReport validate_route(const Instance& inst, const Route& r);

/// Sum of traversed edge weights. Throws InputError when r is invalid.
Weight route_cost(const Instance& inst, const Route& r);

/// Weight sum without validation.
Weight walk_weight(const CapacitatedGraph& g, const Route& r);

/// Outcome shared by all solvers. `route` and `cost` are meaningful only when
/// feasible; `explored` counts solver-specific work (states, table entries).
struct Solution {
  bool feasible = false;
  Weight cost = 0;
  Route route;
  std::int64_t explored = 0;
};

}  // namespace wrp
