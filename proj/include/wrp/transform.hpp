#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wrp/graph.hpp"

namespace wrp {

enum class TransformKind { kClamp, kUnify, kReduceToCycle, kNormalize };

std::string to_string(TransformKind kind);

/// One applied transform. Every edge of the output graph records which input
/// edge it stands for, which parallel copy, and how many output edges the copy
/// was split into; synthetic edges and vertices map to kNoEdge / kNoVertex.
struct TraceStep {
  TransformKind kind = TransformKind::kClamp;
  CapacitatedGraph input;
  std::vector<EdgeId> edge_origin;
  std::vector<int> edge_copy;
  std::vector<int> copy_length;
  std::vector<VertexId> vertex_origin;
  Weight scale = 1;
  // kReduceToCycle only.
  VertexId hub = kNoVertex;
  VertexId old_source = kNoVertex;
  VertexId old_target = kNoVertex;
};

struct TransformTrace {
  std::vector<TraceStep> steps;

  Weight scale() const;
  std::vector<TransformKind> kinds() const;
  void append(TransformTrace other);
};

/// Lifts a route on the final transformed graph back to the original graph by
/// undoing the recorded steps in reverse order.
Route lift_route(const TransformTrace& trace, const Route& r);

/// Replaces every capacity c by min(c, 2). Ids and weights are unchanged.
std::pair<CapacitatedGraph, TransformTrace> clamp_capacities(const CapacitatedGraph& g);

/// Replaces each edge by c(e) parallel 2-edge paths through fresh vertices.
/// All weights are doubled first so each half keeps the original weight;
/// the trace scale is 2. Requires capacities <= 2.
std::pair<CapacitatedGraph, TransformTrace> unify(const CapacitatedGraph& g);

/// Adds a hub adjacent to s and t (unit capacity, weight = one unit) and makes
/// it both terminals; s and t become waypoints. Identity when s == t.
std::pair<Instance, TransformTrace> reduce_to_cycle(const Instance& inst);

/// Simple graph with unit weights and capacities: clamp, duplicate capacity-2
/// edges, expand weight w into w unit edges, then subdivide every unit edge.
/// Trace scale is 2. Zero-weight edges are rejected.
std::pair<CapacitatedGraph, TransformTrace> normalize_simple_unit(const CapacitatedGraph& g);

/// Same as the graph-level transforms but carrying terminals and waypoints.
std::pair<Instance, TransformTrace> clamp_instance(const Instance& inst);
std::pair<Instance, TransformTrace> unify_instance(const Instance& inst);
std::pair<Instance, TransformTrace> normalize_instance_simple_unit(const Instance& inst);

Route reverse_route(const CapacitatedGraph& g, const Route& r);

/// Pushes a route on the original graph forward through the recorded steps:
/// split edges expand into their pieces (later traversals of an edge take its
/// next parallel copy) and the cycle reduction wraps the route with the hub
/// edges. Throws InputError when a copy is exhausted.
Route lower_route(const TransformTrace& trace, const Route& r);

}  // namespace wrp
