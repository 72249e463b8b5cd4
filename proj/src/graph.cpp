#include "wrp/graph.hpp"

#include <algorithm>
#include <map>

namespace wrp {

CapacitatedGraph::CapacitatedGraph(int vertex_count)
    : adjacency_(static_cast<std::size_t>(vertex_count)) {}

VertexId CapacitatedGraph::add_vertex() {
  adjacency_.emplace_back();
  return vertex_count() - 1;
}

EdgeId CapacitatedGraph::add_edge(VertexId u, VertexId v, int capacity, Weight weight) {
  if (!has_vertex(u) || !has_vertex(v)) {
    throw InputError("edge endpoint out of range: " + std::to_string(u) + " " +
                     std::to_string(v));
  }
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (capacity < 1) throw InputError("edge capacity must be at least 1");
  if (weight < 0) throw InputError("edge weight must be non-negative");
  const EdgeId id = edge_count();
  edges_.push_back(Edge{id, u, v, capacity, weight});
  adjacency_[static_cast<std::size_t>(u)].push_back(id);
  adjacency_[static_cast<std::size_t>(v)].push_back(id);
  return id;
}

bool CapacitatedGraph::is_connected() const {
  if (vertex_count() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(vertex_count()), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId e : incident(x)) {
      const VertexId y = edge(e).other(x);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == vertex_count();
}

Weight CapacitatedGraph::max_weight() const {
  Weight best = 0;
  for (const Edge& e : edges_) best = std::max(best, e.weight);
  return best;
}

std::vector<std::vector<VertexId>> CapacitatedGraph::simple_adjacency() const {
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(vertex_count()));
  for (const Edge& e : edges_) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

bool Instance::is_waypoint(VertexId v) const {
  return std::binary_search(waypoints.begin(), waypoints.end(), v);
}

void normalize_instance(Instance& inst) {
  const auto& g = inst.graph;
  if (g.vertex_count() < 1) throw InputError("instance has no vertices");
  if (!g.has_vertex(inst.source)) throw InputError("source vertex missing or out of range");
  if (!g.has_vertex(inst.target)) throw InputError("target vertex missing or out of range");
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) throw InputError("self-loop on edge " + std::to_string(e.id));
    if (e.capacity < 1) throw InputError("capacity < 1 on edge " + std::to_string(e.id));
    if (e.weight < 0) throw InputError("negative weight on edge " + std::to_string(e.id));
  }
  if (!g.is_connected()) throw InputError("graph is disconnected");
  auto& w = inst.waypoints;
  for (VertexId v : w) {
    if (!g.has_vertex(v)) throw InputError("waypoint out of range: " + std::to_string(v));
  }
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  std::erase_if(w, [&](VertexId v) { return v == inst.source || v == inst.target; });
}

std::vector<VertexId> Route::vertices(const CapacitatedGraph& g) const {
  std::vector<VertexId> out{start};
  VertexId cur = start;
  for (const Step& s : steps) {
    const Edge& e = g.edge(s.edge);
    cur = s.forward ? e.v : e.u;
    out.push_back(cur);
  }
  return out;
}

VertexId Route::end(const CapacitatedGraph& g) const {
  if (steps.empty()) return start;
  const Step& s = steps.back();
  const Edge& e = g.edge(s.edge);
  return s.forward ? e.v : e.u;
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

ValidationReport validate_route(const Instance& inst, const Route& r) {
  ValidationReport report;
  const auto& g = inst.graph;
  auto add = [&](ViolationKind kind, int step, EdgeId e, VertexId v, std::string msg) {
    report.violations.push_back(Violation{kind, step, e, v, std::move(msg)});
  };
  if (r.start != inst.source) {
    add(ViolationKind::kWrongStart, -1, kNoEdge, r.start,
        "route starts at " + std::to_string(r.start) + ", expected source " +
            std::to_string(inst.source));
  }
  std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
  if (g.has_vertex(r.start)) visited[static_cast<std::size_t>(r.start)] = 1;
  std::map<EdgeId, int> usage;
  VertexId cur = r.start;
  bool contiguous = true;
  for (int i = 0; i < r.length(); ++i) {
    const Step& s = r.steps[static_cast<std::size_t>(i)];
    if (s.edge < 0 || s.edge >= g.edge_count()) {
      add(ViolationKind::kUnknownEdge, i, s.edge, kNoVertex,
          "unknown edge " + std::to_string(s.edge) + " at step " + std::to_string(i));
      contiguous = false;
      break;
    }
    const Edge& e = g.edge(s.edge);
    const VertexId tail = s.forward ? e.u : e.v;
    const VertexId head = s.forward ? e.v : e.u;
    if (tail != cur) {
      add(ViolationKind::kDiscontinuous, i, s.edge, cur,
          "discontinuous at step " + std::to_string(i));
      contiguous = false;
      break;
    }
    cur = head;
    visited[static_cast<std::size_t>(cur)] = 1;
    if (++usage[s.edge] == e.capacity + 1) {
      add(ViolationKind::kCapacityExceeded, i, s.edge, kNoVertex,
          "capacity exceeded on edge " + std::to_string(s.edge) + " at step " +
              std::to_string(i));
    }
  }
  if (contiguous && cur != inst.target) {
    add(ViolationKind::kWrongEnd, r.length(), kNoEdge, cur,
        "route ends at " + std::to_string(cur) + ", expected target " +
            std::to_string(inst.target));
  }
  if (contiguous) {
    for (VertexId w : inst.waypoints) {
      if (!visited[static_cast<std::size_t>(w)]) {
        add(ViolationKind::kWaypointUnvisited, -1, kNoEdge, w,
            "waypoint unvisited: " + std::to_string(w));
      }
    }
  }
  return report;
}

Weight walk_weight(const CapacitatedGraph& g, const Route& r) {
  Weight total = 0;
  for (const Step& s : r.steps) total += g.edge(s.edge).weight;
  return total;
}

Weight route_cost(const Instance& inst, const Route& r) {
  const ValidationReport rep = validate_route(inst, r);
  if (!rep.ok()) throw InputError("invalid route: " + rep.violations.front().message);
  return walk_weight(inst.graph, r);
}

}  // namespace wrp
