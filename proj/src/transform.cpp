#include "wrp/transform.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wrp {

std::string to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::kClamp: return "clamp";
    case TransformKind::kUnify: return "unify";
    case TransformKind::kReduceToCycle: return "reduce-to-cycle";
    case TransformKind::kNormalize: return "normalize";
  }
  return "?";
}

Weight TransformTrace::scale() const {
  Weight s = 1;
  for (const TraceStep& step : steps) s *= step.scale;
  return s;
}

std::vector<TransformKind> TransformTrace::kinds() const {
  std::vector<TransformKind> out;
  for (const TraceStep& step : steps) out.push_back(step.kind);
  return out;
}

void TransformTrace::append(TransformTrace other) {
  for (auto& s : other.steps) steps.push_back(std::move(s));
}

Route reverse_route(const CapacitatedGraph& g, const Route& r) {
  Route out;
  out.start = r.end(g);
  for (auto it = r.steps.rbegin(); it != r.steps.rend(); ++it) {
    out.steps.push_back(Step{it->edge, !it->forward});
  }
  return out;
}

namespace {

TraceStep identity_step(const CapacitatedGraph& g, TransformKind kind) {
  TraceStep step;
  step.kind = kind;
  step.input = g;
  step.edge_origin.resize(static_cast<std::size_t>(g.edge_count()));
  std::iota(step.edge_origin.begin(), step.edge_origin.end(), 0);
  step.edge_copy.assign(static_cast<std::size_t>(g.edge_count()), 0);
  step.copy_length.assign(static_cast<std::size_t>(g.edge_count()), 1);
  step.vertex_origin.resize(static_cast<std::size_t>(g.vertex_count()));
  std::iota(step.vertex_origin.begin(), step.vertex_origin.end(), 0);
  return step;
}

// Output graph built by the subdividing transforms; mapping vectors are filled
// as edges are added.
struct SplitBuilder {
  CapacitatedGraph out;
  TraceStep step;

  SplitBuilder(const CapacitatedGraph& g, TransformKind kind, Weight scale) : out(g.vertex_count()) {
    step.kind = kind;
    step.input = g;
    step.scale = scale;
    step.vertex_origin.resize(static_cast<std::size_t>(g.vertex_count()));
    std::iota(step.vertex_origin.begin(), step.vertex_origin.end(), 0);
  }

  VertexId fresh() {
    step.vertex_origin.push_back(kNoVertex);
    return out.add_vertex();
  }

  void edge(VertexId a, VertexId b, Weight w, EdgeId origin, int copy, int length) {
    out.add_edge(a, b, 1, w);
    step.edge_origin.push_back(origin);
    step.edge_copy.push_back(copy);
    step.copy_length.push_back(length);
  }

  // Path of `pieces` edges from u to v through fresh vertices.
  void path(VertexId u, VertexId v, int pieces, Weight w, EdgeId origin, int copy) {
    VertexId cur = u;
    for (int i = 0; i < pieces; ++i) {
      const VertexId next = (i + 1 == pieces) ? v : fresh();
      edge(cur, next, w, origin, copy, pieces);
      cur = next;
    }
  }
};

// Builds a split graph so that the first output edge of copy 0 of every input
// edge e keeps id e; all remaining edges are appended after the input range.
template <typename PiecesFn, typename WeightFn>
std::pair<CapacitatedGraph, TraceStep> split_edges(const CapacitatedGraph& g, TransformKind kind,
                                                   Weight scale, PiecesFn pieces_of,
                                                   WeightFn piece_weight) {
  SplitBuilder b(g, kind, scale);
  // Reserve ids [0, m) for the first piece of copy 0.
  std::vector<VertexId> first_head(static_cast<std::size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) {
    const int pieces = pieces_of(e);
    const VertexId head = pieces == 1 ? e.v : b.fresh();
    first_head[static_cast<std::size_t>(e.id)] = head;
    b.edge(e.u, head, piece_weight(e), e.id, 0, pieces);
  }
  for (const Edge& e : g.edges()) {
    const int pieces = pieces_of(e);
    const Weight w = piece_weight(e);
    if (pieces > 1) b.path(first_head[static_cast<std::size_t>(e.id)], e.v, pieces - 1, w, e.id, 0);
    const int copies = std::min(e.capacity, 2);
    for (int c = 1; c < copies; ++c) b.path(e.u, e.v, pieces, w, e.id, c);
  }
  // Every piece of a copy records the full copy length.
  for (std::size_t i = 0; i < b.step.copy_length.size(); ++i) {
    const Edge& src = g.edge(b.step.edge_origin[i]);
    b.step.copy_length[i] = pieces_of(src);
  }
  return {std::move(b.out), std::move(b.step)};
}

Route lift_split(const TraceStep& step, const Route& r) {
  Route out;
  out.start = step.vertex_origin.at(static_cast<std::size_t>(r.start));
  if (out.start == kNoVertex) throw InputError("route starts on a subdivision vertex");
  std::size_t i = 0;
  VertexId cur = out.start;
  while (i < r.steps.size()) {
    const auto e = static_cast<std::size_t>(r.steps[i].edge);
    const EdgeId origin = step.edge_origin.at(e);
    const int copy = step.edge_copy.at(e);
    const auto len = static_cast<std::size_t>(step.copy_length.at(e));
    if (i + len > r.steps.size()) throw InputError("route ends inside a subdivided edge");
    for (std::size_t j = i; j < i + len; ++j) {
      const auto ej = static_cast<std::size_t>(r.steps[j].edge);
      if (step.edge_origin.at(ej) != origin || step.edge_copy.at(ej) != copy) {
        throw InputError("route turns inside a subdivided edge");
      }
    }
    const Edge& orig = step.input.edge(origin);
    const bool forward = orig.u == cur;
    if (!orig.touches(cur)) throw InputError("lifted route is discontinuous");
    out.steps.push_back(Step{origin, forward});
    cur = orig.other(cur);
    i += len;
  }
  return out;
}

Route lift_reduce(const TraceStep& step, const CapacitatedGraph& reduced, const Route& r) {
  if (step.hub == kNoVertex) return r;
  if (r.steps.size() < 2) throw InputError("closed route does not leave the hub");
  Route walk = r;
  const Edge& first = reduced.edge(walk.steps.front().edge);
  if (first.other(step.hub) == step.old_target && step.old_source != step.old_target) {
    walk = reverse_route(reduced, walk);
  }
  Route out;
  const Edge& lead = reduced.edge(walk.steps.front().edge);
  out.start = lead.other(step.hub);
  for (std::size_t i = 1; i + 1 < walk.steps.size(); ++i) {
    const Step& s = walk.steps[i];
    if (step.edge_origin.at(static_cast<std::size_t>(s.edge)) == kNoEdge) {
      throw InputError("route revisits the hub");
    }
    out.steps.push_back(s);
  }
  return out;
}

}  // namespace

std::pair<CapacitatedGraph, TransformTrace> clamp_capacities(const CapacitatedGraph& g) {
  CapacitatedGraph out = g;
  for (EdgeId e = 0; e < out.edge_count(); ++e) {
    auto& edge = out.mutable_edge(e);
    edge.capacity = std::min(edge.capacity, 2);
  }
  TransformTrace trace;
  trace.steps.push_back(identity_step(g, TransformKind::kClamp));
  return {std::move(out), std::move(trace)};
}

std::pair<CapacitatedGraph, TransformTrace> unify(const CapacitatedGraph& g) {
  for (const Edge& e : g.edges()) {
    if (e.capacity > 2) {
      throw InputError("unify requires capacities <= 2 (edge " + std::to_string(e.id) + ")");
    }
  }
  auto [out, step] = split_edges(
      g, TransformKind::kUnify, 2, [](const Edge&) { return 2; },
      [](const Edge& e) { return e.weight; });
  TransformTrace trace;
  trace.steps.push_back(std::move(step));
  return {std::move(out), std::move(trace)};
}

std::pair<CapacitatedGraph, TransformTrace> normalize_simple_unit(const CapacitatedGraph& g) {
  for (const Edge& e : g.edges()) {
    if (e.weight == 0) {
      throw InputError("zero-weight edge " + std::to_string(e.id) +
                       " cannot be expanded into unit edges");
    }
  }
  auto [clamped, trace] = clamp_capacities(g);
  auto [out, step] = split_edges(
      clamped, TransformKind::kNormalize, 2,
      [](const Edge& e) { return static_cast<int>(2 * e.weight); },
      [](const Edge&) { return Weight{1}; });
  trace.steps.push_back(std::move(step));
  return {std::move(out), std::move(trace)};
}

std::pair<Instance, TransformTrace> reduce_to_cycle(const Instance& inst) {
  Instance out = inst;
  TransformTrace trace;
  TraceStep step = identity_step(inst.graph, TransformKind::kReduceToCycle);
  step.old_source = inst.source;
  step.old_target = inst.target;
  if (inst.source != inst.target) {
    const VertexId hub = out.graph.add_vertex();
    step.vertex_origin.push_back(kNoVertex);
    for (VertexId end : {inst.source, inst.target}) {
      out.graph.add_edge(hub, end, 1, 1);
      step.edge_origin.push_back(kNoEdge);
      step.edge_copy.push_back(0);
      step.copy_length.push_back(1);
    }
    step.hub = hub;
    out.source = hub;
    out.target = hub;
    out.waypoints.push_back(inst.source);
    out.waypoints.push_back(inst.target);
    std::sort(out.waypoints.begin(), out.waypoints.end());
  }
  trace.steps.push_back(std::move(step));
  return {std::move(out), std::move(trace)};
}

std::pair<Instance, TransformTrace> clamp_instance(const Instance& inst) {
  auto [g, trace] = clamp_capacities(inst.graph);
  Instance out = inst;
  out.graph = std::move(g);
  return {std::move(out), std::move(trace)};
}

std::pair<Instance, TransformTrace> unify_instance(const Instance& inst) {
  auto [g, trace] = unify(inst.graph);
  Instance out = inst;
  out.graph = std::move(g);
  return {std::move(out), std::move(trace)};
}

std::pair<Instance, TransformTrace> normalize_instance_simple_unit(const Instance& inst) {
  auto [g, trace] = normalize_simple_unit(inst.graph);
  Instance out = inst;
  out.graph = std::move(g);
  return {std::move(out), std::move(trace)};
}

namespace {

Route lower_split(const TraceStep& step, const Route& r) {
  std::map<std::pair<EdgeId, int>, std::vector<EdgeId>> pieces;
  for (std::size_t i = 0; i < step.edge_origin.size(); ++i) {
    pieces[{step.edge_origin[i], step.edge_copy[i]}].push_back(static_cast<EdgeId>(i));
  }
  std::map<EdgeId, int> uses;
  Route out;
  out.start = r.start;
  for (const Step& s : r.steps) {
    const int copy = uses[s.edge]++;
    const auto it = pieces.find({s.edge, copy});
    if (it == pieces.end()) throw InputError("edge " + std::to_string(s.edge) + " used more often than it has copies");
    if (s.forward) {
      for (EdgeId e : it->second) out.steps.push_back(Step{e, true});
    } else {
      for (auto e = it->second.rbegin(); e != it->second.rend(); ++e) out.steps.push_back(Step{*e, false});
    }
  }
  return out;
}

}  // namespace

Route lower_route(const TransformTrace& trace, const Route& r) {
  Route cur = r;
  for (const TraceStep& step : trace.steps) {
    switch (step.kind) {
      case TransformKind::kClamp:
        break;
      case TransformKind::kUnify:
      case TransformKind::kNormalize:
        cur = lower_split(step, cur);
        break;
      case TransformKind::kReduceToCycle: {
        if (step.hub == kNoVertex) break;
        const EdgeId to_source = step.input.edge_count();
        Route wrapped;
        wrapped.start = step.hub;
        wrapped.steps.push_back(Step{to_source, true});
        for (const Step& s : cur.steps) wrapped.steps.push_back(s);
        wrapped.steps.push_back(Step{to_source + 1, false});
        cur = std::move(wrapped);
        break;
      }
    }
  }
  return cur;
}

Route lift_route(const TransformTrace& trace, const Route& r) {
  Route cur = r;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    switch (it->kind) {
      case TransformKind::kClamp:
        break;
      case TransformKind::kUnify:
      case TransformKind::kNormalize:
        cur = lift_split(*it, cur);
        break;
      case TransformKind::kReduceToCycle: {
        // Rebuild the reduced graph's hub edges from the recorded terminals.
        CapacitatedGraph reduced = it->input;
        if (it->hub != kNoVertex) {
          const VertexId hub = reduced.add_vertex();
          reduced.add_edge(hub, it->old_source, 1, 1);
          reduced.add_edge(hub, it->old_target, 1, 1);
        }
        cur = lift_reduce(*it, reduced, cur);
        break;
      }
    }
  }
  return cur;
}

}  // namespace wrp
