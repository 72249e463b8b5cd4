#include "wrp/line_graph.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <queue>
#include <set>

namespace wrp {

std::string to_string(LineTag tag) {
  switch (tag) {
    case LineTag::kHub: return "hub";
    case LineTag::kPort: return "port";
    case LineTag::kEdgePath: return "edge-path";
    case LineTag::kCliqueSub: return "clique-sub";
  }
  return "?";
}

VertexId WaypointLineGraph::clique_sub(VertexId v, int i, int j) const {
  const auto d = static_cast<int>(ports[static_cast<std::size_t>(v)].size());
  return sub_index[static_cast<std::size_t>(v)][static_cast<std::size_t>(i * d + j)];
}

namespace {

int incident_index(const CapacitatedGraph& g, VertexId v, EdgeId e) {
  const auto inc = g.incident(v);
  const auto it = std::find(inc.begin(), inc.end(), e);
  if (it == inc.end()) throw InputError("edge not incident to vertex");
  return static_cast<int>(it - inc.begin());
}

bool adjacent(const CapacitatedGraph& g, VertexId a, VertexId b) {
  const VertexId probe = g.degree(a) <= g.degree(b) ? a : b;
  const VertexId other = probe == a ? b : a;
  for (EdgeId e : g.incident(probe)) {
    if (g.edge(e).other(probe) == other) return true;
  }
  return false;
}

}  // namespace

WaypointLineGraph build_waypoint_line_graph(const Instance& normalized) {
  const CapacitatedGraph& g = normalized.graph;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : g.edges()) {
    if (e.capacity != 1 || e.weight != 1) throw InputError("line graph needs unit capacities and weights");
    if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) {
      throw InputError("line graph needs a graph without parallel edges");
    }
  }
  WaypointLineGraph lg;
  auto add = [&](LineTag tag, VertexId v, EdgeId e) {
    lg.tag.push_back(tag);
    lg.origin_vertex.push_back(v);
    lg.origin_edge.push_back(e);
    return lg.graph.add_vertex();
  };
  const int n = g.vertex_count();
  lg.hub.resize(static_cast<std::size_t>(n));
  lg.ports.resize(static_cast<std::size_t>(n));
  lg.sub_index.resize(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    const VertexId h = add(LineTag::kHub, v, kNoEdge);
    lg.hub[static_cast<std::size_t>(v)] = h;
    const auto inc = g.incident(v);
    const int d = static_cast<int>(inc.size());
    auto& ports = lg.ports[static_cast<std::size_t>(v)];
    for (int i = 0; i < d; ++i) {
      const VertexId p = add(LineTag::kPort, v, inc[static_cast<std::size_t>(i)]);
      ports.push_back(p);
      lg.graph.add_edge(h, p, 1, 1);
    }
    auto& subs = lg.sub_index[static_cast<std::size_t>(v)];
    subs.assign(static_cast<std::size_t>(d * d), kNoVertex);
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        const VertexId x = add(LineTag::kCliqueSub, v, kNoEdge);
        lg.graph.add_edge(ports[static_cast<std::size_t>(i)], x, 1, 1);
        lg.graph.add_edge(x, ports[static_cast<std::size_t>(j)], 1, 1);
        subs[static_cast<std::size_t>(i * d + j)] = x;
        subs[static_cast<std::size_t>(j * d + i)] = x;
      }
    }
  }
  for (const Edge& e : g.edges()) {
    const VertexId pu = lg.ports[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(incident_index(g, e.u, e.id))];
    const VertexId pv = lg.ports[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(incident_index(g, e.v, e.id))];
    const VertexId a = add(LineTag::kEdgePath, kNoVertex, e.id);
    const VertexId b = add(LineTag::kEdgePath, kNoVertex, e.id);
    lg.graph.add_edge(pu, a, 1, 1);
    lg.graph.add_edge(a, b, 1, 1);
    lg.graph.add_edge(b, pv, 1, 1);
    lg.edge_path.emplace_back(a, b);
  }
  lg.source_hub = lg.hub.at(static_cast<std::size_t>(normalized.source));
  lg.target_hub = lg.hub.at(static_cast<std::size_t>(normalized.target));
  for (VertexId w : normalized.waypoints) lg.waypoint_hubs.push_back(lg.hub[static_cast<std::size_t>(w)]);
  std::sort(lg.waypoint_hubs.begin(), lg.waypoint_hubs.end());
  return lg;
}

int line_path_length(const LinePath& p) { return p.empty() ? 0 : static_cast<int>(p.size()) - 1; }

LinePath map_route_to_path(const WaypointLineGraph& lg, const Instance& normalized, const Route& r) {
  const CapacitatedGraph& g = normalized.graph;
  LinePath path{lg.hub.at(static_cast<std::size_t>(r.start))};
  if (r.steps.empty()) return path;
  std::vector<char> pending(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexId w : normalized.waypoints) pending[static_cast<std::size_t>(w)] = 1;
  VertexId cur = r.start;
  int prev_index = -1;
  for (const Step& s : r.steps) {
    const Edge& e = g.edge(s.edge);
    if (!e.touches(cur)) throw InputError("route is discontinuous");
    const int here = incident_index(g, cur, e.id);
    const auto& ports = lg.ports[static_cast<std::size_t>(cur)];
    if (prev_index >= 0) {
      if (pending[static_cast<std::size_t>(cur)]) {
        path.push_back(lg.hub[static_cast<std::size_t>(cur)]);
        pending[static_cast<std::size_t>(cur)] = 0;
      } else {
        path.push_back(lg.clique_sub(cur, prev_index, here));
      }
    }
    path.push_back(ports[static_cast<std::size_t>(here)]);
    const auto [a, b] = lg.edge_path[static_cast<std::size_t>(e.id)];
    if (cur == e.u) {
      path.push_back(a);
      path.push_back(b);
    } else {
      path.push_back(b);
      path.push_back(a);
    }
    cur = e.other(cur);
    prev_index = incident_index(g, cur, e.id);
    path.push_back(lg.ports[static_cast<std::size_t>(cur)][static_cast<std::size_t>(prev_index)]);
  }
  path.push_back(lg.hub[static_cast<std::size_t>(cur)]);
  return path;
}

std::vector<std::string> check_line_path(const WaypointLineGraph& lg, const LinePath& p) {
  std::vector<std::string> errors;
  if (p.empty()) {
    errors.push_back("empty path");
    return errors;
  }
  if (p.front() != lg.source_hub) errors.push_back("path does not start at the source hub");
  if (p.back() != lg.target_hub) errors.push_back("path does not end at the target hub");
  const bool closed = lg.source_hub == lg.target_hub;
  if (!closed && p.size() < 2) errors.push_back("path too short");
  if (closed && p.size() > 1 && p.size() < 4) errors.push_back("cycle too short");
  std::vector<char> used(static_cast<std::size_t>(lg.graph.vertex_count()), 0);
  const std::size_t distinct_end = closed && p.size() > 1 ? p.size() - 1 : p.size();
  for (std::size_t i = 0; i < distinct_end; ++i) {
    const VertexId v = p[i];
    if (v < 0 || v >= lg.graph.vertex_count()) {
      errors.push_back("unknown vertex " + std::to_string(v));
      return errors;
    }
    if (used[static_cast<std::size_t>(v)]) errors.push_back("vertex repeated: " + std::to_string(v));
    used[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!adjacent(lg.graph, p[i], p[i + 1])) {
      errors.push_back("not adjacent at position " + std::to_string(i));
    }
  }
  for (VertexId h : lg.waypoint_hubs) {
    if (!used[static_cast<std::size_t>(h)]) errors.push_back("waypoint hub missed: " + std::to_string(h));
  }
  return errors;
}

Route map_path_to_route(const WaypointLineGraph& lg, const Instance& normalized, const LinePath& p) {
  const auto errors = check_line_path(lg, p);
  if (!errors.empty()) throw InputError("malformed line path: " + errors.front());
  Route r;
  r.start = normalized.source;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const VertexId a = p[i];
    const VertexId b = p[i + 1];
    if (lg.tag[static_cast<std::size_t>(a)] != LineTag::kEdgePath || lg.tag[static_cast<std::size_t>(b)] != LineTag::kEdgePath) {
      continue;
    }
    const EdgeId e = lg.origin_edge[static_cast<std::size_t>(a)];
    r.steps.push_back(Step{e, lg.edge_path[static_cast<std::size_t>(e)].first == a});
  }
  return r;
}

SearchHints search_hints(const WaypointLineGraph& lg) {
  SearchHints hints;
  hints.avoid.assign(static_cast<std::size_t>(lg.graph.vertex_count()), 0);
  for (VertexId h : lg.hub) hints.avoid[static_cast<std::size_t>(h)] = 1;
  hints.avoid[static_cast<std::size_t>(lg.source_hub)] = 0;
  hints.avoid[static_cast<std::size_t>(lg.target_hub)] = 0;
  for (VertexId h : lg.waypoint_hubs) hints.avoid[static_cast<std::size_t>(h)] = 0;
  hints.group.resize(lg.tag.size());
  for (std::size_t v = 0; v < lg.tag.size(); ++v) {
    hints.group[v] = lg.tag[v] == LineTag::kEdgePath ? -1 : lg.origin_vertex[v];
  }
  hints.max_group_run = 3;
  return hints;
}

namespace {

constexpr int kFar = std::numeric_limits<int>::max() / 4;

std::vector<int> bfs(const std::vector<std::vector<VertexId>>& adj, VertexId from, const std::vector<char>& avoid) {
  std::vector<int> dist(adj.size(), kFar);
  std::queue<VertexId> q;
  dist[static_cast<std::size_t>(from)] = 0;
  q.push(from);
  while (!q.empty()) {
    const VertexId x = q.front();
    q.pop();
    for (VertexId y : adj[static_cast<std::size_t>(x)]) {
      if (avoid[static_cast<std::size_t>(y)] || dist[static_cast<std::size_t>(y)] != kFar) continue;
      dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
      q.push(y);
    }
  }
  return dist;
}

class PathSearch {
 public:
  PathSearch(const CapacitatedGraph& g, VertexId from, VertexId to, const std::vector<VertexId>& terminals,
             const std::vector<char>& avoid, const std::vector<int>& group, int max_run,
             const KCycleLimits& limits)
      : from_(from), to_(to), avoid_(avoid), group_(group), max_run_(max_run), budget_(limits.node_budget) {
    adj_ = g.simple_adjacency();
    for (VertexId t : terminals) {
      if (t != from && t != to && std::find(terms_.begin(), terms_.end(), t) == terms_.end()) terms_.push_back(t);
    }
    std::sort(terms_.begin(), terms_.end());
    to_dist_ = bfs(adj_, to, avoid_);
    for (VertexId t : terms_) term_dist_.push_back(bfs(adj_, t, avoid_));
    term_index_.assign(adj_.size(), -1);
    for (std::size_t i = 0; i < terms_.size(); ++i) term_index_[static_cast<std::size_t>(terms_[i])] = static_cast<int>(i);
    done_.assign(terms_.size(), 0);
    on_path_.assign(adj_.size(), 0);
    remaining_ = static_cast<int>(terms_.size());
  }

  std::optional<LinePath> run() {
    path_.push_back(from_);
    on_path_[static_cast<std::size_t>(from_)] = 1;
    if (from_ == to_ && terms_.empty()) return LinePath{from_};
    dfs(from_, 0, 1);
    if (best_.empty()) return std::nullopt;
    return best_;
  }

 private:
  int bound(VertexId v) const {
    int lb = 0;
    bool any = false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (done_[i]) continue;
      any = true;
      const auto& d = term_dist_[i];
      lb = std::max(lb, d[static_cast<std::size_t>(v)] + d[static_cast<std::size_t>(to_)]);
    }
    if (!any) lb = to_dist_[static_cast<std::size_t>(v)];
    return lb;
  }

  int run_after(VertexId cur, VertexId y, int run) const {
    if (group_.empty()) return 1;
    const int gy = group_[static_cast<std::size_t>(y)];
    return gy >= 0 && gy == group_[static_cast<std::size_t>(cur)] ? run + 1 : 1;
  }

  void dfs(VertexId cur, int len, int run) {
    if (--budget_ < 0) throw LimitError("k-cycle search exceeded its node budget");
    for (VertexId y : adj_[static_cast<std::size_t>(cur)]) {
      const int next_run = run_after(cur, y, run);
      if (max_run_ > 0 && next_run > max_run_) continue;
      if (y == to_) {
        const bool long_enough = from_ != to_ || len + 1 >= 3;
        if (long_enough && remaining_ == 0 && len + 1 < best_len_) {
          best_len_ = len + 1;
          best_ = path_;
          best_.push_back(to_);
        }
        continue;
      }
      if (on_path_[static_cast<std::size_t>(y)] || avoid_[static_cast<std::size_t>(y)]) continue;
      const int ti = term_index_[static_cast<std::size_t>(y)];
      if (ti >= 0) {
        done_[static_cast<std::size_t>(ti)] = 1;
        --remaining_;
      }
      const int lb = bound(y);
      if (lb < kFar && len + 1 + lb < best_len_) {
        on_path_[static_cast<std::size_t>(y)] = 1;
        path_.push_back(y);
        dfs(y, len + 1, next_run);
        path_.pop_back();
        on_path_[static_cast<std::size_t>(y)] = 0;
      }
      if (ti >= 0) {
        done_[static_cast<std::size_t>(ti)] = 0;
        ++remaining_;
      }
    }
  }

  VertexId from_;
  VertexId to_;
  const std::vector<char>& avoid_;
  const std::vector<int>& group_;
  int max_run_;
  std::int64_t budget_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<VertexId> terms_;
  std::vector<int> to_dist_;
  std::vector<std::vector<int>> term_dist_;
  std::vector<int> term_index_;
  std::vector<char> done_;
  std::vector<char> on_path_;
  LinePath path_;
  LinePath best_;
  int best_len_ = kFar;
  int remaining_ = 0;
};

}  // namespace

std::optional<LinePath> ExhaustiveBackend::shortest(const CapacitatedGraph& g, VertexId from, VertexId to,
                                                    const std::vector<VertexId>& terminals,
                                                    const SearchHints& hints, const KCycleLimits& limits) {
  if (static_cast<int>(terminals.size()) > limits.max_terminals) {
    throw LimitError("k-cycle backend limited to " + std::to_string(limits.max_terminals) + " terminals");
  }
  std::vector<char> skip = hints.avoid;
  skip.resize(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> group = hints.group;
  if (!group.empty()) group.resize(static_cast<std::size_t>(g.vertex_count()), -1);
  PathSearch search(g, from, to, terminals, skip, group, hints.max_group_run, limits);
  return search.run();
}

LineSolution solve_via_kcycle(const Instance& inst, KCycleBackend& backend, const LineOptions& options) {
  LineSolution result;
  if (options.feasibility_only) throw InputError("no shipped backend supports feasibility-only mode");
  if (inst.source == inst.target && inst.waypoints.empty()) {
    result.feasible = true;
    result.route.start = inst.source;
    return result;
  }
  auto [cycle, trace] = reduce_to_cycle(inst);
  auto [normalized, norm_trace] = normalize_instance_simple_unit(cycle);
  trace.append(std::move(norm_trace));
  const WaypointLineGraph lg = build_waypoint_line_graph(normalized);
  result.line_vertices = lg.graph.vertex_count();
  result.line_edges = lg.graph.edge_count();
  std::vector<VertexId> terminals = lg.waypoint_hubs;
  terminals.push_back(lg.source_hub);
  const auto path = backend.shortest(lg.graph, lg.source_hub, lg.target_hub, terminals, search_hints(lg),
                                     options.limits);
  if (!path) return result;
  result.path_length = line_path_length(*path);
  const Route lowered = map_path_to_route(lg, normalized, *path);
  result.route = lift_route(trace, lowered);
  result.cost = route_cost(inst, result.route);
  result.feasible = true;
  return result;
}

LineSolution solve_via_kcycle(const Instance& inst, const LineOptions& options) {
  ExhaustiveBackend backend;
  return solve_via_kcycle(inst, backend, options);
}

std::int64_t normalized_size_bound(const CapacitatedGraph& original) {
  const std::int64_t f = std::max<Weight>(1, original.max_weight());
  return original.vertex_count() + 4 * static_cast<std::int64_t>(original.edge_count()) * f;
}

std::int64_t line_graph_size_bound(const CapacitatedGraph& original) {
  const std::int64_t f = std::max<Weight>(1, original.max_weight());
  const std::int64_t n = original.vertex_count();
  return 199 * n * n * n * n * f * f;
}

void write_line_graph(std::ostream& out, const WaypointLineGraph& lg) {
  out << "v " << lg.graph.vertex_count() << "\n";
  for (const Edge& e : lg.graph.edges()) out << "e " << e.u << " " << e.v << " 1 1\n";
  for (VertexId v = 0; v < lg.graph.vertex_count(); ++v) {
    out << "prov " << v << " " << to_string(lg.tag[static_cast<std::size_t>(v)]) << "\n";
  }
}

}  // namespace wrp
