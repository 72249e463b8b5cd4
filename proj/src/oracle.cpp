#include "wrp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_map>

namespace wrp {

namespace {

struct State {
  VertexId vertex;
  std::uint64_t caps;  // two bits of remaining capacity per edge
  std::uint64_t seen;  // visited waypoint bits

  bool operator==(const State&) const = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const {
    std::size_t h = std::hash<std::uint64_t>{}(s.caps);
    h ^= std::hash<std::uint64_t>{}(s.seen) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::int64_t>{}(s.vertex) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct Node {
  State state;
  Weight cost;
  int parent;
  Step via;
};

}  // namespace

Solution brute_force_solve(const Instance& inst, const OracleOptions& options) {
  const CapacitatedGraph& g = inst.graph;
  if (g.edge_count() > 32) throw LimitError("oracle supports at most 32 edges");
  if (inst.waypoints.size() > 63) throw LimitError("oracle supports at most 63 waypoints");
  std::vector<int> waypoint_bit(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < inst.waypoints.size(); ++i) {
    waypoint_bit[static_cast<std::size_t>(inst.waypoints[i])] = static_cast<int>(i);
  }
  const std::uint64_t all = inst.waypoints.empty() ? 0 : (~std::uint64_t{0} >> (64 - inst.waypoints.size()));
  auto mark = [&](std::uint64_t seen, VertexId v) {
    const int bit = waypoint_bit[static_cast<std::size_t>(v)];
    return bit < 0 ? seen : seen | (std::uint64_t{1} << bit);
  };

  State start{inst.source, 0, mark(0, inst.source)};
  for (const Edge& e : g.edges()) {
    start.caps |= static_cast<std::uint64_t>(std::min(e.capacity, 2)) << (2 * e.id);
  }

  std::vector<Node> nodes{{start, 0, -1, Step{}}};
  std::unordered_map<State, Weight, StateHash> best{{start, 0}};
  using Entry = std::pair<Weight, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  open.emplace(0, 0);

  Solution result;
  while (!open.empty()) {
    const auto [cost, id] = open.top();
    open.pop();
    const Node cur = nodes[static_cast<std::size_t>(id)];
    if (best[cur.state] < cost) continue;
    if (cur.state.vertex == inst.target && cur.state.seen == all) {
      result.feasible = true;
      result.cost = cost;
      std::vector<Step> steps;
      for (int at = id; nodes[static_cast<std::size_t>(at)].parent >= 0; at = nodes[static_cast<std::size_t>(at)].parent) {
        steps.push_back(nodes[static_cast<std::size_t>(at)].via);
      }
      std::reverse(steps.begin(), steps.end());
      result.route.start = inst.source;
      result.route.steps = std::move(steps);
      break;
    }
    for (EdgeId e : g.incident(cur.state.vertex)) {
      const std::uint64_t left = cur.state.caps >> (2 * e) & 3;
      if (left == 0) continue;
      const Edge& ed = g.edge(e);
      const VertexId next = ed.other(cur.state.vertex);
      State s{next, cur.state.caps - (std::uint64_t{1} << (2 * e)), mark(cur.state.seen, next)};
      const Weight c = cost + ed.weight;
      auto it = best.find(s);
      if (it != best.end() && it->second <= c) continue;
      if (it == best.end()) {
        if (static_cast<std::int64_t>(best.size()) >= options.state_budget) {
          throw LimitError("oracle exceeded its state budget");
        }
        best.emplace(s, c);
      } else {
        it->second = c;
      }
      nodes.push_back(Node{s, c, id, Step{e, ed.u == cur.state.vertex}});
      open.emplace(c, static_cast<int>(nodes.size()) - 1);
    }
  }
  result.explored = static_cast<std::int64_t>(best.size());
  return result;
}

}  // namespace wrp
