#include "wrp/euler.hpp"

#include <algorithm>
#include <numeric>

namespace wrp {

Route eulerian_circuit(const CapacitatedGraph& g, const std::vector<EdgeId>& edges, VertexId start) {
  Route out;
  out.start = start;
  if (edges.empty()) return out;
  std::vector<std::vector<EdgeId>> inc(static_cast<std::size_t>(g.vertex_count()));
  std::vector<EdgeId> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (EdgeId e : sorted) {
    const Edge& ed = g.edge(e);
    inc[static_cast<std::size_t>(ed.u)].push_back(e);
    inc[static_cast<std::size_t>(ed.v)].push_back(e);
  }
  for (const auto& list : inc) {
    if (list.size() % 2 != 0) throw InputError("eulerian circuit: odd degree vertex");
  }
  if (inc.at(static_cast<std::size_t>(start)).empty()) throw InputError("eulerian circuit: start not on the edge set");

  std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<std::size_t> next(inc.size(), 0);
  struct Frame {
    VertexId vertex;
    EdgeId via;
  };
  std::vector<Frame> stack{{start, kNoEdge}};
  std::vector<Frame> popped;
  while (!stack.empty()) {
    const VertexId v = stack.back().vertex;
    auto& list = inc[static_cast<std::size_t>(v)];
    auto& p = next[static_cast<std::size_t>(v)];
    while (p < list.size() && used[static_cast<std::size_t>(list[p])]) ++p;
    if (p < list.size()) {
      const EdgeId e = list[p];
      used[static_cast<std::size_t>(e)] = 1;
      stack.push_back({g.edge(e).other(v), e});
    } else {
      popped.push_back(stack.back());
      stack.pop_back();
    }
  }
  if (popped.size() != sorted.size() + 1) throw InputError("eulerian circuit: edge set is disconnected");
  std::reverse(popped.begin(), popped.end());
  for (std::size_t i = 1; i < popped.size(); ++i) {
    const Edge& ed = g.edge(popped[i].via);
    out.steps.push_back(Step{popped[i].via, ed.v == popped[i].vertex});
  }
  return out;
}

namespace {

// Half-edge h = 2e + end, where end 0 sits at edge.u and end 1 at edge.v.
struct Transitions {
  const CapacitatedGraph& g;
  std::vector<char> edge_in_a;
  std::vector<int> pair;

  VertexId at(int h) const {
    const Edge& e = g.edge(h / 2);
    return (h & 1) ? e.v : e.u;
  }
  bool side(int h) const { return edge_in_a[static_cast<std::size_t>(h / 2)]; }
  bool switches(int h) const { return side(h) != side(pair[static_cast<std::size_t>(h)]); }

  // Circuit label per half-edge.
  std::vector<int> circuits() const {
    std::vector<int> label(pair.size(), -1);
    int next = 0;
    for (std::size_t s = 0; s < pair.size(); ++s) {
      if (label[s] >= 0) continue;
      int h = static_cast<int>(s);
      while (label[static_cast<std::size_t>(h)] < 0) {
        label[static_cast<std::size_t>(h)] = next;
        label[static_cast<std::size_t>(h ^ 1)] = next;
        h = pair[static_cast<std::size_t>(h ^ 1)];
      }
      ++next;
    }
    return label;
  }
};

}  // namespace

SeparatedWalks eulerian_separate(const CapacitatedGraph& g, const std::vector<VertexId>& separator,
                                 const std::vector<VertexId>& side_a) {
  SeparatedWalks out;
  const int n = g.vertex_count();
  if (g.edge_count() == 0) return out;
  if (!g.is_connected()) throw InputError("eulerian separation: graph is disconnected");
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) % 2 != 0) throw InputError("eulerian separation: odd degree at vertex " + std::to_string(v));
  }
  if (separator.empty()) throw InputError("eulerian separation: empty separator");
  std::vector<char> in_sep(static_cast<std::size_t>(n), 0);
  std::vector<char> in_a(static_cast<std::size_t>(n), 0);
  for (VertexId v : separator) in_sep.at(static_cast<std::size_t>(v)) = 1;
  for (VertexId v : side_a) in_a.at(static_cast<std::size_t>(v)) = 1;
  auto a_only = [&](VertexId v) { return in_a[static_cast<std::size_t>(v)] && !in_sep[static_cast<std::size_t>(v)]; };
  auto b_only = [&](VertexId v) { return !in_a[static_cast<std::size_t>(v)] && !in_sep[static_cast<std::size_t>(v)]; };

  Transitions tr{g, std::vector<char>(static_cast<std::size_t>(g.edge_count()), 0),
                 std::vector<int>(static_cast<std::size_t>(2 * g.edge_count()), -1)};
  for (const Edge& e : g.edges()) {
    if ((a_only(e.u) && b_only(e.v)) || (b_only(e.u) && a_only(e.v))) {
      throw InputError("eulerian separation: edge " + std::to_string(e.id) + " crosses the separator");
    }
    tr.edge_in_a[static_cast<std::size_t>(e.id)] = !(b_only(e.u) || b_only(e.v));
  }

  // Fewest switches: pair A ends with A ends and B ends with B ends.
  std::vector<std::vector<int>> halves(static_cast<std::size_t>(n));
  for (int h = 0; h < 2 * g.edge_count(); ++h) halves[static_cast<std::size_t>(tr.at(h))].push_back(h);
  for (const auto& hs : halves) {
    std::vector<int> a;
    std::vector<int> b;
    for (int h : hs) (tr.side(h) ? a : b).push_back(h);
    auto pair_up = [&](std::vector<int>& list) {
      for (std::size_t i = 0; i + 1 < list.size(); i += 2) {
        tr.pair[static_cast<std::size_t>(list[i])] = list[i + 1];
        tr.pair[static_cast<std::size_t>(list[i + 1])] = list[i];
      }
    };
    pair_up(a);
    pair_up(b);
    if (a.size() % 2 == 1) {
      tr.pair[static_cast<std::size_t>(a.back())] = b.back();
      tr.pair[static_cast<std::size_t>(b.back())] = a.back();
    }
  }

  // Merge circuits by re-pairing two transitions at a shared vertex. Free
  // merges keep the switch count; otherwise merge where no switch exists yet.
  while (true) {
    const auto label = tr.circuits();
    int best_cost = 3;
    int best_h1 = -1;
    int best_h2 = -1;
    for (VertexId v = 0; v < n && best_cost > 0; ++v) {
      const auto& hs = halves[static_cast<std::size_t>(v)];
      int at_v = 0;
      for (int h : hs) at_v += tr.switches(h);
      at_v /= 2;
      for (std::size_t i = 0; i < hs.size() && best_cost > 0; ++i) {
        const int h1 = hs[i];
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
          const int h2 = hs[j];
          if (label[static_cast<std::size_t>(h1)] == label[static_cast<std::size_t>(h2)]) continue;
          const int p1 = tr.pair[static_cast<std::size_t>(h1)];
          const int p2 = tr.pair[static_cast<std::size_t>(h2)];
          const int before = (tr.side(h1) != tr.side(p1)) + (tr.side(h2) != tr.side(p2));
          const int after = std::min((tr.side(h1) != tr.side(h2)) + (tr.side(p1) != tr.side(p2)),
                                     (tr.side(h1) != tr.side(p2)) + (tr.side(p1) != tr.side(h2)));
          // Cost 0 for free merges, 1 + existing switches otherwise.
          const int cost = after <= before ? 0 : 1 + at_v;
          if (cost < best_cost) {
            best_cost = cost;
            best_h1 = h1;
            best_h2 = h2;
          }
          if (cost == 0) break;
        }
      }
    }
    if (best_h1 < 0) break;
    const int h1 = best_h1;
    const int h2 = best_h2;
    const int p1 = tr.pair[static_cast<std::size_t>(h1)];
    const int p2 = tr.pair[static_cast<std::size_t>(h2)];
    const int straight = (tr.side(h1) != tr.side(h2)) + (tr.side(p1) != tr.side(p2));
    const int crossed = (tr.side(h1) != tr.side(p2)) + (tr.side(p1) != tr.side(h2));
    auto link = [&](int x, int y) {
      tr.pair[static_cast<std::size_t>(x)] = y;
      tr.pair[static_cast<std::size_t>(y)] = x;
    };
    if (straight <= crossed) {
      link(h1, h2);
      link(p1, p2);
    } else {
      link(h1, p2);
      link(p1, h2);
    }
  }

  // Walk the single circuit starting right after a switch, or at a separator
  // vertex when the circuit never switches sides.
  int start = -1;
  for (int h = 0; h < 2 * g.edge_count() && start < 0; ++h) {
    if (tr.switches(h)) start = h;
  }
  if (start < 0) {
    for (int h = 0; h < 2 * g.edge_count() && start < 0; ++h) {
      if (in_sep[static_cast<std::size_t>(tr.at(h))]) start = h;
    }
  }
  std::vector<Step> steps;
  int h = start;
  do {
    steps.push_back(Step{h / 2, (h & 1) == 0});
    h = tr.pair[static_cast<std::size_t>(h ^ 1)];
  } while (h != start);

  Route current;
  current.start = tr.at(start);
  VertexId cur = current.start;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    current.steps.push_back(steps[i]);
    cur = g.edge(steps[i].edge).other(cur);
    const bool side = tr.edge_in_a[static_cast<std::size_t>(steps[i].edge)];
    const bool last = i + 1 == steps.size();
    if (last || tr.edge_in_a[static_cast<std::size_t>(steps[i + 1].edge)] != side) {
      out.walks.push_back(current);
      out.in_a.push_back(side);
      current = Route{};
      current.start = cur;
    }
  }
  return out;
}

}  // namespace wrp
