#include "wrp/instances.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <set>

namespace wrp {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

bool connected(int n, const EdgeList& edges) {
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : adj[static_cast<std::size_t>(x)]) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

std::vector<std::string> canonical_names() { return {"fig1-left", "fig1-right"}; }

Instance canonical(const std::string& name) {
  Instance inst;
  if (name == "fig1-left") {
    // 0 s, 1-3 bottom row (2 = w), 4 t, 5-7 top row (6 = w).
    inst.graph = CapacitatedGraph(8);
    const int edges[][3] = {{0, 1, 1}, {1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {0, 5, 1},
                            {5, 6, 1}, {6, 7, 1}, {7, 4, 1}, {1, 5, 1}, {3, 7, 1}};
    for (const auto& e : edges) inst.graph.add_edge(e[0], e[1], e[2], 1);
    inst.source = 0;
    inst.target = 4;
    inst.waypoints = {2, 6};
  } else if (name == "fig1-right") {
    inst.graph = CapacitatedGraph(5);
    for (VertexId w : {2, 3, 4}) {
      inst.graph.add_edge(0, w, 1, 1);
      inst.graph.add_edge(w, 1, 1, 1);
    }
    inst.source = 0;
    inst.target = 1;
    inst.waypoints = {2, 3, 4};
  } else {
    throw InputError("unknown canonical instance '" + name + "'");
  }
  normalize_instance(inst);
  return inst;
}

Route canonical_route(const std::string& name) {
  if (name == "fig1-left") {
    return Route{0, {{4, true}, {5, true}, {6, true}, {9, false}, {2, false}, {2, true}, {3, true}}};
  }
  if (name == "fig1-right") {
    return Route{0, {{0, true}, {1, true}, {3, false}, {2, false}, {4, true}, {5, true}}};
  }
  throw InputError("unknown canonical instance '" + name + "'");
}

Instance gen_partial_ktree(const KTreeSpec& spec) {
  if (spec.k < 1 || spec.k > 4) throw InputError("partial k-tree needs 1 <= k <= 4");
  if (spec.n < spec.k + 1) throw InputError("partial k-tree needs n >= k + 1");
  std::mt19937_64 rng(spec.seed);
  std::set<std::pair<VertexId, VertexId>> edge_set;
  auto link = [&](VertexId a, VertexId b) { edge_set.insert({std::min(a, b), std::max(a, b)}); };
  std::vector<std::vector<VertexId>> cliques;
  for (VertexId a = 0; a <= spec.k; ++a) {
    for (VertexId b = a + 1; b <= spec.k; ++b) link(a, b);
    std::vector<VertexId> c;
    for (VertexId b = 0; b <= spec.k; ++b) {
      if (b != a) c.push_back(b);
    }
    cliques.push_back(c);
  }
  for (VertexId v = spec.k + 1; v < spec.n; ++v) {
    const auto base = cliques[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(cliques.size()) - 1))];
    for (VertexId u : base) link(u, v);
    for (std::size_t skip = 0; skip < base.size(); ++skip) {
      std::vector<VertexId> c{v};
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (i != skip) c.push_back(base[i]);
      }
      std::sort(c.begin(), c.end());
      cliques.push_back(c);
    }
  }

  EdgeList edges(edge_set.begin(), edge_set.end());
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> dropped(edges.size(), 0);
  auto try_drop = [&](std::size_t i) {
    EdgeList rest;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (j != i && !dropped[j]) rest.push_back(edges[j]);
    }
    if (!connected(spec.n, rest)) return false;
    dropped[i] = 1;
    return true;
  };
  std::bernoulli_distribution keep(spec.keep);
  for (std::size_t i : order) {
    if (!keep(rng)) try_drop(i);
  }
  if (spec.max_edges >= 0) {
    auto alive = [&] { return static_cast<int>(std::count(dropped.begin(), dropped.end(), 0)); };
    for (std::size_t i : order) {
      if (alive() <= spec.max_edges) break;
      if (!dropped[i]) try_drop(i);
    }
  }

  Instance inst;
  inst.graph = CapacitatedGraph(spec.n);
  for (std::size_t j = 0; j < edges.size(); ++j) {
    if (dropped[j]) continue;
    const int cap = uniform(rng, 1, 2);
    const Weight w = uniform(rng, 1, 4);
    inst.graph.add_edge(edges[j].first, edges[j].second, cap, w);
  }
  inst.source = uniform(rng, 0, spec.n - 1);
  inst.target = uniform(rng, 0, spec.n - 1);
  std::vector<VertexId> pool;
  for (VertexId v = 0; v < spec.n; ++v) {
    if (v != inst.source && v != inst.target) pool.push_back(v);
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  const int count = uniform(rng, 0, std::min(spec.max_waypoints, static_cast<int>(pool.size())));
  inst.waypoints.assign(pool.begin(), pool.begin() + count);
  normalize_instance(inst);
  return inst;
}

InstanceFile gen_ladder(int columns, int waypoints, std::uint64_t seed) {
  if (columns < 2) throw InputError("ladder needs at least 2 columns");
  std::mt19937_64 rng(seed);
  InstanceFile file;
  Instance& inst = file.instance;
  inst.graph = CapacitatedGraph(2 * columns);
  auto id = [&](int x, int y) { return static_cast<VertexId>(y * columns + x); };
  for (int y = 0; y < 2; ++y) {
    for (int x = 0; x < columns; ++x) {
      file.coords[id(x, y)] = {x, y};
      if (x + 1 < columns) inst.graph.add_edge(id(x, y), id(x + 1, y), 1, 1);
    }
  }
  for (int x = 0; x < columns; ++x) inst.graph.add_edge(id(x, 0), id(x, 1), 1, 1);
  inst.source = inst.target = id(columns - 1, 1);
  std::vector<VertexId> pool;
  for (VertexId v = 0; v < 2 * columns; ++v) {
    if (v != inst.source) pool.push_back(v);
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  inst.waypoints.assign(pool.begin(), pool.begin() + std::min<std::size_t>(static_cast<std::size_t>(std::max(waypoints, 0)), pool.size()));
  normalize_instance(inst);
  return file;
}

InstanceFile gen_grid_tail(const InstanceFile& base, int r) {
  const Instance& bi = base.instance;
  if (r < 1) throw InputError("grid tail needs r >= 1");
  if (static_cast<int>(base.coords.size()) != bi.graph.vertex_count()) {
    throw InputError("grid tail needs coordinates for every vertex");
  }
  VertexId corner = kNoVertex;
  for (const auto& [v, xy] : base.coords) {
    if (corner == kNoVertex || xy < base.coords.at(corner)) corner = v;
  }
  if (bi.graph.degree(corner) > 2) throw InputError("leftmost-bottom vertex has degree above 2");
  std::int64_t length = 1;
  for (int i = 0; i < r; ++i) {
    length *= bi.graph.vertex_count();
    if (length > 1'000'000) throw LimitError("grid tail longer than 10^6 vertices");
  }
  InstanceFile out = base;
  auto [x0, y0] = base.coords.at(corner);
  VertexId prev = corner;
  for (std::int64_t i = 1; i <= length; ++i) {
    const VertexId v = out.instance.graph.add_vertex();
    out.instance.graph.add_edge(prev, v, 1, 1);
    out.coords[v] = {x0 - static_cast<int>(i), y0};
    prev = v;
  }
  normalize_instance(out.instance);
  return out;
}

Instance ham_encode(const CapacitatedGraph& g, VertexId anchor) {
  Instance inst;
  inst.graph = CapacitatedGraph(g.vertex_count());
  for (const Edge& e : g.edges()) inst.graph.add_edge(e.u, e.v, 1, 1);
  inst.source = inst.target = anchor;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v != anchor) inst.waypoints.push_back(v);
  }
  normalize_instance(inst);
  return inst;
}

CapacitatedGraph cycle_graph(int n) {
  CapacitatedGraph g(n);
  for (VertexId v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n, 1, 1);
  return g;
}

CapacitatedGraph cube_graph() {
  CapacitatedGraph g(8);
  for (VertexId v = 0; v < 8; ++v) {
    for (int bit = 0; bit < 3; ++bit) {
      const VertexId u = v ^ (1 << bit);
      if (u > v) g.add_edge(v, u, 1, 1);
    }
  }
  return g;
}

std::vector<int> two_coloring(const CapacitatedGraph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      const VertexId x = q.front();
      q.pop();
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.edge(e).other(x);
        if (color[static_cast<std::size_t>(y)] < 0) {
          color[static_cast<std::size_t>(y)] = 1 - color[static_cast<std::size_t>(x)];
          q.push(y);
        } else if (color[static_cast<std::size_t>(y)] == color[static_cast<std::size_t>(x)]) {
          return {};
        }
      }
    }
  }
  return color;
}

Instance gen_bipartite_trees_gadget(const Instance& base, EdgeId edge, int r) {
  if (r < 2) throw InputError("trees gadget needs r >= 2");
  if (r > 16) throw LimitError("trees gadget r too large");
  const CapacitatedGraph& g = base.graph;
  if (edge < 0 || edge >= g.edge_count()) throw InputError("trees gadget: unknown edge");
  if (two_coloring(g).empty()) throw InputError("trees gadget: base graph is not bipartite");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 3) throw InputError("trees gadget: base graph has a vertex of degree above 3");
  }
  Instance out;
  out.graph = CapacitatedGraph(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.id != edge) out.graph.add_edge(e.u, e.v, e.capacity, e.weight);
  }
  CapacitatedGraph& h = out.graph;
  const Edge& cut = g.edge(edge);
  const VertexId v = h.add_vertex();
  const VertexId vp = h.add_vertex();
  h.add_edge(cut.u, v, 1, 1);
  h.add_edge(v, vp, 1, 1);
  h.add_edge(vp, cut.v, 1, 1);

  const int size = (1 << r) - 1;
  const int leaves = 1 << (r - 1);
  // Heap-indexed full binary tree hung off `top`; returns leaves left to right.
  auto tree = [&](VertexId top) {
    std::vector<VertexId> node(static_cast<std::size_t>(size + 1));
    for (int i = 1; i <= size; ++i) node[static_cast<std::size_t>(i)] = h.add_vertex();
    h.add_edge(top, node[1], 1, 1);
    for (int i = 2; i <= size; ++i) h.add_edge(node[static_cast<std::size_t>(i / 2)], node[static_cast<std::size_t>(i)], 1, 1);
    return std::vector<VertexId>(node.begin() + leaves, node.end());
  };
  const auto left = tree(v);
  const auto right = tree(vp);
  auto rim = [&](const std::vector<VertexId>& ls) {
    std::vector<VertexId> mids;
    for (int i = 0; i + 1 < leaves; ++i) {
      const VertexId m = h.add_vertex();
      h.add_edge(ls[static_cast<std::size_t>(i)], m, 1, 1);
      h.add_edge(m, ls[static_cast<std::size_t>(i + 1)], 1, 1);
      mids.push_back(m);
    }
    return mids;
  };
  const auto mids = rim(left);
  const auto mids_p = rim(right);
  h.add_edge(left.back(), right.front(), 1, 1);
  h.add_edge(left.front(), right.back(), 1, 1);
  for (int i = 0; i + 1 < leaves; ++i) {
    h.add_edge(mids[static_cast<std::size_t>(i)], mids_p[static_cast<std::size_t>(leaves - 2 - i)], 1, 1);
  }
  out.source = base.source;
  out.target = base.target;
  out.waypoints = base.waypoints;
  normalize_instance(out);
  return out;
}

}  // namespace wrp
