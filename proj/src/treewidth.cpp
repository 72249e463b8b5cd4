#include "wrp/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <ostream>
#include <set>
#include <unordered_set>

namespace wrp {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

Adjacency adjacency_of(const CapacitatedGraph& g) { return g.simple_adjacency(); }

bool DecompositionReport::has(DecompositionViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const DecompositionViolation& v) { return v.kind == kind; });
}

namespace {

using NeighborSets = std::vector<std::set<VertexId>>;

NeighborSets to_sets(const Adjacency& adj) {
  NeighborSets out(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    for (VertexId u : adj[v]) {
      if (u != static_cast<VertexId>(v)) out[v].insert(u);
    }
  }
  return out;
}

void eliminate(NeighborSets& nbr, VertexId v) {
  const std::vector<VertexId> around(nbr[static_cast<std::size_t>(v)].begin(),
                                     nbr[static_cast<std::size_t>(v)].end());
  for (VertexId a : around) {
    nbr[static_cast<std::size_t>(a)].erase(v);
    for (VertexId b : around) {
      if (a != b) nbr[static_cast<std::size_t>(a)].insert(b);
    }
  }
  nbr[static_cast<std::size_t>(v)].clear();
}

int fill_in(const NeighborSets& nbr, VertexId v) {
  const auto& around = nbr[static_cast<std::size_t>(v)];
  int missing = 0;
  for (auto a = around.begin(); a != around.end(); ++a) {
    for (auto b = std::next(a); b != around.end(); ++b) {
      if (!nbr[static_cast<std::size_t>(*a)].count(*b)) ++missing;
    }
  }
  return missing;
}

bool is_clique(const NeighborSets& nbr, const std::set<VertexId>& vs, VertexId skip = kNoVertex) {
  for (auto a = vs.begin(); a != vs.end(); ++a) {
    if (*a == skip) continue;
    for (auto b = std::next(a); b != vs.end(); ++b) {
      if (*b == skip) continue;
      if (!nbr[static_cast<std::size_t>(*a)].count(*b)) return false;
    }
  }
  return true;
}

// Minor-min-width lower bound.
int mmd_lower_bound(const Adjacency& adj) {
  NeighborSets nbr = to_sets(adj);
  std::set<VertexId> alive;
  for (std::size_t v = 0; v < adj.size(); ++v) alive.insert(static_cast<VertexId>(v));
  int lb = 0;
  while (alive.size() > 1) {
    VertexId best = *alive.begin();
    for (VertexId v : alive) {
      if (nbr[static_cast<std::size_t>(v)].size() < nbr[static_cast<std::size_t>(best)].size()) best = v;
    }
    const auto& around = nbr[static_cast<std::size_t>(best)];
    lb = std::max(lb, static_cast<int>(around.size()));
    if (around.empty()) {
      alive.erase(best);
      continue;
    }
    VertexId partner = *around.begin();
    for (VertexId u : around) {
      if (nbr[static_cast<std::size_t>(u)].size() < nbr[static_cast<std::size_t>(partner)].size()) partner = u;
    }
    // Contract best into partner.
    for (VertexId u : std::vector<VertexId>(around.begin(), around.end())) {
      nbr[static_cast<std::size_t>(u)].erase(best);
      if (u != partner) {
        nbr[static_cast<std::size_t>(u)].insert(partner);
        nbr[static_cast<std::size_t>(partner)].insert(u);
      }
    }
    nbr[static_cast<std::size_t>(best)].clear();
    alive.erase(best);
  }
  return lb;
}

using Mask = std::uint64_t;

// Decision search over elimination prefixes on a graph of at most 64 vertices:
// can every vertex be eliminated while each step has at most `k` later
// neighbors (through eliminated vertices)?
class PrefixSearch {
 public:
  PrefixSearch(std::vector<Mask> adj, std::int64_t budget) : adj_(std::move(adj)), budget_(budget) {
    const int n = static_cast<int>(adj_.size());
    full_ = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
  }

  bool decide(int k, std::vector<int>& order) {
    failed_.clear();
    order.clear();
    return dfs(0, k, order);
  }

 private:
  Mask reach(Mask eliminated, int v) const {
    Mask seen = Mask{1} << v;
    Mask out = 0;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      Mask nb = adj_[static_cast<std::size_t>(x)] & ~seen;
      while (nb) {
        const int y = std::countr_zero(nb);
        nb &= nb - 1;
        seen |= Mask{1} << y;
        if (eliminated >> y & 1) {
          stack.push_back(y);
        } else {
          out |= Mask{1} << y;
        }
      }
    }
    return out;
  }

  bool dfs(Mask eliminated, int k, std::vector<int>& order) {
    const Mask rest = full_ & ~eliminated;
    if (std::popcount(rest) <= k + 1) {
      for (Mask r = rest; r; r &= r - 1) order.push_back(std::countr_zero(r));
      return true;
    }
    if (failed_.count(eliminated)) return false;
    if (--budget_ < 0) throw LimitError("exact treewidth search exceeded its node budget");
    for (Mask r = rest; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (std::popcount(reach(eliminated, v)) > k) continue;
      order.push_back(v);
      if (dfs(eliminated | (Mask{1} << v), k, order)) return true;
      order.pop_back();
    }
    failed_.insert(eliminated);
    return false;
  }

  std::vector<Mask> adj_;
  std::int64_t budget_;
  Mask full_ = 0;
  std::unordered_set<Mask> failed_;
};

}  // namespace

int elimination_width(const Adjacency& adj, const std::vector<VertexId>& order) {
  NeighborSets nbr = to_sets(adj);
  int width = adj.empty() ? -1 : 0;
  for (VertexId v : order) {
    width = std::max(width, static_cast<int>(nbr[static_cast<std::size_t>(v)].size()));
    eliminate(nbr, v);
  }
  return width;
}

std::vector<VertexId> min_fill_order(const Adjacency& adj) {
  NeighborSets nbr = to_sets(adj);
  std::set<VertexId> alive;
  for (std::size_t v = 0; v < adj.size(); ++v) alive.insert(static_cast<VertexId>(v));
  std::vector<VertexId> order;
  while (!alive.empty()) {
    VertexId best = kNoVertex;
    int best_fill = 0;
    for (VertexId v : alive) {
      const int f = fill_in(nbr, v);
      if (best == kNoVertex || f < best_fill) {
        best = v;
        best_fill = f;
      }
    }
    order.push_back(best);
    eliminate(nbr, best);
    alive.erase(best);
  }
  return order;
}

ExactResult exact_treewidth(const Adjacency& adj, std::int64_t node_budget) {
  ExactResult result;
  const int n = static_cast<int>(adj.size());
  if (n == 0) {
    result.width = -1;
    return result;
  }
  NeighborSets nbr = to_sets(adj);
  std::set<VertexId> alive;
  for (VertexId v = 0; v < n; ++v) alive.insert(v);
  int low = mmd_lower_bound(adj);

  // Simplicial and almost-simplicial reductions keep the optimum.
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v : std::vector<VertexId>(alive.begin(), alive.end())) {
      const auto& around = nbr[static_cast<std::size_t>(v)];
      const int deg = static_cast<int>(around.size());
      bool take = is_clique(nbr, around);
      if (take) {
        low = std::max(low, deg);
      } else if (deg <= low) {
        for (VertexId skip : around) {
          if (is_clique(nbr, around, skip)) {
            take = true;
            break;
          }
        }
      }
      if (take) {
        eliminate(nbr, v);
        alive.erase(v);
        result.order.push_back(v);
        changed = true;
      }
    }
  }

  std::vector<VertexId> rest(alive.begin(), alive.end());
  if (static_cast<int>(rest.size()) > low + 1) {
    if (rest.size() > 64) throw LimitError("exact treewidth: reduced graph exceeds 64 vertices");
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < rest.size(); ++i) local[static_cast<std::size_t>(rest[i])] = static_cast<int>(i);
    std::vector<Mask> masks(rest.size(), 0);
    Adjacency reduced(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) {
      for (VertexId u : nbr[static_cast<std::size_t>(rest[i])]) {
        masks[i] |= Mask{1} << local[static_cast<std::size_t>(u)];
        reduced[i].push_back(local[static_cast<std::size_t>(u)]);
      }
    }
    const auto heuristic = min_fill_order(reduced);
    const int upper = elimination_width(reduced, heuristic);
    PrefixSearch search(masks, node_budget);
    std::vector<int> order;
    int k = std::max(low, mmd_lower_bound(reduced));
    bool found = false;
    for (; k < upper; ++k) {
      if (search.decide(k, order)) {
        found = true;
        break;
      }
    }
    if (!found) order.assign(heuristic.begin(), heuristic.end());
    for (int i : order) result.order.push_back(rest[static_cast<std::size_t>(i)]);
  } else {
    for (VertexId v : rest) result.order.push_back(v);
  }
  result.width = elimination_width(adj, result.order);
  return result;
}

int exact_treewidth(const CapacitatedGraph& g, std::int64_t node_budget) {
  return exact_treewidth(adjacency_of(g), node_budget).width;
}

TreeDecomposition decomposition_from_order(const Adjacency& adj, const std::vector<VertexId>& order) {
  TreeDecomposition td;
  const std::size_t n = adj.size();
  NeighborSets nbr = to_sets(adj);
  std::vector<int> position(n, 0);
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<int> parent(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId v = order[i];
    const auto& later = nbr[static_cast<std::size_t>(v)];
    std::vector<VertexId> bag(later.begin(), later.end());
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
    int first = -1;
    for (VertexId u : later) {
      const int p = position[static_cast<std::size_t>(u)];
      if (first < 0 || p < first) first = p;
    }
    parent[i] = first;
    eliminate(nbr, v);
  }
  int previous_root = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (parent[i] >= 0) {
      td.links.emplace_back(static_cast<int>(i), parent[i]);
    } else {
      if (previous_root >= 0) td.links.emplace_back(previous_root, static_cast<int>(i));
      previous_root = static_cast<int>(i);
    }
  }
  return td;
}

TreeDecomposition decompose(const Adjacency& adj, const DecomposeOptions& options) {
  if (options.mode == DecomposeMode::kExact) {
    return decomposition_from_order(adj, exact_treewidth(adj, options.node_budget).order);
  }
  return decomposition_from_order(adj, min_fill_order(adj));
}

TreeDecomposition decompose(const CapacitatedGraph& g, const DecomposeOptions& options) {
  return decompose(adjacency_of(g), options);
}

DecompositionReport validate_decomposition(const Adjacency& adj, const TreeDecomposition& td) {
  DecompositionReport rep;
  using K = DecompositionViolationKind;
  const int nodes = td.node_count();
  const int n = static_cast<int>(adj.size());
  auto add = [&](K kind, VertexId v, VertexId o, std::string msg) {
    rep.violations.push_back(DecompositionViolation{kind, v, o, std::move(msg)});
  };

  std::vector<std::vector<int>> tree(static_cast<std::size_t>(nodes));
  bool links_ok = static_cast<int>(td.links.size()) == std::max(0, nodes - 1);
  for (auto [a, b] : td.links) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) {
      links_ok = false;
      continue;
    }
    tree[static_cast<std::size_t>(a)].push_back(b);
    tree[static_cast<std::size_t>(b)].push_back(a);
  }
  if (nodes > 0) {
    std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : tree[static_cast<std::size_t>(x)]) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
    if (count != nodes) links_ok = false;
  }
  if (!links_ok) add(K::kNotATree, kNoVertex, kNoVertex, "decomposition links do not form a tree");

  std::vector<std::vector<int>> holders(static_cast<std::size_t>(n));
  for (int i = 0; i < nodes; ++i) {
    for (VertexId v : td.bags[static_cast<std::size_t>(i)]) {
      if (v < 0 || v >= n) {
        add(K::kBadVertex, v, kNoVertex, "bag " + std::to_string(i) + " holds unknown vertex " + std::to_string(v));
        continue;
      }
      holders[static_cast<std::size_t>(v)].push_back(i);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (holders[static_cast<std::size_t>(v)].empty()) {
      add(K::kVertexUncovered, v, kNoVertex, "vertex uncovered: " + std::to_string(v));
    }
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : adj[static_cast<std::size_t>(u)]) {
      if (v <= u) continue;
      bool covered = false;
      for (int i : holders[static_cast<std::size_t>(u)]) {
        const auto& bag = td.bags[static_cast<std::size_t>(i)];
        if (std::binary_search(bag.begin(), bag.end(), v)) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        add(K::kEdgeUncovered, u, v,
            "edge uncovered: " + std::to_string(u) + "-" + std::to_string(v));
      }
    }
  }
  if (links_ok) {
    for (VertexId v = 0; v < n; ++v) {
      const auto& hs = holders[static_cast<std::size_t>(v)];
      if (hs.size() <= 1) continue;
      std::vector<char> in(static_cast<std::size_t>(nodes), 0);
      for (int i : hs) in[static_cast<std::size_t>(i)] = 1;
      std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
      std::vector<int> stack{hs.front()};
      seen[static_cast<std::size_t>(hs.front())] = 1;
      std::size_t count = 1;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : tree[static_cast<std::size_t>(x)]) {
          if (in[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = 1;
            ++count;
            stack.push_back(y);
          }
        }
      }
      if (count != hs.size()) {
        add(K::kConnectivity, v, kNoVertex,
            "connectivity: bags holding vertex " + std::to_string(v) + " are disconnected");
      }
    }
  }
  return rep;
}

DecompositionReport validate_decomposition(const CapacitatedGraph& g, const TreeDecomposition& td) {
  return validate_decomposition(adjacency_of(g), td);
}

TreeDecomposition extend_to_unified(const TreeDecomposition& td, const CapacitatedGraph& unified,
                                    const TraceStep& unify_step) {
  TreeDecomposition out = td;
  for (VertexId x = 0; x < unified.vertex_count(); ++x) {
    if (unify_step.vertex_origin.at(static_cast<std::size_t>(x)) != kNoVertex) continue;
    const auto inc = unified.incident(x);
    if (inc.size() != 2) throw InputError("subdivision vertex without exactly two edges");
    const VertexId a = unified.edge(inc[0]).other(x);
    const VertexId b = unified.edge(inc[1]).other(x);
    int host = -1;
    for (int i = 0; i < td.node_count(); ++i) {
      const auto& bag = td.bags[static_cast<std::size_t>(i)];
      if (std::binary_search(bag.begin(), bag.end(), a) && std::binary_search(bag.begin(), bag.end(), b)) {
        host = i;
        break;
      }
    }
    if (host < 0) throw InputError("decomposition does not cover a subdivided edge");
    std::vector<VertexId> bag{a, b, x};
    std::sort(bag.begin(), bag.end());
    out.bags.push_back(std::move(bag));
    out.links.emplace_back(host, out.node_count() - 1);
  }
  return out;
}

void write_decomposition(std::ostream& out, const TreeDecomposition& td) {
  for (int i = 0; i < td.node_count(); ++i) {
    out << "node " << i << " :";
    for (VertexId v : td.bags[static_cast<std::size_t>(i)]) out << " " << v;
    out << "\n";
  }
  for (auto [a, b] : td.links) out << "link " << a << " " << b << "\n";
}

}  // namespace wrp
