#include "wrp/dp.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>

#include "wrp/euler.hpp"
#include "wrp/transform.hpp"

namespace wrp {

std::string to_string(const Signature& sig) {
  std::string out;
  if (sig.is_empty()) {
    out = "EMPTY";
  } else {
    for (auto [a, b] : sig.pairs) out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  out += "|";
  for (std::size_t i = 0; i < sig.edges.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sig.edges[i]);
  }
  return out;
}

void write_table(std::ostream& out, const SignatureTable& table) {
  for (const auto& [sig, sol] : table) out << "sig " << to_string(sig) << " w=" << sol.weight << "\n";
}

namespace {

// Calls visit(pairs) for every canonical pair multiset over [0, size) with
// 1 <= pairs <= distinct endpoints.
template <typename Visit>
void for_each_pairing(int size, Visit&& visit) {
  std::vector<int> ends(static_cast<std::size_t>(size), 0);
  std::vector<std::pair<int, int>> current;
  auto pair_up = [&](auto&& self) -> void {
    int a = -1;
    for (int v = 0; v < size; ++v) {
      if (ends[static_cast<std::size_t>(v)] > 0) {
        a = v;
        break;
      }
    }
    if (a < 0) {
      visit(current);
      return;
    }
    int low = a;
    if (!current.empty() && current.back().first == a) low = current.back().second;
    for (int b = low; b < size; ++b) {
      if (b == a ? ends[static_cast<std::size_t>(a)] < 2 : ends[static_cast<std::size_t>(b)] < 1) continue;
      --ends[static_cast<std::size_t>(a)];
      --ends[static_cast<std::size_t>(b)];
      current.emplace_back(a, b);
      self(self);
      current.pop_back();
      ++ends[static_cast<std::size_t>(a)];
      ++ends[static_cast<std::size_t>(b)];
    }
  };
  // Choose end counts per vertex; total ends 2l with l <= distinct endpoints.
  auto choose = [&](auto&& self, int v, int sum, int beta) -> void {
    if (v == size) {
      if (sum == 0 || sum % 2 != 0 || sum / 2 > beta) return;
      pair_up(pair_up);
      return;
    }
    for (int m = 0; sum + m <= 2 * size; ++m) {
      ends[static_cast<std::size_t>(v)] = m;
      self(self, v + 1, sum + m, beta + (m > 0));
    }
    ends[static_cast<std::size_t>(v)] = 0;
  };
  choose(choose, 0, 0, 0);
}

}  // namespace

std::uint64_t count_signatures(int bag_size, int bag_edge_count) {
  std::uint64_t pairings = 0;
  for_each_pairing(bag_size, [&](const std::vector<std::pair<int, int>>&) { ++pairings; });
  return pairings * (std::uint64_t{1} << bag_edge_count) + 1;
}

std::vector<Signature> enumerate_signatures(const std::vector<VertexId>& bag, const std::vector<EdgeId>& bag_edges,
                                            int width_limit) {
  if (static_cast<int>(bag.size()) > width_limit + 1) {
    throw LimitError("bag of " + std::to_string(bag.size()) + " vertices exceeds the width limit");
  }
  if (bag_edges.size() > 20) throw LimitError("too many bag edges to enumerate signatures");
  std::vector<EdgeId> edges = bag_edges;
  std::sort(edges.begin(), edges.end());
  std::vector<Signature> out;
  out.push_back(Signature{});
  for_each_pairing(static_cast<int>(bag.size()), [&](const std::vector<std::pair<int, int>>& local) {
    PairList pairs;
    for (auto [a, b] : local) pairs.emplace_back(bag[static_cast<std::size_t>(a)], bag[static_cast<std::size_t>(b)]);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
      Signature sig;
      sig.pairs = pairs;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (mask >> i & 1) sig.edges.push_back(edges[i]);
      }
      out.push_back(std::move(sig));
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

DpSolver::DpSolver(const CapacitatedGraph& g, std::vector<VertexId> waypoints, const NiceTreeDecomposition& ntd)
    : g_(g), ntd_(ntd), waypoint_(static_cast<std::size_t>(g.vertex_count()), 0) {
  for (VertexId w : waypoints) waypoint_.at(static_cast<std::size_t>(w)) = 1;
  below_.assign(ntd.nodes.size(), std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0));
  for (std::size_t i = 0; i < ntd.nodes.size(); ++i) {
    for (VertexId v : ntd.nodes[i].bag) below_[i][static_cast<std::size_t>(v)] = 1;
    for (int c : ntd.nodes[i].children) {
      for (std::size_t v = 0; v < below_[i].size(); ++v) below_[i][v] |= below_[static_cast<std::size_t>(c)][v];
    }
  }
}

std::vector<EdgeId> DpSolver::bag_edges(int node) const {
  const auto& bag = ntd_.nodes[static_cast<std::size_t>(node)].bag;
  std::vector<EdgeId> out;
  for (VertexId v : bag) {
    for (EdgeId e : g_.incident(v)) {
      const VertexId u = g_.edge(e).other(v);
      if (u > v && std::binary_search(bag.begin(), bag.end(), u)) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void DpSolver::offer(SignatureTable& table, Signature sig, const SubSolution& sol) {
  auto it = table.find(sig);
  if (it == table.end()) {
    table.emplace(std::move(sig), sol);
    return;
  }
  const SubSolution& cur = it->second;
  if (sol.weight < cur.weight || (sol.weight == cur.weight && sol.edges < cur.edges)) it->second = sol;
}

void DpSolver::evaluate(int node, const std::vector<EdgeId>& edges, SignatureTable& table) {
  const NiceNode& nn = ntd_.nodes[static_cast<std::size_t>(node)];
  const auto& bag = nn.bag;
  const auto& below = below_[static_cast<std::size_t>(node)];
  auto in_bag = [&](VertexId v) { return std::binary_search(bag.begin(), bag.end(), v); };

  std::vector<char> touched(static_cast<std::size_t>(g_.vertex_count()), 0);
  SubSolution sol;
  sol.edges = edges;
  for (EdgeId e : edges) {
    const Edge& ed = g_.edge(e);
    touched[static_cast<std::size_t>(ed.u)] = 1;
    touched[static_cast<std::size_t>(ed.v)] = 1;
    sol.weight += ed.weight;
  }
  bool forgotten_waypoints = false;
  for (std::size_t v = 0; v < below.size(); ++v) {
    if (!below[v] || !waypoint_[v] || in_bag(static_cast<VertexId>(v))) continue;
    if (!touched[v]) return;
    forgotten_waypoints = true;
  }
  bool touches_bag = false;
  std::vector<VertexId> forced;
  for (VertexId v : bag) {
    if (touched[static_cast<std::size_t>(v)]) {
      touches_bag = true;
    } else if (waypoint_[static_cast<std::size_t>(v)]) {
      forced.push_back(v);
    }
  }

  if (!edges.empty() && !touches_bag) {
    // One finished closed walk strictly below the bag.
    if (!forced.empty() || !forgotten_waypoints) return;
    const VertexId start = g_.edge(edges.front()).u;
    try {
      (void)eulerian_circuit(g_, edges, start);
    } catch (const InputError&) {
      return;
    }
    sol.closed = true;
    offer(table, Signature{}, sol);
    return;
  }

  std::vector<PairList> pairings;
  if (edges.empty()) {
    pairings.emplace_back();
  } else {
    pairings = realizer_.realizable(g_, edges, bag);
  }
  if (pairings.empty()) return;

  std::vector<EdgeId> inside;
  for (EdgeId e : edges) {
    if (in_bag(g_.edge(e).u) && in_bag(g_.edge(e).v)) inside.push_back(e);
  }
  // Zero-length walks (v, v) may sit on any bag vertex, repeated while the
  // walk count stays within the distinct endpoints; uncovered waypoints need one.
  const int limit = static_cast<int>(bag.size());
  std::vector<int> lower(bag.size(), 0);
  for (std::size_t i = 0; i < bag.size(); ++i) {
    const auto v = static_cast<std::size_t>(bag[i]);
    if (waypoint_[v] && !touched[v]) lower[i] = 1;
  }
  std::vector<int> mult(bag.size(), 0);
  for (const PairList& base : pairings) {
    std::vector<char> is_end(bag.size(), 0);
    for (const auto& [a, b] : base) {
      for (std::size_t i = 0; i < bag.size(); ++i) {
        if (bag[i] == a || bag[i] == b) is_end[i] = 1;
      }
    }
    auto place = [&](auto&& self, std::size_t i, int walks, int beta) -> void {
      if (walks > limit) return;
      if (i == bag.size()) {
        if (walks > beta) return;
        Signature sig;
        sig.pairs = base;
        for (std::size_t j = 0; j < bag.size(); ++j) {
          for (int c = 0; c < mult[j]; ++c) sig.pairs.emplace_back(bag[j], bag[j]);
        }
        std::sort(sig.pairs.begin(), sig.pairs.end());
        sig.edges = inside;
        if (sig.is_empty()) {
          // No walk at all: only valid when nothing below needs a visit.
          if (!edges.empty() || forgotten_waypoints) return;
          offer(table, std::move(sig), SubSolution{});
          return;
        }
        offer(table, std::move(sig), sol);
        return;
      }
      for (int m = lower[i]; walks + m <= limit; ++m) {
        mult[i] = m;
        self(self, i + 1, walks + m, beta + ((is_end[i] || m > 0) ? 1 : 0));
      }
      mult[i] = 0;
    };
    place(place, 0, static_cast<int>(base.size()), 0);
  }
}

namespace {

std::set<std::vector<EdgeId>> distinct_sets(const SignatureTable& table) {
  std::set<std::vector<EdgeId>> out;
  for (const auto& [sig, sol] : table) out.insert(sol.edges);
  return out;
}

std::vector<EdgeId> merged(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
  std::vector<EdgeId> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

SignatureTable DpSolver::process_leaf(int node) {
  SignatureTable table;
  evaluate(node, {}, table);
  return table;
}

SignatureTable DpSolver::process_introduce(int node, const SignatureTable& child) {
  const NiceNode& nn = ntd_.nodes[static_cast<std::size_t>(node)];
  const VertexId v = nn.vertex;
  std::vector<EdgeId> fresh;
  for (EdgeId e : bag_edges(node)) {
    if (g_.edge(e).touches(v)) fresh.push_back(e);
  }
  // Every neighbor of v inside the subtree must already sit in the bag.
  const int child_index = nn.children.at(0);
  for (EdgeId e : g_.incident(v)) {
    const VertexId u = g_.edge(e).other(v);
    if (below_[static_cast<std::size_t>(child_index)][static_cast<std::size_t>(u)] &&
        !std::binary_search(nn.bag.begin(), nn.bag.end(), u)) {
      throw InputError("introduce node " + std::to_string(node) + " has a neighbor below its bag");
    }
  }
  if (fresh.size() > 20) throw LimitError("too many bag edges at an introduce node");
  SignatureTable table;
  for (const auto& base : distinct_sets(child)) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << fresh.size()); ++mask) {
      std::vector<EdgeId> extra;
      for (std::size_t i = 0; i < fresh.size(); ++i) {
        if (mask >> i & 1) extra.push_back(fresh[i]);
      }
      evaluate(node, merged(base, extra), table);
    }
  }
  return table;
}

SignatureTable DpSolver::process_forget(int node, const SignatureTable& child) {
  SignatureTable table;
  for (const auto& base : distinct_sets(child)) evaluate(node, base, table);
  return table;
}

SignatureTable DpSolver::process_join(int node, const SignatureTable& left, const SignatureTable& right) {
  SignatureTable table;
  const auto lefts = distinct_sets(left);
  const auto rights = distinct_sets(right);
  for (const auto& a : lefts) {
    for (const auto& b : rights) {
      std::vector<EdgeId> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (!common.empty()) continue;
      evaluate(node, merged(a, b), table);
    }
  }
  return table;
}

std::vector<SignatureTable> DpSolver::run(bool keep_all) {
  std::vector<SignatureTable> tables(ntd_.nodes.size());
  for (std::size_t i = 0; i < ntd_.nodes.size(); ++i) {
    const NiceNode& nn = ntd_.nodes[i];
    const int node = static_cast<int>(i);
    auto child = [&](std::size_t k) -> const SignatureTable& {
      return tables[static_cast<std::size_t>(nn.children.at(k))];
    };
    switch (nn.kind) {
      case NiceKind::kLeaf: tables[i] = process_leaf(node); break;
      case NiceKind::kIntroduce: tables[i] = process_introduce(node, child(0)); break;
      case NiceKind::kForget: tables[i] = process_forget(node, child(0)); break;
      case NiceKind::kJoin: tables[i] = process_join(node, child(0), child(1)); break;
    }
    if (!keep_all) {
      for (int c : nn.children) SignatureTable().swap(tables[static_cast<std::size_t>(c)]);
    }
  }
  return tables;
}

TwSolution solve_tw(const Instance& inst, const TwOptions& options) {
  TwSolution result;
  if (inst.source == inst.target && inst.waypoints.empty()) {
    result.feasible = true;
    result.route.start = inst.source;
    return result;
  }
  auto [clamped, trace] = clamp_instance(inst);
  auto [cycle, reduce_trace] = reduce_to_cycle(clamped);
  trace.append(std::move(reduce_trace));
  const VertexId anchor = cycle.source;

  TreeDecomposition td;
  const Adjacency adj = adjacency_of(cycle.graph);
  try {
    td = decompose(adj, DecomposeOptions{DecomposeMode::kExact, options.decompose_budget});
  } catch (const LimitError&) {
    td = decompose(adj, DecomposeOptions{DecomposeMode::kHeuristic, options.decompose_budget});
  }
  auto [unified, unify_trace] = unify_instance(cycle);
  const TreeDecomposition td_unified = extend_to_unified(td, unified.graph, unify_trace.steps.front());
  trace.append(std::move(unify_trace));
  const NiceTreeDecomposition ntd = make_nice(td_unified);
  result.width = ntd.width();
  result.nodes = ntd.node_count();
  if (result.width > options.width_cap) {
    throw LimitError("decomposition width " + std::to_string(result.width) + " exceeds the width cap " +
                     std::to_string(options.width_cap) + "; try --algo linegraph or --algo oracle");
  }

  std::vector<VertexId> targets = unified.waypoints;
  targets.push_back(anchor);
  DpSolver dp(unified.graph, targets, ntd);
  const bool dump = !options.dump_tables_dir.empty();
  const auto tables = dp.run(true);
  if (dump) {
    std::filesystem::create_directories(options.dump_tables_dir);
    for (std::size_t i = 0; i < tables.size(); ++i) {
      std::ofstream out(std::filesystem::path(options.dump_tables_dir) / ("node_" + std::to_string(i) + ".txt"));
      write_table(out, tables[i]);
    }
  }
  for (const auto& t : tables) {
    result.largest_table = std::max(result.largest_table, t.size());
    result.explored += static_cast<std::int64_t>(t.size());
  }
  const SignatureTable& root = tables[static_cast<std::size_t>(ntd.root)];
  const auto it = root.find(Signature{});
  if (it == root.end() || !it->second.closed) return result;

  const Route closed = eulerian_circuit(unified.graph, it->second.edges, anchor);
  result.route = lift_route(trace, closed);
  result.cost = route_cost(inst, result.route);
  result.feasible = true;
  return result;
}

}  // namespace wrp
