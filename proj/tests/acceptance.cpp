// Acceptance run: one PASS/FAIL line per criterion, tolerances fixed below.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "checkers.hpp"
#include "commands.hpp"
#include "wrp/dp.hpp"
#include "wrp/euler.hpp"
#include "wrp/instances.hpp"
#include "wrp/line_graph.hpp"
#include "wrp/oracle.hpp"
#include "wrp/transform.hpp"
#include "wrp/treewidth.hpp"

using namespace wrp;

namespace {

constexpr double kGoldenSeconds = 1.0;
constexpr double kEquivalenceSeconds = 300.0;
constexpr int kEquivalenceInstances = 200;
constexpr int kUnifyInstances = 50;
constexpr int kSeparationGraphs = 100;
constexpr int kLineInstances = 50;
constexpr int kMinimalityEdgeLimit = 10;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << " " << name << ": " << detail << std::endl;
  if (!ok) ++failures;
}

// Instance family shared by criteria 2 and 3.
std::vector<Instance> equivalence_set() {
  std::vector<Instance> out;
  for (int i = 0; i < kEquivalenceInstances; ++i) {
    KTreeSpec spec;
    spec.n = 3 + i % 6;
    spec.k = 1 + (i / 6) % 3;
    if (spec.k >= spec.n) spec.k = spec.n - 1;
    spec.max_waypoints = 3;
    spec.max_edges = 12;
    spec.seed = 1000 + static_cast<std::uint64_t>(i);
    out.push_back(gen_partial_ktree(spec));
  }
  return out;
}

void criterion1() {
  std::ostringstream detail;
  bool ok = true;
  const std::vector<std::pair<std::string, Weight>> golden{{"fig1-left", 7}, {"fig1-right", 6}};
  for (const auto& [name, expected] : golden) {
    const Instance inst = canonical(name);
    const Route depicted = canonical_route(name);
    if (!validate_route(inst, depicted).ok() || route_cost(inst, depicted) != expected) {
      ok = false;
      detail << name << " depicted walk invalid; ";
    }
    for (const std::string algo : {"tw", "linegraph", "oracle"}) {
      const auto t0 = Clock::now();
      Solution s;
      if (algo == "tw") s = solve_tw(inst);
      if (algo == "linegraph") s = solve_via_kcycle(inst);
      if (algo == "oracle") s = brute_force_solve(inst);
      const double sec = seconds_since(t0);
      const bool good = s.feasible && s.cost == expected && validate_route(inst, s.route).ok() && sec < kGoldenSeconds;
      ok = ok && good;
      detail << name << "/" << algo << "=" << (s.feasible ? std::to_string(s.cost) : "infeasible") << " ("
             << static_cast<int>(sec * 1000) << " ms) ";
    }
  }
  report(1, "golden instances", ok, detail.str());
}

void criterion2(const std::vector<Instance>& set) {
  const auto t0 = Clock::now();
  int mismatches = 0, infeasible = 0;
  for (const Instance& inst : set) {
    const TwSolution a = solve_tw(inst);
    const Solution b = brute_force_solve(inst);
    bool ok = a.feasible == b.feasible;
    if (ok && a.feasible) ok = a.cost == b.cost && validate_route(inst, a.route).ok();
    if (!b.feasible) ++infeasible;
    if (!ok) ++mismatches;
  }
  const double sec = seconds_since(t0);
  std::ostringstream detail;
  detail << set.size() << " instances, " << mismatches << " mismatches, " << infeasible << " infeasible, " << sec
         << " s (limit " << kEquivalenceSeconds << " s)";
  report(2, "oracle equivalence", mismatches == 0 && sec < kEquivalenceSeconds && set.size() >= 200, detail.str());
}

void criterion3(const std::vector<Instance>& set) {
  int checked = 0, bad = 0;
  for (const Instance& inst : set) {
    if (inst.source == inst.target) continue;
    ++checked;
    const Solution a = brute_force_solve(inst);
    const Solution b = brute_force_solve(reduce_to_cycle(inst).first);
    if (a.feasible != b.feasible || (a.feasible && b.cost != a.cost + 2)) ++bad;
  }
  std::ostringstream detail;
  detail << checked << " instances with s != t, " << bad << " violations of optimum + 2";
  report(3, "reduction correctness", bad == 0 && checked > 0, detail.str());
}

void criterion4() {
  int bad = 0, checked = 0, brute_checked = 0;
  std::ostringstream detail;
  for (int i = 0; i < kUnifyInstances; ++i) {
    KTreeSpec spec;
    spec.n = 4 + i % 7;
    spec.k = 2;
    spec.max_waypoints = 0;
    spec.seed = 5000 + static_cast<std::uint64_t>(i);
    const Instance inst = gen_partial_ktree(spec);
    const auto clamped = clamp_capacities(inst.graph).first;
    const auto unified = unify(clamped).first;
    const int before = exact_treewidth(inst.graph);
    const int after = exact_treewidth(unified);
    // Cross-check the exact search with the subset recurrence where it fits.
    if (inst.graph.vertex_count() <= 16 && checks::brute_force_treewidth(inst.graph) != before) ++bad;
    if (unified.vertex_count() <= 20) {
      ++brute_checked;
      if (checks::brute_force_treewidth(unified) != after) ++bad;
    }
    if (after > before + 1) ++bad;
    ++checked;
  }
  detail << checked << " partial 2-trees, " << bad << " violations (" << brute_checked
         << " unified widths cross-checked by subset recurrence)";
  report(4, "unification width bound", bad == 0 && checked >= 50, detail.str());
}

bool fig2_example() {
  // s1 s2 s3 | a1 a2 | b1 b2 b3 as 0..7
  CapacitatedGraph g(8);
  const int s1 = 0, s2 = 1, s3 = 2, a1 = 3, a2 = 4, b1 = 5, b2 = 6, b3 = 7;
  for (auto [u, v] : std::vector<std::pair<int, int>>{{s1, a1}, {a1, s2}, {s2, a2}, {a2, s3}, {s1, s2}, {b1, b2},
                                                      {b2, b3}, {s1, b1}, {s1, b2}, {s2, b2}, {s3, b3}}) {
    g.add_edge(u, v, 1, 1);
  }
  const std::vector<VertexId> sep{s1, s2, s3};
  const std::vector<VertexId> side_a{s1, s2, s3, a1, a2};
  const auto out = eulerian_separate(g, sep, side_a);
  int na = 0, nb = 0;
  for (bool a : out.in_a) (a ? na : nb)++;
  return checks::separation_violations(g, sep, side_a, out).empty() && na == 1 && nb == 1;
}

void criterion5() {
  std::mt19937_64 rng(77);
  int bad = 0, total = 0;
  std::size_t max_ratio_num = 0, max_ratio_den = 1;
  for (int i = 0; i < kSeparationGraphs; ++i) {
    const int n = 4 + i % 9;
    const CapacitatedGraph g = checks::random_eulerian(n, i % 4, rng);
    std::vector<VertexId> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::shuffle(order.begin(), order.end(), rng);
    const int size = 1 + static_cast<int>(rng() % 3);
    std::vector<VertexId> sep(order.begin(), order.begin() + size);
    std::sort(sep.begin(), sep.end());
    // Components of g - sep go to a random side.
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<char> is_sep(static_cast<std::size_t>(n), 0);
    for (VertexId v : sep) is_sep[static_cast<std::size_t>(v)] = 1;
    int comps = 0;
    for (VertexId s = 0; s < n; ++s) {
      if (is_sep[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] >= 0) continue;
      std::vector<VertexId> stack{s};
      comp[static_cast<std::size_t>(s)] = comps;
      while (!stack.empty()) {
        const VertexId x = stack.back();
        stack.pop_back();
        for (EdgeId e : g.incident(x)) {
          const VertexId y = g.edge(e).other(x);
          if (is_sep[static_cast<std::size_t>(y)] || comp[static_cast<std::size_t>(y)] >= 0) continue;
          comp[static_cast<std::size_t>(y)] = comps;
          stack.push_back(y);
        }
      }
      ++comps;
    }
    std::vector<char> comp_in_a(static_cast<std::size_t>(comps));
    for (auto& c : comp_in_a) c = static_cast<char>(rng() % 2);
    std::vector<VertexId> side_a = sep;
    for (VertexId v = 0; v < n; ++v) {
      if (!is_sep[static_cast<std::size_t>(v)] && comp_in_a[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])]) {
        side_a.push_back(v);
      }
    }
    std::sort(side_a.begin(), side_a.end());
    ++total;
    try {
      const auto out = eulerian_separate(g, sep, side_a);
      if (!checks::separation_violations(g, sep, side_a, out).empty()) ++bad;
      if (out.walks.size() * max_ratio_den > max_ratio_num * sep.size()) {
        max_ratio_num = out.walks.size();
        max_ratio_den = sep.size();
      }
    } catch (const std::exception&) {
      ++bad;
    }
  }
  const bool fig2 = fig2_example();
  std::ostringstream detail;
  detail << total << " graphs, " << bad << " violating outputs, max walks/|s| = " << max_ratio_num << "/"
         << max_ratio_den << ", two-walk example " << (fig2 ? "ok" : "wrong");
  report(5, "Eulerian separation", bad == 0 && fig2 && total >= 100, detail.str());
}

void criterion6() {
  std::mt19937_64 rng(4242);
  int feasible = 0, infeasible = 0, bad = 0, pruned_fallback = 0, attempts = 0;
  ExhaustiveBackend backend;
  while (feasible < kLineInstances && attempts < 2000) {
    ++attempts;
    const int n = 3 + attempts % 5;
    const int m = n - 1 + static_cast<int>(rng() % 4);
    const Instance inst = checks::random_simple_unit(n, m, 1 + static_cast<int>(rng() % 3), rng);
    const Solution best = brute_force_solve(inst);
    const WaypointLineGraph lg = build_waypoint_line_graph(inst);
    std::vector<VertexId> terminals = lg.waypoint_hubs;
    terminals.push_back(lg.source_hub);
    terminals.push_back(lg.target_hub);
    KCycleLimits limits;
    limits.node_budget = 20'000'000;
    std::optional<LinePath> path;
    try {
      path = backend.shortest(lg.graph, lg.source_hub, lg.target_hub, terminals, SearchHints{}, limits);
    } catch (const LimitError&) {
      ++pruned_fallback;
      path = backend.shortest(lg.graph, lg.source_hub, lg.target_hub, terminals, search_hints(lg), limits);
    }
    if (!best.feasible) {
      ++infeasible;
      if (path) ++bad;
      continue;
    }
    if (inst.source == inst.target && inst.waypoints.empty()) continue;
    ++feasible;
    // Route -> path: the optimal route maps to a qualifying path of 5x length.
    const LinePath forward = map_route_to_path(lg, inst, best.route);
    if (!check_line_path(lg, forward).empty() || line_path_length(forward) != 5 * best.cost) ++bad;
    // Path -> route: the shortest path maps to a valid route of 1/5 length.
    if (!path || line_path_length(*path) != 5 * best.cost) {
      ++bad;
      continue;
    }
    const Route back = map_path_to_route(lg, inst, *path);
    if (!validate_route(inst, back).ok() || 5 * route_cost(inst, back) != line_path_length(*path)) ++bad;
  }

  // Size bounds on general instances, plain and reduced.
  int bound_cases = 0, bound_bad = 0;
  for (int i = 0; i < 60; ++i) {
    KTreeSpec spec;
    spec.n = 3 + i % 5;
    spec.k = 1 + i % 2;
    spec.max_edges = 10;
    spec.max_waypoints = 3;
    spec.seed = 9000 + static_cast<std::uint64_t>(i);
    const Instance inst = gen_partial_ktree(spec);
    for (const Instance& g : {inst, reduce_to_cycle(inst).first}) {
      Weight f = 1;
      for (const Edge& e : g.graph.edges()) f = std::max(f, e.weight);
      const std::int64_t nv = g.graph.vertex_count(), ne = g.graph.edge_count();
      const auto normalized = normalize_instance_simple_unit(g).first;
      const WaypointLineGraph lg = build_waypoint_line_graph(normalized);
      const std::int64_t small = nv + 4 * ne * f;
      const std::int64_t large = 199 * nv * nv * nv * nv * f * f;
      ++bound_cases;
      if (normalized.graph.vertex_count() > small || normalized.graph.edge_count() > small) ++bound_bad;
      if (lg.graph.vertex_count() > large || lg.graph.edge_count() > large) ++bound_bad;
    }
  }
  std::ostringstream detail;
  detail << feasible << " feasible instances (" << infeasible << " infeasible also checked), " << bad
         << " 5x violations, " << pruned_fallback << " needed the pruned search; size bounds " << bound_bad
         << " violations over " << bound_cases << " cases";
  report(6, "line-graph 5x law", bad == 0 && bound_bad == 0 && feasible >= kLineInstances, detail.str());
}

void criterion7() {
  std::vector<Instance> set{canonical("fig1-left"), canonical("fig1-right")};
  for (int i = 0; i < 12; ++i) {
    KTreeSpec spec;
    spec.n = 3 + i % 3;
    spec.k = 1 + i % 2;
    spec.max_edges = 5;
    spec.max_waypoints = 2;
    spec.seed = 7000 + static_cast<std::uint64_t>(i);
    set.push_back(gen_partial_ktree(spec));
  }
  std::int64_t nodes = 0, entries = 0, count_bad = 0, valid_bad = 0, minimal_checked = 0, minimal_bad = 0;
  for (const Instance& inst : set) {
    const auto fx = checks::build_dp(inst);
    const auto& dp = *fx->dp;
    for (int node = 0; node < fx->ntd.node_count(); ++node) {
      ++nodes;
      const auto& table = fx->tables[static_cast<std::size_t>(node)];
      const auto& bag = fx->ntd.nodes[static_cast<std::size_t>(node)].bag;
      const auto ceiling =
          count_signatures(static_cast<int>(bag.size()), static_cast<int>(dp.bag_edges(node).size()));
      if (table.size() > ceiling) ++count_bad;
      const bool small = checks::subtree_edge_count(dp, node) <= kMinimalityEdgeLimit;
      for (const auto& [sig, sol] : table) {
        ++entries;
        if (!checks::signature_violations(dp, node, sig, sol).empty()) ++valid_bad;
        if (small) {
          ++minimal_checked;
          const auto best = checks::min_weight_by_enumeration(dp, node, sig);
          if (!best || *best != sol.weight) ++minimal_bad;
        }
      }
    }
  }
  std::ostringstream detail;
  detail << set.size() << " instances, " << nodes << " nodes, " << entries << " entries; ceiling violations "
         << count_bad << ", conditions 1-5 violations " << valid_bad << ", minimality " << minimal_bad << "/"
         << minimal_checked << " wrong";
  report(7, "signature accounting", count_bad == 0 && valid_bad == 0 && minimal_bad == 0 && minimal_checked > 0,
         detail.str());
}

void criterion8() {
  std::ostringstream detail;
  const Instance hc = ham_encode(cycle_graph(6));
  const CapacitatedGraph c6 = cycle_graph(6);
  CapacitatedGraph path6(6);
  for (const Edge& e : c6.edges()) {
    if (e.id != 0) path6.add_edge(e.u, e.v, e.capacity, e.weight);
  }
  const Instance broken = ham_encode(path6);
  bool ok = true;
  for (const std::string algo : {"tw", "linegraph", "oracle"}) {
    Solution a, b;
    if (algo == "tw") {
      a = solve_tw(hc);
      b = solve_tw(broken);
    } else if (algo == "linegraph") {
      a = solve_via_kcycle(hc);
      b = solve_via_kcycle(broken);
    } else {
      a = brute_force_solve(hc);
      b = brute_force_solve(broken);
    }
    const bool good = a.feasible && a.cost == 6 && !b.feasible;
    ok = ok && good;
    detail << algo << ":" << (a.feasible ? std::to_string(a.cost) : "inf") << "/"
           << (b.feasible ? std::to_string(b.cost) : "inf") << " ";
  }
  int structural = 0, structural_bad = 0;
  auto check_structure = [&](const CapacitatedGraph& g, int degree_cap) {
    ++structural;
    if (!checks::is_bipartite(g) || checks::max_degree(g) > degree_cap) ++structural_bad;
  };
  std::vector<Instance> bases;
  for (const CapacitatedGraph& g : {cube_graph(), cycle_graph(6)}) bases.push_back(ham_encode(g));
  for (const Instance& base : bases) {
    for (EdgeId e = 0; e < base.graph.edge_count(); ++e) {
      for (int r = 2; r <= 4; ++r) {
        const Instance out = gen_bipartite_trees_gadget(base, e, r);
        check_structure(out.graph, 3);
        for (VertexId w : out.waypoints) {
          if (w >= base.graph.vertex_count()) ++structural_bad;
        }
      }
    }
  }
  for (int cols = 2; cols <= 5; ++cols) {
    for (int r = 1; r <= 2; ++r) {
      const InstanceFile f = gen_grid_tail(gen_ladder(cols, 2, static_cast<std::uint64_t>(cols)), r);
      check_structure(f.instance.graph, 3);
      if (f.coords.size() != static_cast<std::size_t>(f.instance.graph.vertex_count())) ++structural_bad;
    }
  }
  for (const Instance& h : {hc, ham_encode(cube_graph())}) {
    ++structural;
    bool enc = h.source == h.target && static_cast<int>(h.waypoints.size()) == h.graph.vertex_count() - 1;
    for (const Edge& e : h.graph.edges()) enc = enc && e.capacity == 1 && e.weight == 1;
    if (!enc) ++structural_bad;
  }
  detail << "(cycle/cycle-minus-edge); structural checks " << structural - structural_bad << "/" << structural;
  report(8, "hardness encodings", ok && structural_bad == 0, detail.str());
}

void criterion9() {
  cli::GlobalFlags flags;
  std::istringstream spec(
      "partial-ktree n=6..8 k=1 waypoints=3 seed=3 algos=tw,oracle\n"
      "partial-ktree n=6..8 k=2 waypoints=3 seed=3 algos=tw,oracle\n"
      "partial-ktree n=6..8 k=3 waypoints=3 seed=3 algos=tw,oracle\n");
  const auto rows = cli::run_bench(flags, spec);
  int overlap = 0, disagree = 0;
  std::ostringstream times;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (rows[i].algo == "tw" && rows[i + 1].algo == "oracle" && rows[i].size == rows[i + 1].size) {
      ++overlap;
      if (rows[i].outcome != rows[i + 1].outcome) ++disagree;
    }
  }
  for (const auto& r : rows) {
    if (r.algo == "tw") times << r.size << ":" << (r.ms ? static_cast<int>(*r.ms) : -1) << "ms ";
  }
  std::ostringstream detail;
  detail << rows.size() << " bench rows, tw/oracle overlap " << overlap << " rows with " << disagree
         << " disagreements; tw times by k=1,2,3 sweeps: " << times.str() << "(recorded only)";
  report(9, "bench sanity", !rows.empty() && disagree == 0 && overlap > 0, detail.str());
}

}  // namespace

int main() {
  const auto set = equivalence_set();
  criterion1();
  criterion2(set);
  criterion3(set);
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
