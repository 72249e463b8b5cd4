#pragma once

// Independent reference checks used by the unit and acceptance tests. None of
// these call into the solver code paths they are used to check.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wrp/dp.hpp"
#include "wrp/euler.hpp"
#include "wrp/graph.hpp"

namespace checks {

using wrp::CapacitatedGraph;
using wrp::EdgeId;
using wrp::VertexId;

/// True when `edges` (each used once) splits into trails, the i-th running
/// between pairs[i].first and pairs[i].second (a closed or empty trail when
/// they coincide). Exhaustive search; at most 63 edges.
bool trail_decomposable(const CapacitatedGraph& g, const std::vector<EdgeId>& edges,
                        const std::vector<std::pair<VertexId, VertexId>>& pairs);

/// Violated conditions 1-5 of a stored DP entry at `node`; empty when valid.
std::vector<std::string> signature_violations(const wrp::DpSolver& dp, int node, const wrp::Signature& sig,
                                              const wrp::SubSolution& sol);

/// Minimum weight over every edge subset of the subtree satisfying conditions
/// 1-5 for `sig`, or nullopt when none does. Subtree must have <= 20 edges.
std::optional<wrp::Weight> min_weight_by_enumeration(const wrp::DpSolver& dp, int node, const wrp::Signature& sig);

int subtree_edge_count(const wrp::DpSolver& dp, int node);

/// Conditions 1-4 of the separation statement plus the walk-count bound.
std::vector<std::string> separation_violations(const CapacitatedGraph& g, const std::vector<VertexId>& separator,
                                               const std::vector<VertexId>& side_a, const wrp::SeparatedWalks& out);

/// Minimum elimination width over all vertex orders (n <= 9).
int brute_force_treewidth(const CapacitatedGraph& g);

/// BFS two-coloring; false when an odd cycle exists.
bool is_bipartite(const CapacitatedGraph& g);
int max_degree(const CapacitatedGraph& g);

/// Connected multigraph with all degrees even: a spanning cycle plus `extra`
/// random cycles.
CapacitatedGraph random_eulerian(int n, int extra, std::mt19937_64& rng);

/// Random simple connected unit graph instance (for line-graph tests).
wrp::Instance random_simple_unit(int n, int m, int waypoints, std::mt19937_64& rng);

/// The DP exactly as solve_tw sets it up, with every node table kept.
struct DpFixture {
  wrp::Instance unified;
  wrp::NiceTreeDecomposition ntd;
  std::unique_ptr<wrp::DpSolver> dp;
  std::vector<wrp::SignatureTable> tables;
};
std::unique_ptr<DpFixture> build_dp(const wrp::Instance& inst);

}  // namespace checks
