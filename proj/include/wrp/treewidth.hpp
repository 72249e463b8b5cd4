#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wrp/graph.hpp"
#include "wrp/transform.hpp"

namespace wrp {

using Adjacency = std::vector<std::vector<VertexId>>;

struct TreeDecomposition {
  std::vector<std::vector<VertexId>> bags;  // each sorted
  std::vector<std::pair<int, int>> links;   // tree edges between bag indices

  int width() const;
  int node_count() const { return static_cast<int>(bags.size()); }
};

enum class DecomposeMode { kExact, kHeuristic };

struct DecomposeOptions {
  DecomposeMode mode = DecomposeMode::kHeuristic;
  /// Search states allowed in exact mode before LimitError.
  std::int64_t node_budget = 5'000'000;
};

TreeDecomposition decompose(const CapacitatedGraph& g, const DecomposeOptions& options = {});
TreeDecomposition decompose(const Adjacency& adj, const DecomposeOptions& options = {});

/// Minimum width over all elimination orders, with the order that attains it.
struct ExactResult {
  int width = 0;
  std::vector<VertexId> order;
};
ExactResult exact_treewidth(const Adjacency& adj, std::int64_t node_budget = 5'000'000);
int exact_treewidth(const CapacitatedGraph& g, std::int64_t node_budget = 5'000'000);

/// Min-fill elimination order; ties go to the lowest vertex id.
std::vector<VertexId> min_fill_order(const Adjacency& adj);
/// Width of the decomposition induced by eliminating in `order`.
int elimination_width(const Adjacency& adj, const std::vector<VertexId>& order);
TreeDecomposition decomposition_from_order(const Adjacency& adj,
                                           const std::vector<VertexId>& order);

enum class DecompositionViolationKind { kNotATree, kVertexUncovered, kEdgeUncovered, kConnectivity, kBadVertex };

struct DecompositionViolation {
  DecompositionViolationKind kind;
  VertexId vertex = kNoVertex;
  VertexId other = kNoVertex;  // second endpoint for kEdgeUncovered
  std::string message;
};

struct DecompositionReport {
  std::vector<DecompositionViolation> violations;
  bool ok() const { return violations.empty(); }
  bool has(DecompositionViolationKind kind) const;
};

DecompositionReport validate_decomposition(const CapacitatedGraph& g, const TreeDecomposition& td);
DecompositionReport validate_decomposition(const Adjacency& adj, const TreeDecomposition& td);

/// Decomposition of the unified graph built from one of its source graph:
/// each subdivision vertex x of an edge {u, v} gets a bag {u, v, x} hung off a
/// bag that contains both u and v.
TreeDecomposition extend_to_unified(const TreeDecomposition& td, const CapacitatedGraph& unified,
                                    const TraceStep& unify_step);

enum class NiceKind { kLeaf, kIntroduce, kForget, kJoin };

struct NiceNode {
  NiceKind kind = NiceKind::kLeaf;
  VertexId vertex = kNoVertex;  // leaf vertex, or the introduced / forgotten vertex
  std::vector<VertexId> bag;    // sorted
  std::vector<int> children;
};

/// Rooted nice decomposition. Nodes are stored children-first, so iterating
/// indices upward is a valid bottom-up order; the root bag is empty.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;

  int width() const;
  int node_count() const { return static_cast<int>(nodes.size()); }
  TreeDecomposition underlying() const;
};

NiceTreeDecomposition make_nice(const TreeDecomposition& td);

/// Typing rules of every node plus the decomposition axioms.
std::vector<std::string> validate_nice(const Adjacency& adj, const NiceTreeDecomposition& ntd);

Adjacency adjacency_of(const CapacitatedGraph& g);

void write_decomposition(std::ostream& out, const TreeDecomposition& td);
void write_nice(std::ostream& out, const NiceTreeDecomposition& ntd);
std::string to_string(NiceKind kind);

}  // namespace wrp
