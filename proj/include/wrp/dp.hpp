#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wrp/graph.hpp"
#include "wrp/realize.hpp"
#include "wrp/treewidth.hpp"

namespace wrp {

/// DP state at a bag. The EMPTY signature has no pairs and no edges.
/// Pairs are (a, b) with a <= b sorted lexicographically; edges are sorted ids.
struct Signature {
  PairList pairs;
  std::vector<EdgeId> edges;

  bool is_empty() const { return pairs.empty(); }
  auto operator<=>(const Signature&) const = default;
};

std::string to_string(const Signature& sig);

/// Best known edge set for a signature. `closed` marks the EMPTY entry that
/// already holds one finished closed walk (as opposed to no walk at all).
struct SubSolution {
  Weight weight = 0;
  std::vector<EdgeId> edges;  // sorted
  bool closed = false;
};

using SignatureTable = std::map<Signature, SubSolution>;

/// All canonical signatures over a sorted bag and the edges inside it:
/// pair multisets with 1 <= pairs <= distinct endpoints, times every subset of
/// `bag_edges`, plus EMPTY. Throws LimitError when the bag exceeds
/// `width_limit + 1` vertices.
std::vector<Signature> enumerate_signatures(const std::vector<VertexId>& bag, const std::vector<EdgeId>& bag_edges,
                                            int width_limit = 8);
/// Size of enumerate_signatures without materializing it.
std::uint64_t count_signatures(int bag_size, int bag_edge_count);

/// Signature DP over a nice decomposition of a unit-capacity graph whose walk
/// is closed at `anchor`. `waypoints` must include the anchor.
class DpSolver {
 public:
  DpSolver(const CapacitatedGraph& g, std::vector<VertexId> waypoints, const NiceTreeDecomposition& ntd);

  SignatureTable process_leaf(int node);
  SignatureTable process_introduce(int node, const SignatureTable& child);
  SignatureTable process_forget(int node, const SignatureTable& child);
  SignatureTable process_join(int node, const SignatureTable& left, const SignatureTable& right);

  /// Bottom-up pass. With keep_all every node's table is returned, otherwise
  /// only the root's (other slots are left empty).
  std::vector<SignatureTable> run(bool keep_all = false);

  std::vector<EdgeId> bag_edges(int node) const;
  /// Vertices of the subtree rooted at `node` (flag per graph vertex).
  const std::vector<char>& subtree_vertices(int node) const { return below_[static_cast<std::size_t>(node)]; }
  const NiceTreeDecomposition& decomposition() const { return ntd_; }
  const CapacitatedGraph& graph() const { return g_; }
  bool is_waypoint(VertexId v) const { return waypoint_[static_cast<std::size_t>(v)]; }

 private:
  void evaluate(int node, const std::vector<EdgeId>& edges, SignatureTable& table);
  static void offer(SignatureTable& table, Signature sig, const SubSolution& sol);

  const CapacitatedGraph& g_;
  const NiceTreeDecomposition& ntd_;
  std::vector<char> waypoint_;
  std::vector<std::vector<char>> below_;
  PairingRealizer realizer_;
};

struct TwOptions {
  int width_cap = 8;
  std::int64_t decompose_budget = 5'000'000;
  /// When non-empty, every node table is written to <dir>/node_<id>.txt.
  std::string dump_tables_dir;
};

struct TwSolution : Solution {
  int width = -1;  // width of the nice decomposition the DP ran on
  int nodes = 0;
  std::size_t largest_table = 0;
};

/// Exact WRP solver via the signature DP. Throws LimitError when the
/// decomposition of the unified graph is wider than `width_cap`.
TwSolution solve_tw(const Instance& inst, const TwOptions& options = {});

void write_table(std::ostream& out, const SignatureTable& table);

}  // namespace wrp
