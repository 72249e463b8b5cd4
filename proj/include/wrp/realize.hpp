#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wrp/graph.hpp"

namespace wrp {

using PairList = std::vector<std::pair<VertexId, VertexId>>;

/// Which endpoint pairings an edge set admits relative to a bag.
///
/// For an edge set U of a unit-capacity graph and a sorted bag B, returns every
/// canonical pairing P (pairs (a, b) with a <= b over B, sorted) such that U
/// splits into |P| edge-disjoint walks of length >= 1 whose endpoint pairs are
/// exactly P, with |P| <= number of distinct endpoints. Returns nothing when U
/// is empty, when a component of U misses B, or when a vertex outside B has
/// odd degree in U.
///
/// Results are memoized on the shape of U after chains through vertices
/// outside B are contracted, so repeated calls are cheap.
class PairingRealizer {
 public:
  std::vector<PairList> realizable(const CapacitatedGraph& g, const std::vector<EdgeId>& edges,
                                   const std::vector<VertexId>& bag);

  std::size_t cache_size() const { return cache_.size(); }

 private:
  std::map<std::string, std::vector<std::vector<std::pair<int, int>>>> cache_;
};

}  // namespace wrp
