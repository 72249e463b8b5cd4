#pragma once

#include <cstdint>

#include "wrp/graph.hpp"

namespace wrp {

struct OracleOptions {
  /// Distinct search states allowed before LimitError.
  std::int64_t state_budget = 5'000'000;
};

/// Uniform-cost search over (vertex, remaining capacities, visited waypoints).
/// Capacities are clamped to 2 internally. Supports at most 32 edges and 63
/// waypoints; larger inputs raise LimitError.
Solution brute_force_solve(const Instance& inst, const OracleOptions& options = {});

}  // namespace wrp
