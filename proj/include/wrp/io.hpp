#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "wrp/graph.hpp"

namespace wrp {

/// Grid coordinates carried as `coord <v> <x> <y>` sidecar lines.
using Coordinates = std::map<VertexId, std::pair<int, int>>;

struct InstanceFile {
  Instance instance;
  Coordinates coords;
};

/// Parses the line-oriented instance format:
///   v <count> | e <u> <v> <capacity> <weight> | s <vertex> | t <vertex> |
///   w <vertex> | coord <v> <x> <y>; '#' starts a comment.
/// Throws InputError with the offending line number.
InstanceFile parse_instance(std::istream& in);
InstanceFile read_instance(const std::string& path);

void write_instance(std::ostream& out, const Instance& inst, const Coordinates& coords = {});
std::string instance_text(const Instance& inst, const Coordinates& coords = {});

struct RouteFile {
  Route route;
  std::optional<Weight> cost;
};

/// `route <start> ; <edge>:<+|-> ...` followed by an optional `cost <int>` line.
RouteFile parse_route(std::istream& in);
RouteFile read_route(const std::string& path);
void write_route(std::ostream& out, const Route& r, std::optional<Weight> cost);
std::string route_text(const Route& r, std::optional<Weight> cost);

}  // namespace wrp
