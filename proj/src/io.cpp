#include "wrp/io.hpp"

#include <fstream>
#include <sstream>

namespace wrp {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

long long read_int(std::istringstream& ss, int line, const char* field) {
  long long value = 0;
  if (!(ss >> value)) fail(line, std::string("expected integer ") + field);
  return value;
}

std::string strip_comment(const std::string& raw) {
  const auto hash = raw.find('#');
  return hash == std::string::npos ? raw : raw.substr(0, hash);
}

}  // namespace

InstanceFile parse_instance(std::istream& in) {
  InstanceFile file;
  Instance& inst = file.instance;
  bool have_count = false;
  bool have_s = false;
  bool have_t = false;
  struct PendingEdge {
    long long u, v, cap, w;
    int line;
  };
  std::vector<PendingEdge> pending;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ss(strip_comment(raw));
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag == "v") {
      if (have_count) fail(line, "duplicate vertex count");
      const long long n = read_int(ss, line, "vertex count");
      if (n < 1) fail(line, "vertex count must be positive");
      inst.graph = CapacitatedGraph(static_cast<int>(n));
      have_count = true;
    } else if (tag == "e") {
      PendingEdge e{};
      e.u = read_int(ss, line, "u");
      e.v = read_int(ss, line, "v");
      e.cap = read_int(ss, line, "capacity");
      e.w = read_int(ss, line, "weight");
      e.line = line;
      pending.push_back(e);
    } else if (tag == "s") {
      inst.source = static_cast<VertexId>(read_int(ss, line, "source"));
      have_s = true;
    } else if (tag == "t") {
      inst.target = static_cast<VertexId>(read_int(ss, line, "target"));
      have_t = true;
    } else if (tag == "w") {
      inst.waypoints.push_back(static_cast<VertexId>(read_int(ss, line, "waypoint")));
    } else if (tag == "coord") {
      const auto v = static_cast<VertexId>(read_int(ss, line, "vertex"));
      const auto x = static_cast<int>(read_int(ss, line, "x"));
      const auto y = static_cast<int>(read_int(ss, line, "y"));
      file.coords[v] = {x, y};
    } else {
      fail(line, "unknown directive '" + tag + "'");
    }
    std::string extra;
    if (ss >> extra) fail(line, "trailing token '" + extra + "'");
  }
  if (!have_count) throw InputError("missing 'v <count>' directive");
  if (!have_s) throw InputError("missing 's <vertex>' directive");
  if (!have_t) throw InputError("missing 't <vertex>' directive");
  for (const PendingEdge& e : pending) {
    try {
      inst.graph.add_edge(static_cast<VertexId>(e.u), static_cast<VertexId>(e.v),
                          static_cast<int>(e.cap), static_cast<Weight>(e.w));
    } catch (const InputError& err) {
      fail(e.line, err.what());
    }
  }
  normalize_instance(inst);
  return file;
}

InstanceFile read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file " + path);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst, const Coordinates& coords) {
  out << "v " << inst.graph.vertex_count() << "\n";
  for (const Edge& e : inst.graph.edges()) {
    out << "e " << e.u << " " << e.v << " " << e.capacity << " " << e.weight << "\n";
  }
  out << "s " << inst.source << "\n";
  out << "t " << inst.target << "\n";
  for (VertexId w : inst.waypoints) out << "w " << w << "\n";
  for (const auto& [v, xy] : coords) {
    out << "coord " << v << " " << xy.first << " " << xy.second << "\n";
  }
}

std::string instance_text(const Instance& inst, const Coordinates& coords) {
  std::ostringstream ss;
  write_instance(ss, inst, coords);
  return ss.str();
}

RouteFile parse_route(std::istream& in) {
  RouteFile file;
  bool have_route = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ss(strip_comment(raw));
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag == "route") {
      if (have_route) fail(line, "duplicate route line");
      file.route.start = static_cast<VertexId>(read_int(ss, line, "start vertex"));
      std::string sep;
      if (!(ss >> sep) || sep != ";") fail(line, "expected ';' after start vertex");
      std::string tok;
      while (ss >> tok) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos || colon + 2 != tok.size()) {
          fail(line, "malformed step '" + tok + "'");
        }
        const char dir = tok.back();
        if (dir != '+' && dir != '-') fail(line, "step direction must be + or -");
        EdgeId id = kNoEdge;
        try {
          std::size_t used = 0;
          id = static_cast<EdgeId>(std::stol(tok.substr(0, colon), &used));
          if (used != colon) fail(line, "malformed edge id in '" + tok + "'");
        } catch (const std::logic_error&) {
          fail(line, "malformed edge id in '" + tok + "'");
        }
        file.route.steps.push_back(Step{id, dir == '+'});
      }
      have_route = true;
    } else if (tag == "cost") {
      file.cost = static_cast<Weight>(read_int(ss, line, "cost"));
    } else {
      fail(line, "unknown directive '" + tag + "'");
    }
  }
  if (!have_route) throw InputError("missing 'route' line");
  return file;
}

RouteFile read_route(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open route file " + path);
  return parse_route(in);
}

void write_route(std::ostream& out, const Route& r, std::optional<Weight> cost) {
  out << "route " << r.start << " ;";
  for (const Step& s : r.steps) out << " " << s.edge << ":" << (s.forward ? '+' : '-');
  out << "\n";
  if (cost) out << "cost " << *cost << "\n";
}

std::string route_text(const Route& r, std::optional<Weight> cost) {
  std::ostringstream ss;
  write_route(ss, r, cost);
  return ss.str();
}

}  // namespace wrp
