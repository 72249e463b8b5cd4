#include "commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "wrp/dp.hpp"
#include "wrp/instances.hpp"
#include "wrp/io.hpp"
#include "wrp/line_graph.hpp"
#include "wrp/oracle.hpp"
#include "wrp/transform.hpp"
#include "wrp/treewidth.hpp"

namespace wrp::cli {

namespace {

constexpr int kOracleMaxVertices = 8;

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  return f;
}

RunReport from_solution(const Instance& inst, const Solution& s, std::string algo, std::string trace) {
  RunReport r;
  r.digest = instance_digest(inst);
  r.algorithm = std::move(algo);
  r.feasible = s.feasible;
  r.cost = s.cost;
  r.route = s.route;
  r.trace = std::move(trace);
  return r;
}

RunReport run_tw(const Instance& inst, const GlobalFlags& flags) {
  TwOptions opt;
  opt.width_cap = flags.width_cap;
  opt.dump_tables_dir = flags.dump_tables;
  if (!opt.dump_tables_dir.empty()) std::filesystem::create_directories(opt.dump_tables_dir);
  const TwSolution s = solve_tw(inst, opt);
  RunReport r = from_solution(inst, s, "tw", "clamp reduce_to_cycle unify");
  r.counters = {{"width", s.width}, {"nodes", s.nodes}, {"largest_table", static_cast<std::int64_t>(s.largest_table)},
                {"entries", s.explored}};
  return r;
}

RunReport run_linegraph(const Instance& inst, const GlobalFlags& flags, const std::string& dump) {
  LineOptions opt;
  opt.limits.max_terminals = flags.max_k;
  if (!dump.empty()) {
    if (inst.source == inst.target && inst.waypoints.empty()) throw InputError("nothing to dump: empty route instance");
    const auto [cycle, t1] = reduce_to_cycle(inst);
    const auto [normalized, t2] = normalize_instance_simple_unit(cycle);
    auto f = open_out(dump);
    write_line_graph(f, build_waypoint_line_graph(normalized));
  }
  const LineSolution s = solve_via_kcycle(inst, opt);
  RunReport r = from_solution(inst, s, "linegraph", "reduce_to_cycle clamp normalize");
  r.counters = {{"line_vertices", s.line_vertices}, {"line_edges", s.line_edges}, {"path_length", s.path_length}};
  return r;
}

RunReport run_oracle(const Instance& inst, const GlobalFlags& flags) {
  OracleOptions opt;
  opt.state_budget = flags.state_budget;
  const Solution s = brute_force_solve(inst, opt);
  RunReport r = from_solution(inst, s, "oracle", "none");
  r.counters = {{"states", s.explored}};
  return r;
}

}  // namespace

std::string instance_digest(const Instance& inst) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : instance_text(inst)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

RunReport run_solver(const Instance& inst, const std::string& algo, const GlobalFlags& flags,
                     const std::string& dump_line_graph) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport r;
  if (algo == "tw") {
    r = run_tw(inst, flags);
  } else if (algo == "linegraph") {
    r = run_linegraph(inst, flags, dump_line_graph);
  } else if (algo == "oracle") {
    r = run_oracle(inst, flags);
  } else if (algo == "auto") {
    const int k = inst.waypoint_count() + 1;
    if (inst.graph.vertex_count() <= kOracleMaxVertices && inst.graph.edge_count() <= 32) {
      r = run_oracle(inst, flags);
    } else {
      // Hub and unification each add at most one to the width.
      const int heuristic = decompose(inst.graph).width() + 2;
      bool done = false;
      if (heuristic <= flags.width_cap) {
        try {
          r = run_tw(inst, flags);
          done = true;
        } catch (const LimitError&) {
        }
      }
      if (!done) {
        if (k > flags.max_k) {
          throw LimitError("width estimate " + std::to_string(heuristic) + " exceeds --width-cap " +
                           std::to_string(flags.width_cap) + " and " + std::to_string(k) +
                           " terminals exceed --max-k " + std::to_string(flags.max_k) +
                           "; raise a limit or try --algo oracle");
        }
        r = run_linegraph(inst, flags, dump_line_graph);
      }
    }
  } else {
    throw InputError("unknown algorithm: " + algo);
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (r.feasible && route_cost(inst, r.route) != r.cost) throw std::logic_error("report cost disagrees with route");
  return r;
}

void write_report(std::ostream& out, const RunReport& r, bool timing) {
  out << "instance " << r.digest << "\n";
  out << "algorithm " << r.algorithm << "\n";
  out << "status " << (r.feasible ? "optimal" : "infeasible") << "\n";
  if (r.feasible) {
    out << "cost " << r.cost << "\n";
    write_route(out, r.route, std::nullopt);
  }
  for (const auto& [name, value] : r.counters) out << "counter " << name << " " << value << "\n";
  out << "trace " << r.trace << "\n";
  if (timing) out << "time_ms " << std::fixed << std::setprecision(3) << r.wall_ms << "\n";
}

std::string report_json(const RunReport& r) {
  nlohmann::json j;
  j["instance"] = r.digest;
  j["algorithm"] = r.algorithm;
  j["feasible"] = r.feasible;
  if (r.feasible) {
    j["cost"] = r.cost;
    j["route"] = {{"start", r.route.start}, {"steps", nlohmann::json::array()}};
    for (const Step& s : r.route.steps) j["route"]["steps"].push_back({{"edge", s.edge}, {"forward", s.forward}});
  }
  j["time_ms"] = r.wall_ms;
  for (const auto& [name, value] : r.counters) j["counters"][name] = value;
  j["trace"] = r.trace;
  return j.dump(2);
}

int cmd_solve(const GlobalFlags& flags, const SolveArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const InstanceFile file = read_instance(args.instance);
    const RunReport r = run_solver(file.instance, args.algo, flags, args.dump_line_graph);
    write_report(out, r, args.timing);
    if (!args.json_out.empty()) open_out(args.json_out) << report_json(r) << "\n";
    if (!args.route_out.empty() && r.feasible) {
      auto f = open_out(args.route_out);
      write_route(f, r.route, r.cost);
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const LimitError& e) {
    err << "limit: " << e.what() << "\n";
    return kExitLimit;
  }
}

int cmd_verify(const std::string& instance, const std::string& route, std::ostream& out, std::ostream& err) {
  InstanceFile file;
  RouteFile rf;
  try {
    file = read_instance(instance);
    rf = read_route(route);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  const ValidationReport report = validate_route(file.instance, rf.route);
  if (!report.ok()) {
    out << "invalid\n";
    for (const Violation& v : report.violations) out << "violation " << v.message << "\n";
    return kExitInvalid;
  }
  const Weight cost = route_cost(file.instance, rf.route);
  out << "valid\ncost " << cost << "\n";
  if (rf.cost && *rf.cost != cost) {
    out << "violation stated cost " << *rf.cost << " differs from " << cost << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

int cmd_decompose(const GlobalFlags&, const DecomposeArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const InstanceFile file = read_instance(args.instance);
    DecomposeOptions opt;
    if (args.mode == "exact") {
      opt.mode = DecomposeMode::kExact;
    } else if (args.mode != "heuristic") {
      throw InputError("unknown mode: " + args.mode);
    }
    const TreeDecomposition td = decompose(file.instance.graph, opt);
    std::ostringstream text;
    if (args.nice) {
      write_nice(text, make_nice(td));
    } else {
      write_decomposition(text, td);
    }
    if (args.output.empty()) {
      out << text.str();
    } else {
      open_out(args.output) << text.str();
    }
    err << "width " << td.width() << "\n";
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const LimitError& e) {
    err << "limit: " << e.what() << "\n";
    return kExitLimit;
  }
}

namespace {

CapacitatedGraph drop_edge(const CapacitatedGraph& g, EdgeId drop) {
  if (drop < 0 || drop >= g.edge_count()) throw InputError("no edge " + std::to_string(drop));
  CapacitatedGraph out(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.id != drop) out.add_edge(e.u, e.v, e.capacity, e.weight);
  }
  return out;
}

CapacitatedGraph base_graph(const GenArgs& args) {
  if (args.base.empty() || args.base == "cycle") return cycle_graph(args.n);
  if (args.base == "cube") return cube_graph();
  return read_instance(args.base).instance.graph;
}

InstanceFile generate(const GlobalFlags& flags, const GenArgs& args) {
  const std::string& f = args.family;
  if (f == "fig1-left" || f == "fig1-right") return {canonical(f), {}};
  if (f == "partial-ktree") {
    KTreeSpec spec;
    spec.n = args.n;
    spec.k = args.k;
    spec.max_waypoints = args.waypoints;
    spec.seed = flags.seed;
    return {gen_partial_ktree(spec), {}};
  }
  if (f == "grid-deg3-tail") return gen_grid_tail(gen_ladder(args.n, args.waypoints, flags.seed), args.r);
  if (f == "ham-encode") {
    CapacitatedGraph g = base_graph(args);
    if (args.drop_edge >= 0) g = drop_edge(g, args.drop_edge);
    return {ham_encode(g), {}};
  }
  if (f == "bipartite-3reg-trees") {
    Instance base;
    if (args.base.empty() || args.base == "cube" || args.base == "cycle") {
      GenArgs shape = args;
      if (shape.base.empty()) shape.base = "cube";
      base.graph = base_graph(shape);
      base.source = 0;
      base.target = 0;
      for (VertexId v = 1; v < base.graph.vertex_count(); ++v) base.waypoints.push_back(v);
    } else {
      base = read_instance(args.base).instance;
    }
    return {gen_bipartite_trees_gadget(base, args.edge, args.r), {}};
  }
  throw InputError("unknown family: " + f);
}

}  // namespace

int cmd_gen(const GlobalFlags& flags, const GenArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const InstanceFile file = generate(flags, args);
    if (args.output.empty()) {
      write_instance(out, file.instance, file.coords);
    } else {
      auto f = open_out(args.output);
      write_instance(f, file.instance, file.coords);
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const LimitError& e) {
    err << "limit: " << e.what() << "\n";
    return kExitLimit;
  }
}

namespace {

std::vector<int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) return {std::stoi(text)};
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
  } catch (const std::exception&) {
    throw InputError("bad range: " + text);
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

std::vector<BenchRow> run_bench(const GlobalFlags& flags, std::istream& spec) {
  std::vector<BenchRow> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(spec, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::string family;
    if (!(in >> family)) continue;
    std::map<std::string, std::string> kv{{"n", "8"}, {"algos", "tw"}};
    for (std::string token; in >> token;) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) throw InputError("bench line " + std::to_string(line_no) + ": expected key=value");
      kv[token.substr(0, eq)] = token.substr(eq + 1);
    }
    for (int size : parse_range(kv["n"])) {
      GenArgs ga;
      ga.family = family;
      ga.n = size;
      if (kv.count("k")) ga.k = parse_range(kv["k"]).front();
      if (kv.count("r")) ga.r = parse_range(kv["r"]).front();
      if (kv.count("waypoints")) ga.waypoints = parse_range(kv["waypoints"]).front();
      GlobalFlags gf = flags;
      gf.dump_tables.clear();
      if (kv.count("seed")) gf.seed = static_cast<std::uint64_t>(parse_range(kv["seed"]).front());
      if (kv.count("width-cap")) gf.width_cap = parse_range(kv["width-cap"]).front();
      const Instance inst = generate(gf, ga).instance;
      for (const std::string& algo : split(kv["algos"], ',')) {
        if (algo == "oracle" && inst.graph.vertex_count() > kOracleMaxVertices) continue;
        BenchRow row{family, size, algo, std::nullopt, ""};
        try {
          const RunReport r = run_solver(inst, algo, gf);
          row.ms = r.wall_ms;
          row.outcome = r.feasible ? std::to_string(r.cost) : "infeasible";
        } catch (const LimitError&) {
          row.outcome = "limit";
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

int cmd_bench(const GlobalFlags& flags, const BenchArgs& args, std::ostream& out, std::ostream& err) {
  try {
    std::ifstream spec(args.spec);
    if (!spec) throw InputError("cannot read " + args.spec);
    const auto rows = run_bench(flags, spec);
    auto ms_text = [](const BenchRow& r) {
      if (!r.ms) return std::string("-");
      std::ostringstream s;
      s << std::fixed << std::setprecision(3) << *r.ms;
      return s.str();
    };
    out << std::left << std::setw(22) << "family" << std::setw(6) << "size" << std::setw(11) << "algo"
        << std::setw(12) << "time_ms" << "cost\n";
    for (const BenchRow& r : rows) {
      out << std::left << std::setw(22) << r.family << std::setw(6) << r.size << std::setw(11) << r.algo
          << std::setw(12) << ms_text(r) << r.outcome << "\n";
    }
    if (!args.csv.empty()) {
      auto f = open_out(args.csv);
      f << "family,size,algo,time_ms,cost\n";
      for (const BenchRow& r : rows) f << r.family << "," << r.size << "," << r.algo << "," << ms_text(r) << "," << r.outcome << "\n";
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace wrp::cli
