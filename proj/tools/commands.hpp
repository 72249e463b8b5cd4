#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wrp/graph.hpp"

namespace wrp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitLimit = 3;

struct GlobalFlags {
  std::uint64_t seed = 1;
  int width_cap = 8;
  int max_k = 8;
  std::int64_t state_budget = 5'000'000;
  std::string dump_tables;
};

struct RunReport {
  std::string digest;
  std::string algorithm;
  bool feasible = false;
  Weight cost = 0;
  Route route;
  double wall_ms = 0;
  std::vector<std::pair<std::string, std::int64_t>> counters;
  std::string trace;
};

/// FNV-1a over the canonical instance text.
std::string instance_digest(const Instance& inst);

/// Runs one algorithm ("auto", "tw", "linegraph", "oracle"). Throws
/// InputError / LimitError.
RunReport run_solver(const Instance& inst, const std::string& algo, const GlobalFlags& flags,
                     const std::string& dump_line_graph = {});

void write_report(std::ostream& out, const RunReport& report, bool timing);
std::string report_json(const RunReport& report);

struct SolveArgs {
  std::string instance;
  std::string algo = "auto";
  std::string json_out;
  std::string route_out;
  std::string dump_line_graph;
  bool timing = false;
};

struct DecomposeArgs {
  std::string instance;
  std::string mode = "heuristic";
  bool nice = false;
  std::string output;
};

struct GenArgs {
  std::string family;
  int n = 8;
  int k = 2;
  int r = 2;
  int waypoints = 3;
  int edge = 0;
  int drop_edge = -1;
  std::string base;
  std::string output;
};

struct BenchArgs {
  std::string spec;
  std::string csv;
};

int cmd_solve(const GlobalFlags& flags, const SolveArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& instance, const std::string& route, std::ostream& out, std::ostream& err);
int cmd_decompose(const GlobalFlags& flags, const DecomposeArgs& args, std::ostream& out, std::ostream& err);
int cmd_gen(const GlobalFlags& flags, const GenArgs& args, std::ostream& out, std::ostream& err);
int cmd_bench(const GlobalFlags& flags, const BenchArgs& args, std::ostream& out, std::ostream& err);

/// Bench spec lines: `<family> key=value ...` with `n=8..16` ranges and
/// `algos=tw,oracle`; '#' starts a comment.
struct BenchRow {
  std::string family;
  int size = 0;
  std::string algo;
  std::optional<double> ms;
  std::string outcome;  // cost, "infeasible", or "limit"
};
std::vector<BenchRow> run_bench(const GlobalFlags& flags, std::istream& spec);

}  // namespace wrp::cli
