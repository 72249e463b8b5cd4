#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace wrp::cli;
  CLI::App app{"Waypoint routing solver"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "Generator seed");
  app.add_option("--width-cap", flags.width_cap, "Largest decomposition width the DP accepts");
  app.add_option("--max-k", flags.max_k, "Largest terminal count for the line-graph backend");
  app.add_option("--state-budget", flags.state_budget, "Oracle state budget");
  app.add_option("--dump-tables", flags.dump_tables, "Directory for DP table dumps");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("instance", solve.instance)->required();
  solve_cmd->add_option("--algo", solve.algo)->check(CLI::IsMember({"auto", "tw", "linegraph", "oracle"}));
  solve_cmd->add_option("--json", solve.json_out, "Write a JSON report");
  solve_cmd->add_option("--route-out", solve.route_out, "Write the route file");
  solve_cmd->add_option("--dump-line-graph", solve.dump_line_graph, "Write the line graph (linegraph only)");
  solve_cmd->add_flag("--timing", solve.timing, "Print wall time");

  std::string verify_instance, verify_route;
  auto* verify_cmd = app.add_subcommand("verify", "Check a route against an instance");
  verify_cmd->add_option("instance", verify_instance)->required();
  verify_cmd->add_option("route", verify_route)->required();

  DecomposeArgs dec;
  auto* dec_cmd = app.add_subcommand("decompose", "Tree decomposition of an instance graph");
  dec_cmd->add_option("instance", dec.instance)->required();
  dec_cmd->add_option("--mode", dec.mode)->check(CLI::IsMember({"exact", "heuristic"}));
  dec_cmd->add_flag("--nice", dec.nice);
  dec_cmd->add_option("-o,--output", dec.output);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--family", gen.family)
      ->required()
      ->check(CLI::IsMember({"fig1-left", "fig1-right", "partial-ktree", "grid-deg3-tail", "bipartite-3reg-trees",
                             "ham-encode"}));
  gen_cmd->add_option("--n", gen.n, "Vertices (partial-ktree, cycle base) or ladder columns");
  gen_cmd->add_option("--k", gen.k);
  gen_cmd->add_option("--r", gen.r);
  gen_cmd->add_option("--waypoints", gen.waypoints);
  gen_cmd->add_option("--edge", gen.edge, "Base edge replaced by the gadget");
  gen_cmd->add_option("--drop-edge", gen.drop_edge, "Edge removed before ham-encode");
  gen_cmd->add_option("--base", gen.base, "cycle, cube, or an instance file");
  gen_cmd->add_option("-o,--output", gen.output);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark spec");
  bench_cmd->add_option("spec", bench.spec)->required();
  bench_cmd->add_option("--csv", bench.csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  if (*solve_cmd) return cmd_solve(flags, solve, std::cout, std::cerr);
  if (*verify_cmd) return cmd_verify(verify_instance, verify_route, std::cout, std::cerr);
  if (*dec_cmd) return cmd_decompose(flags, dec, std::cout, std::cerr);
  if (*gen_cmd) return cmd_gen(flags, gen, std::cout, std::cerr);
  return cmd_bench(flags, bench, std::cout, std::cerr);
}
