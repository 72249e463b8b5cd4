#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "wrp/instances.hpp"
#include "wrp/io.hpp"

using namespace wrp;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "wrp_unit_cli";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("solve reports the optimum with each algorithm") {
  const fs::path inst = write_file("left.txt", instance_text(canonical("fig1-left")));
  for (const std::string algo : {"auto", "tw", "linegraph", "oracle"}) {
    cli::SolveArgs args;
    args.instance = inst.string();
    args.algo = algo;
    std::ostringstream out, err;
    CHECK(cli::cmd_solve({}, args, out, err) == 0);
    CHECK_MESSAGE(out.str().find("cost 7\n") != std::string::npos, algo << ": " << out.str() << err.str());
  }
}

TEST_CASE("solve output is deterministic") {
  const fs::path inst = write_file("right.txt", instance_text(canonical("fig1-right")));
  cli::SolveArgs args;
  args.instance = inst.string();
  args.algo = "tw";
  std::ostringstream a, b, err;
  cli::cmd_solve({}, args, a, err);
  cli::cmd_solve({}, args, b, err);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("time_ms") == std::string::npos);
}

TEST_CASE("verify exit codes") {
  const fs::path inst = write_file("verify.txt", instance_text(canonical("fig1-left")));
  std::ostringstream out, err;
  SUBCASE("valid route") {
    const fs::path route = write_file("good.route", route_text(canonical_route("fig1-left"), 7));
    CHECK(cli::cmd_verify(inst.string(), route.string(), out, err) == 0);
    CHECK(out.str().find("cost 7") != std::string::npos);
  }
  SUBCASE("invalid route") {
    const fs::path route = write_file("bad.route", route_text(Route{0, {{0, true}, {3, true}}}, 2));
    CHECK(cli::cmd_verify(inst.string(), route.string(), out, err) == 1);
  }
  SUBCASE("unparsable route") {
    const fs::path route = write_file("junk.route", "what is this\n");
    CHECK(cli::cmd_verify(inst.string(), route.string(), out, err) == 2);
  }
  SUBCASE("missing instance") {
    CHECK(cli::cmd_verify(scratch("nope.txt").string(), inst.string(), out, err) == 2);
  }
}

TEST_CASE("limits map to exit code 3") {
  KTreeSpec spec;
  spec.n = 14;
  spec.k = 4;
  spec.keep = 1.0;
  spec.seed = 2;
  const fs::path inst = write_file("wide.txt", instance_text(gen_partial_ktree(spec)));
  cli::GlobalFlags flags;
  flags.width_cap = 2;
  cli::SolveArgs args;
  args.instance = inst.string();
  args.algo = "tw";
  std::ostringstream out, err;
  CHECK(cli::cmd_solve(flags, args, out, err) == 3);
}

TEST_CASE("gen writes a parsable instance") {
  cli::GenArgs args;
  args.family = "partial-ktree";
  args.n = 9;
  args.k = 2;
  std::ostringstream out, err;
  REQUIRE(cli::cmd_gen({}, args, out, err) == 0);
  std::istringstream in(out.str());
  CHECK(parse_instance(in).instance.graph.vertex_count() == 9);
  args.family = "no-such-family";
  std::ostringstream out2;
  CHECK(cli::cmd_gen({}, args, out2, err) == 2);
}

TEST_CASE("bench rows") {
  std::istringstream spec("partial-ktree n=5..6 k=2 waypoints=2 seed=3 algos=tw,oracle\n");
  const auto rows = cli::run_bench({}, spec);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].outcome == rows[1].outcome);
  CHECK(rows[2].outcome == rows[3].outcome);
}
