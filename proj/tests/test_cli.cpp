#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "clawmis/generators.hpp"
#include "clawmis/io.hpp"

using json = nlohmann::json;
using namespace clawmis;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

const std::string& cli_path() {
  static std::string path = [] {
    const char* env = std::getenv("CLAWMIS_CLI");
    REQUIRE_MESSAGE(env != nullptr, "CLAWMIS_CLI must point at the binary");
    return std::string(env);
  }();
  return path;
}

const std::string& work_dir() {
  static std::string dir = [] {
    std::string tmpl = "/tmp/clawmis_cli_XXXXXX";
    char* made = mkdtemp(tmpl.data());
    REQUIRE(made != nullptr);
    return std::string(made);
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  std::string path = work_dir() + "/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args) {
  std::string out_path = work_dir() + "/stdout";
  std::string err_path = work_dir() + "/stderr";
  std::string cmd =
      cli_path() + " " + args + " > " + out_path + " 2> " + err_path;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

const std::string& tight4_path() {
  static std::string path =
      write_file("tight4.graph", serialize_graph(berman_tight(4).instance));
  return path;
}

}  // namespace

TEST_CASE("cli: gen tight emits a parseable self-describing graph") {
  RunResult r = run_cli("gen tight --d 4");
  REQUIRE(r.exit_code == 0);
  ProblemInstance inst = parse_graph(r.out);
  CHECK(inst.n == 9);
  CHECK(inst.d == 4);
  CHECK(r.out.find("a-side: 0 1 2") != std::string::npos);
  CHECK(r.out.find("b-side: 3 4 5 6 7 8") != std::string::npos);
}

TEST_CASE("cli: solve picks the algorithm and reports exactly") {
  RunResult bounded = run_cli("solve " + tight4_path());
  REQUIRE(bounded.exit_code == 0);
  json rec = json::parse(bounded.out);
  CHECK(rec["command"] == "solve");
  CHECK(rec["instance"]["n"] == 9);
  CHECK(rec["instance"]["d"] == 4);
  CHECK(rec["config"]["algorithm"] == "bounded");
  CHECK(rec["config"]["size_bound"] == 12);
  CHECK(rec["result"]["weight"] == "6");
  CHECK(rec["result"]["vertices"] == json({3, 4, 5, 6, 7, 8}));
  CHECK(rec["result"]["certificate"] == "locally-optimal");

  json claw = json::parse(run_cli("solve --algorithm squareimp " + tight4_path()).out);
  CHECK(claw["result"]["weight"] == "3");
  CHECK(claw["config"]["size_bound"].is_null());

  json greedy = json::parse(run_cli("solve --algorithm greedy " + tight4_path()).out);
  CHECK(greedy["result"]["weight"] == "3");
  CHECK(greedy["result"]["certificate"] == "not-applicable");
}

TEST_CASE("cli: generated d=6 trap holds under claw swaps") {
  RunResult gen = run_cli("gen tight --d 6");
  REQUIRE(gen.exit_code == 0);
  std::string path = write_file("tight6.graph", gen.out);
  json rec = json::parse(
      run_cli("solve --algorithm squareimp --warm-start a-side " + path).out);
  CHECK(rec["result"]["iterations"] == 0);
  CHECK(rec["result"]["weight"] == "5");
}

TEST_CASE("cli: solve honors warm starts and the oracle flag") {
  RunResult r = run_cli("solve --algorithm squareimp --warm-start a-side --oracle " +
                        tight4_path());
  REQUIRE(r.exit_code == 0);
  json rec = json::parse(r.out);
  CHECK(rec["result"]["weight"] == "3");
  CHECK(rec["result"]["iterations"] == 0);  // the trap holds under claw swaps
  CHECK(rec["oracle"]["weight"] == "6");
  CHECK(rec["oracle"]["ratio"] == "2");
  CHECK(rec["oracle"]["ratio_decimal"] == "2");
}

TEST_CASE("cli: scaled solve reports its iteration certificate") {
  RunResult r = run_cli("solve --scale-N 2 " + tight4_path());
  REQUIRE(r.exit_code == 0);
  json rec = json::parse(r.out);
  CHECK(rec["result"]["weight"] == "6");
  CHECK(rec["scaling"]["iteration_bound"] == "2916");
  CHECK(rec["scaling"]["iterations_within_bound"] == true);
  CHECK(rec["scaling"]["potential_integral"] == true);

  RunResult greedy = run_cli("solve --algorithm greedy --scale-N 2 " + tight4_path());
  CHECK(greedy.exit_code == 2);
  RunResult warm = run_cli("solve --scale-N 2 --warm-start a-side " + tight4_path());
  CHECK(warm.exit_code == 2);
}

TEST_CASE("cli: solve output is byte-deterministic") {
  std::string args = "solve --algorithm bounded " + tight4_path();
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.out == b.out);
  RunResult threads1 = run_cli(args + " --threads 1");
  RunResult threads4 = run_cli(args + " --threads 4");
  CHECK(threads1.out == threads4.out);
  CHECK(threads1.out == a.out);  // --threads never shows up in the record
}

TEST_CASE("cli: set packing inputs are reduced and lifted") {
  std::string path = write_file("pack.sp",
                                "p setpack 3 2\n"
                                "s 2 a b\n"
                                "s 3 b c\n"
                                "s 5/2 c d\n");
  RunResult r = run_cli("solve " + path);
  REQUIRE(r.exit_code == 0);
  json rec = json::parse(r.out);
  CHECK(rec["instance"]["format"] == "setpack");
  CHECK(rec["instance"]["k"] == 2);
  CHECK(rec["instance"]["d"] == 3);
  CHECK(rec["result"]["weight"] == "9/2");
  CHECK(rec["result"]["weight_decimal"] == "4.5");
  CHECK(rec["packing"]["sets"] == json({0, 2}));

  RunResult reduced = run_cli("reduce " + path);
  REQUIRE(reduced.exit_code == 0);
  ProblemInstance inst = parse_graph(reduced.out);
  CHECK(inst.n == 3);
  CHECK(inst.d == 3);
  CHECK(inst.edge_count == 2);
}

TEST_CASE("cli: verify-local-opt distinguishes trapped from terminal") {
  std::string trap = write_file("trap.sol", "0 1 2\n");
  RunResult caught = run_cli("verify-local-opt --solution " + trap + " " +
                             tight4_path());
  CHECK(caught.exit_code == 1);
  json rec = json::parse(caught.out);
  CHECK(rec["verdict"] == "improvable");
  CHECK(rec["improvement"]["vertices"] == json({0, 4, 5, 8}));
  CHECK(rec["size_bound_effective"] == 12);

  std::string done = write_file("done.sol", "3 4 5 6 7 8\n");
  RunResult ok = run_cli("verify-local-opt --solution " + done + " " +
                         tight4_path());
  CHECK(ok.exit_code == 0);
  CHECK(json::parse(ok.out)["verdict"] == "locally-optimal");

  // run records are accepted as solution files
  std::string record_path = work_dir() + "/solve.json";
  run_cli("solve -o " + record_path + " " + tight4_path());
  RunResult from_record = run_cli("verify-local-opt --solution " + record_path +
                                  " " + tight4_path());
  CHECK(from_record.exit_code == 0);

  std::string broken = write_file("broken.sol", "0 3\n");  // adjacent pair
  RunResult bad = run_cli("verify-local-opt --solution " + broken + " " +
                          tight4_path());
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli: analyze certifies the terminal run it performs") {
  RunResult r = run_cli("analyze " + tight4_path());
  REQUIRE(r.exit_code == 0);
  json rec = json::parse(r.out);
  CHECK(rec["verdict"] == "pass");
  CHECK(rec["solution"]["certified_locally_optimal"] == true);
  CHECK(rec["charges"]["identity_holds"] == true);
  CHECK(rec["charges"]["bound_holds"] == true);
  CHECK(rec["contributions"]["targets_within_weight"] == true);
  CHECK(rec["classification"]["structure_applicable"] == true);
  CHECK(rec["classification"]["structure_ok"] == true);
  CHECK(rec["classification"]["sqrt_eps"] == "1/2304");

  // analyzing the trap as a plain solution file: identity still holds and no
  // structure is promised, so the verdict stays pass
  std::string trap = write_file("trap2.sol", "0 1 2\n");
  RunResult trapped = run_cli("analyze --solution " + trap + " " + tight4_path());
  REQUIRE(trapped.exit_code == 0);
  json t = json::parse(trapped.out);
  CHECK(t["solution"]["certified_locally_optimal"] == false);
  CHECK(t["classification"]["structure_applicable"] == false);
  CHECK(t["classification"]["near_tight"] == json({0, 1, 2}));
  CHECK(t["classification"]["twins"] == json({3, 4, 5}));
}

TEST_CASE("cli: check-constants") {
  RunResult ok = run_cli("check-constants");
  REQUIRE(ok.exit_code == 0);
  json rec = json::parse(ok.out);
  CHECK(rec["eps"] == "1/5308416");
  CHECK(rec["all_hold"] == true);
  CHECK(rec["per_d"].size() == 8);  // d = 3..10
  CHECK(rec["per_d"][0]["mode"] == "exact");
  CHECK(rec["per_d"][0]["sqrt_eps"] == "1/2304");
  CHECK(rec["per_d"][0]["checks"].size() == 11);

  RunResult bad = run_cli("check-constants --eps 1/4");
  CHECK(bad.exit_code == 1);
  CHECK(json::parse(bad.out)["all_hold"] == false);
}

TEST_CASE("cli: oracle subcommand") {
  RunResult r = run_cli("oracle " + tight4_path());
  REQUIRE(r.exit_code == 0);
  json rec = json::parse(r.out);
  CHECK(rec["optimum"]["vertices"] == json({3, 4, 5, 6, 7, 8}));
  CHECK(rec["optimum"]["weight"] == "6");
}

TEST_CASE("cli: malformed input and usage errors exit with 2") {
  std::string bad = write_file("bad.graph", "p mwis 2 1 2\nv 0 1\nv 1 1\n");
  RunResult r = run_cli("solve " + bad);
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("line 1") != std::string::npos);

  CHECK(run_cli("solve --algorithm fancy " + tight4_path()).exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("solve /nonexistent/x.graph").exit_code == 2);
  CHECK(run_cli("reduce " + tight4_path()).exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // a subcommand is required
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli: bench emits one CSV row per seed and algorithm") {
  RunResult r = run_cli(
      "bench --kind cliques --sizes 3,3 --seeds 1:2 --oracle "
      "--algorithms greedy,bounded");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "kind,seed,n,m,d,algorithm,scale_N,weight,weight_decimal,iterations,"
        "certificate,oracle_weight,oracle_weight_decimal,ratio_decimal");
  int rows = 0;
  std::string row;
  while (std::getline(lines, row)) {
    ++rows;
    CHECK(row.substr(0, 8) == "cliques,");
    // cluster graphs are solved exactly by the bounded strategy
    if (row.find(",bounded,") != std::string::npos)
      CHECK(row.substr(row.rfind(',') + 1) == "1");
  }
  CHECK(rows == 4);

  RunResult again = run_cli(
      "bench --kind cliques --sizes 3,3 --seeds 1:2 --oracle "
      "--algorithms greedy,bounded");
  CHECK(again.out == r.out);
}

TEST_CASE("cli: gen subcommands are deterministic") {
  RunResult a = run_cli("gen setpack --sets 6 --universe 8 --k 3 --seed 11");
  RunResult b = run_cli("gen setpack --sets 6 --universe 8 --k 3 --seed 11");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  SetSystem sys = parse_set_system(a.out);
  CHECK(sys.sets.size() == 6);

  RunResult cl = run_cli("gen cliques --sizes 2,3 --seed 5 --wmin 1 --wmax 2");
  REQUIRE(cl.exit_code == 0);
  ProblemInstance inst = parse_graph(cl.out);
  CHECK(inst.n == 5);
  CHECK(inst.d == 2);

  RunResult cf = run_cli("gen clawfree --n 8 --p 1/4 --d 4 --seed 3");
  REQUIRE(cf.exit_code == 0);
  ProblemInstance free_inst = parse_graph(cf.out);
  CHECK(free_inst.n == 8);
  CHECK(is_d_claw_free(free_inst, 4));

  // a hopeless request is a reported failure, not a crash
  RunResult never =
      run_cli("gen clawfree --n 12 --p 1/2 --d 2 --seed 3 --max-attempts 3");
  CHECK(never.exit_code == 1);
  CHECK(never.err.find("attempts") != std::string::npos);
}
