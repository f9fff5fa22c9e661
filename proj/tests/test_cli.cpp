#include "subprocess.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>

namespace {

std::string bt_bin() {
    const char* path = std::getenv("BT_BIN");
    REQUIRE_MESSAGE(path != nullptr, "BT_BIN must point at the bt binary");
    return shell_quote(path);
}

} // namespace

TEST_CASE("enumerate streams the canonical order") {
    RunResult r = run_command(bt_bin() + " enumerate --nodes 3", "");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(1 (1 (1)))\n(2 (1) (1))\n");

    r = run_command(bt_bin() + " enumerate --nodes 1", "");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(1)\n");

    r = run_command(bt_bin() + " enumerate --nodes 3 --root 2", "");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(2 (1) (1))\n");

    r = run_command(bt_bin() + " enumerate --nodes 3 --labeled", "");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(1:1 (1:2 (1:3)))\n(2:1 (1:2) (1:3))\n");

    r = run_command(bt_bin() + " enumerate --nodes 2 --format json", "");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"label\":1,\"children\":[{\"label\":1,\"children\":[]}]}\n");
}

TEST_CASE("enumerate usage errors") {
    CHECK(run_command(bt_bin() + " enumerate", "").exit_code == 2);
    CHECK(run_command(bt_bin() + " enumerate --nodes 0", "").exit_code == 2);
    CHECK(run_command(bt_bin() + " enumerate --nodes 4 --root 4", "").exit_code == 2);
    CHECK(run_command(bt_bin() + " enumerate --nodes 2 --format yaml", "").exit_code == 2);
    CHECK(run_command(bt_bin() + " frobnicate", "").exit_code == 2);
    CHECK(run_command(bt_bin(), "").exit_code == 2);
}

TEST_CASE("map applies h line by line") {
    RunResult r = run_command(bt_bin() + " map",
                              "(4 (1 (2 (1) (1)) (1)) (3 (1) (1) (1)))\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(2 (2 (2 (1) (1 (1 (2 (1) (1))) (1)))))\n");

    r = run_command(bt_bin() + " map", "(1)\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(1)\n");
}

TEST_CASE("map twice is the identity on a whole level") {
    std::string level = run_command(bt_bin() + " enumerate --nodes 5", "").out;
    RunResult twice =
        run_command(bt_bin() + " map | " + bt_bin() + " map", level);
    CHECK(twice.exit_code == 0);
    CHECK(twice.out == level);
}

TEST_CASE("map reports bad input with a line number") {
    RunResult r = run_command(bt_bin() + " map", "(1)\n(2 (1)\n");
    CHECK(r.exit_code == 2);
    CHECK(r.out == "(1)\n");
    CHECK(r.err.find("line 2") != std::string::npos);

    r = run_command(bt_bin() + " map", "(3 (1) (1))\n");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("line 1") != std::string::npos);
    CHECK(r.err.find("RootSumMismatch") != std::string::npos);
}

TEST_CASE("map handles labeled trees") {
    RunResult r = run_command(bt_bin() + " map --labeled",
                              "(2:a (1:b (1:c)) (1:d (1:e)))\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(2:e (1:d) (1:c (1:b) (1:a)))\n");
}

TEST_CASE("stats prints one row per tree") {
    RunResult r = run_command(bt_bin() + " stats", "(1 (1))\n(1)\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "leaves\tinternal\troot\trpath\tsub\trsub\n"
          "1\t1\t1\t1\t1\t1\n"
          "1\t0\t1\t0\t0\t0\n");

    r = run_command(bt_bin() + " stats --labeled", "(2:a (1:b) (1:c))\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "leaves\tinternal\troot\trpath\tsub\trsub\n"
          "2\t1\t2\t1\t2\t1\n");
}

TEST_CASE("words prints the six word columns") {
    RunResult r = run_command(bt_bin() + " words",
                              "(2:a (1:b (1:c)) (1:d (1:e)))\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "nodes\tleaves\tinternal\troot\trpath\tsub\trsub\n"
          "abcde\tce\tdba\tce\tda\tbc,de\td,cba\n");
}

TEST_CASE("count builds lexicographic histograms") {
    RunResult r = run_command(bt_bin() + " count --nodes 3 --by root", "");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "root\tcount\n1\t1\n2\t1\n");

    r = run_command(bt_bin() + " count --nodes 3 --by rpath", "");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "rpath\tcount\n1\t1\n2\t1\n");

    r = run_command(bt_bin() + " count --nodes 1 --by leaves", "");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "leaves\tcount\n1\t1\n");

    r = run_command(bt_bin() + " count --nodes 4 --by leaves,root", "");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "leaves\troot\tcount\n1\t1\t1\n2\t1\t1\n2\t2\t3\n3\t3\t1\n");

    r = run_command(bt_bin() + " count --nodes 3 --by root --format json", "");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[{\"root\":1,\"count\":1},{\"root\":2,\"count\":1}]\n");

    CHECK(run_command(bt_bin() + " count --nodes 3 --by depth", "").exit_code == 2);
    CHECK(run_command(bt_bin() + " count --by root", "").exit_code == 2);
}

TEST_CASE("verify runs the suites and reports") {
    RunResult r = run_command(bt_bin() + " verify --max-nodes 4 --oracle-max 3", "");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS core/round-trip") != std::string::npos);
    CHECK(r.out.find("PASS involution/involution") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("all suites passed") != std::string::npos);

    CHECK(run_command(bt_bin() + " verify --max-nodes 2", "").exit_code == 0);
    CHECK(run_command(bt_bin() + " verify --max-nodes 1", "").exit_code == 2);
    CHECK(run_command(bt_bin() + " verify --max-nodes 4 --oracle-max 9", "")
              .exit_code == 2);
}

TEST_CASE("pipelines compose and output is deterministic") {
    std::string pipeline = bt_bin() + " enumerate --nodes 4 | " + bt_bin() +
                           " map | " + bt_bin() + " stats";
    RunResult a = run_command(pipeline, "");
    RunResult b = run_command(pipeline, "");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    // header plus one row per tree of B_4
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 7);

    RunResult e1 = run_command(bt_bin() + " enumerate --nodes 6", "");
    RunResult e2 = run_command(bt_bin() + " enumerate --nodes 6", "");
    CHECK(e1.out == e2.out);
}
