// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Usage: acceptance <path-to-bt-binary>

#include "bt/enumerate.hpp"
#include "bt/involution.hpp"
#include "bt/labeled.hpp"
#include "bt/stats.hpp"
#include "bt/verify.hpp"

#include "subprocess.hpp"

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

namespace {

int failures = 0;

void report(int criterion, const std::string& description, bool passed,
            const std::string& detail = "") {
    std::cout << (passed ? "PASS" : "FAIL") << " criterion " << criterion << ": "
              << description;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << '\n';
    if (!passed) ++failures;
}

bool suite_ok(const bt::SuiteResult& r, std::string& detail) {
    detail = std::to_string(r.cases) + " cases";
    if (!r.passed) detail += "; counterexample: " + r.counterexample;
    return r.passed;
}

std::string join_word(const std::vector<std::string>& word) {
    std::string out;
    for (const std::string& letter : word) out += letter;
    return out;
}

std::string render_tuple(const std::vector<std::vector<std::string>>& words) {
    std::string out = "(";
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += ',';
        out += join_word(words[i]);
    }
    out += ')';
    return out;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-bt-binary>\n";
        return 1;
    }
    const std::string bt_bin = shell_quote(argv[1]);
    bt::LevelCache cache;
    std::string detail;

    // 1. h is an involution, exhaustively for n <= 10, within 30 s.
    {
        auto start = std::chrono::steady_clock::now();
        bt::SuiteResult r = bt::check_involution(cache, 10);
        double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        bool ok = suite_ok(r, detail) && seconds < 30.0;
        report(1, "h(h(t)) = t for all t in B_1..B_10", ok,
               detail + ", " + std::to_string(seconds) + " s");
    }

    // 2. Byte-exact map of the worked example through the CLI.
    {
        const std::string input = "(4 (1 (2 (1) (1)) (1)) (3 (1) (1) (1)))\n";
        const std::string expected = "(2 (2 (2 (1) (1 (1 (2 (1) (1))) (1)))))\n";
        RunResult r = run_command(bt_bin + " map", input);
        bool ok = r.exit_code == 0 && r.out == expected;
        report(2, "map reproduces the worked example byte-exactly", ok,
               ok ? "" : "got: " + r.out);
    }

    // 3. stats(h(t)) is the swapped tuple, n <= 10.
    {
        bt::SuiteResult r = bt::check_stats_swap(cache, 10);
        report(3, "h swaps (leaves,internal,root,rpath,sub,rsub) for n <= 10",
               suite_ok(r, detail), detail);
    }

    // 4. Equidistribution tables byte-identical, n <= 9.
    {
        bt::SuiteResult r = bt::check_equidistribution(cache, 9);
        report(4, "(leaves,root,sub) and (internal,rpath,rsub) tables agree for n <= 9",
               suite_ok(r, detail), detail);
    }

    // 5. The four lemmas, exhaustively with total node count <= 9.
    {
        bt::SuiteResult lg = bt::check_lemma_lg_sum(cache, 9);
        bt::SuiteResult slide = bt::check_lemma_lambda_gamma(cache, 9);
        bt::SuiteResult shifts = bt::check_lemma_unit_shifts(cache, 9);
        bt::SuiteResult dual = bt::check_h_dual(cache, 9);
        long long cases = lg.cases + slide.cases + shifts.cases + dual.cases;
        bool ok = lg.passed && slide.passed && shifts.passed && dual.passed;
        detail = std::to_string(cases) + " cases";
        for (const bt::SuiteResult* r : {&lg, &slide, &shifts, &dual})
            if (!r->passed) detail += "; " + r->name + ": " + r->counterexample;
        report(5, "lemma suite (associativity, slides, unit shifts, duality)", ok,
               detail);
    }

    // 6. Oracle equivalence for n <= 6, with the known counts.
    {
        bt::SuiteResult r = bt::check_oracle_equivalence(cache, 6);
        bool ok = suite_ok(r, detail);
        std::vector<long long> expected{1, 1, 2, 6, 22, 91};
        if (bt::count_levels(6) != expected) {
            ok = false;
            detail += "; level counts diverge";
        }
        if (cache.level(3).size() != 2) {
            ok = false;
            detail += "; |B_3| != 2";
        }
        report(6, "generator matches the brute-force oracle for n <= 6", ok, detail);
    }

    // 7. The lambda bijection partitions the indecomposables, n <= 9.
    {
        bt::SuiteResult r = bt::check_lambda_bijection(cache, 9);
        report(7, "lambda images are distinct and exhaust the indecomposables, n <= 9",
               suite_ok(r, detail), detail);
    }

    // 8. Word-statistics swap for n <= 8, plus the worked labeled example.
    {
        bt::SuiteResult r = bt::check_words_swap(cache, 8);
        bool ok = suite_ok(r, detail);
        bt::WordStats w =
            bt::words(bt::parse_labeled("(2:a (1:b (1:c)) (1:d (1:e)))"));
        bool example_ok = join_word(w.leaves) == "ce" &&
                          join_word(w.internal) == "dba" &&
                          join_word(w.root) == "ce" && join_word(w.rpath) == "da" &&
                          render_tuple(w.sub) == "(bc,de)" &&
                          render_tuple(w.rsub) == "(d,cba)";
        if (!example_ok) detail += "; labeled example words diverge";
        report(8, "labeled h swaps the six word statistics, n <= 8",
               ok && example_ok, detail);
    }

    // 9. Preorder reversal under labeled h, n <= 8.
    {
        bt::SuiteResult r = bt::check_preorder_reversal(cache, 8);
        report(9, "nodes(labeled_h(t)) = reverse(nodes(t)), n <= 8",
               suite_ok(r, detail), detail);
    }

    // 10. Round-trip for n <= 9 and byte-deterministic CLI runs.
    {
        bt::SuiteResult r = bt::check_round_trip(cache, 9);
        bool ok = suite_ok(r, detail);
        RunResult e1 = run_command(bt_bin + " enumerate --nodes 7", "");
        RunResult e2 = run_command(bt_bin + " enumerate --nodes 7", "");
        RunResult c1 = run_command(bt_bin + " count --nodes 6 --by leaves,root,sub", "");
        RunResult c2 = run_command(bt_bin + " count --nodes 6 --by leaves,root,sub", "");
        RunResult m1 = run_command(bt_bin + " map", e1.out);
        RunResult m2 = run_command(bt_bin + " map", e2.out);
        bool deterministic = e1.exit_code == 0 && e1.out == e2.out &&
                             c1.exit_code == 0 && c1.out == c2.out &&
                             m1.exit_code == 0 && m1.out == m2.out &&
                             !e1.out.empty() && !c1.out.empty();
        if (!deterministic) detail += "; CLI output not byte-stable";
        report(10, "parse-print round-trip (n <= 9) and deterministic CLI bytes",
               ok && deterministic, detail);
    }

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    return 1;
}
