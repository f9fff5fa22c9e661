#pragma once

#include "bt/enumerate.hpp"

#include <string>
#include <vector>

namespace bt {

struct SuiteResult {
    std::string name;
    long long cases = 0;
    bool passed = true;
    std::string counterexample; // empty when passed
};

struct VerifyOptions {
    int max_nodes = 8;
    int oracle_max = 5;
};

// Exhaustive property suites over B_1..B_max. Each stops at the first
// counterexample. The cache is shared so levels are built once per run.

SuiteResult check_validate_closure(LevelCache& cache, int max_nodes);
SuiteResult check_round_trip(LevelCache& cache, int max_nodes);
SuiteResult check_lemma_lg_sum(LevelCache& cache, int max_total);     // t+(u/v) = (t+u)/v
SuiteResult check_lemma_lambda_gamma(LevelCache& cache, int max_total);
SuiteResult check_lemma_unit_shifts(LevelCache& cache, int max_nodes);
SuiteResult check_decompose_inverses(LevelCache& cache, int max_nodes);
SuiteResult check_composition_identities(LevelCache& cache, int max_total);
SuiteResult check_lambda_bijection(LevelCache& cache, int max_nodes);
SuiteResult check_involution(LevelCache& cache, int max_nodes);
SuiteResult check_split_independence(LevelCache& cache, int max_nodes);
SuiteResult check_h_dual(LevelCache& cache, int max_nodes);
SuiteResult check_h_bijection(LevelCache& cache, int max_nodes);
SuiteResult check_indecomposable_duality(LevelCache& cache, int max_nodes);
SuiteResult check_stats_swap(LevelCache& cache, int max_nodes);
SuiteResult check_equidistribution(LevelCache& cache, int max_nodes);
SuiteResult check_stat_composition(LevelCache& cache, int max_nodes);
SuiteResult check_words_swap(LevelCache& cache, int max_nodes);
SuiteResult check_preorder_reversal(LevelCache& cache, int max_nodes);
SuiteResult check_labeled_involution(LevelCache& cache, int max_nodes);
SuiteResult check_forget_commutes(LevelCache& cache, int max_nodes);
SuiteResult check_greedy_root_recursion(LevelCache& cache, int max_nodes);
SuiteResult check_scalar_shadows(LevelCache& cache, int max_nodes);
SuiteResult check_oracle_equivalence(LevelCache& cache, int oracle_max);
SuiteResult check_no_duplicates(LevelCache& cache, int max_nodes);
SuiteResult check_lambda_partition(LevelCache& cache, int max_nodes);
SuiteResult check_h_closure(LevelCache& cache, int max_nodes);

/// Every suite above, run with options.max_nodes (the oracle suite with
/// options.oracle_max), in a fixed order.
std::vector<SuiteResult> run_all_suites(const VerifyOptions& options);

} // namespace bt
