#include "bt/verify.hpp"

#include "bt/involution.hpp"
#include "bt/labeled.hpp"
#include "bt/stats.hpp"

#include <algorithm>
#include <set>
#include <variant>

namespace bt {

namespace {

void fail(SuiteResult& r, std::string counterexample) {
    r.passed = false;
    r.counterexample = std::move(counterexample);
}

std::set<std::string> print_set(std::span<const Tree> family) {
    std::set<std::string> out;
    for (const Tree& t : family) out.insert(print(t));
    return out;
}

int node_count(const Tree& t) {
    StatTuple s = stats(t);
    return s.leaves + s.internal;
}

// Recursive ROOT characterization over the labeled sum decomposition:
// keep-last-i through lambda, concatenation through sums.
std::vector<std::string> recursive_root(const LabeledTree& t) {
    LabeledSumView view = decompose_sum(t);
    if (std::holds_alternative<LabeledLeafCase>(view)) return {t.id()};
    if (auto* ind = std::get_if<LabeledIndecomposableCase>(&view)) {
        std::vector<std::string> inner = recursive_root(ind->body);
        std::vector<std::string> out(inner.end() - ind->index, inner.end());
        return out;
    }
    auto& sum = std::get<LabeledSumCase>(view);
    std::vector<std::string> out = recursive_root(sum.first);
    std::vector<std::string> right = recursive_root(sum.rest);
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

} // namespace

SuiteResult check_validate_closure(LevelCache& cache, int max_nodes) {
    SuiteResult r{"core/validate-closure"};
    for (int n = 1; n <= max_nodes && r.passed; ++n) {
        for (const Tree& t : cache.level(n)) {
            ++r.cases;
            if (find_violation(to_raw(t))) {
                fail(r, "generated tree rejected: " + print(t));
                break;
            }
        }
    }
    return r;
}

SuiteResult check_round_trip(LevelCache& cache, int max_nodes) {
    SuiteResult r{"core/round-trip"};
    for (int n = 1; n <= max_nodes && r.passed; ++n) {
        for (const Tree& t : cache.level(n)) {
            ++r.cases;
            if (parse(print(t)) != t) {
                fail(r, "t=" + print(t));
                break;
            }
        }
    }
    return r;
}

SuiteResult check_lemma_lg_sum(LevelCache& cache, int max_total) {
    SuiteResult r{"core/lemma-sum-dual-assoc"};
    for (int a = 2; a + 4 <= max_total && r.passed; ++a)
        for (int b = 2; a + b + 2 <= max_total && r.passed; ++b)
            for (int c = 2; a + b + c <= max_total && r.passed; ++c)
                for (const Tree& t : cache.level(a)) {
                    for (const Tree& u : cache.level(b)) {
                        for (const Tree& v : cache.level(c)) {
                            ++r.cases;
                            if (oplus(t, obslash(u, v)) != obslash(oplus(t, u), v)) {
                                fail(r, "t=" + print(t) + " u=" + print(u) +
                                            " v=" + print(v));
                                break;
                            }
                        }
                        if (!r.passed) break;
                    }
                    if (!r.passed) break;
                }
    return r;
}

SuiteResult check_lemma_lambda_gamma(LevelCache& cache, int max_total) {
    SuiteResult r{"core/lemma-lambda-gamma-slide"};
    for (int a = 2; a + 2 <= max_total && r.passed; ++a)
        for (int b = 2; a + b <= max_total && r.passed; ++b)
            for (const Tree& u : cache.level(a)) {
                for (const Tree& v : cache.level(b)) {
                    for (int i = 1; i <= u.label(); ++i) {
                        ++r.cases;
                        if (lambda(i, obslash(u, v)) != obslash(lambda(i, u), v)) {
                            fail(r, "lambda slide: u=" + print(u) + " v=" + print(v) +
                                        " i=" + std::to_string(i));
                            break;
                        }
                    }
                    for (int i = 1; r.passed && i <= rpath_length(v); ++i) {
                        ++r.cases;
                        if (gamma(i, oplus(u, v)) != oplus(u, gamma(i, v))) {
                            fail(r, "gamma slide: u=" + print(u) + " v=" + print(v) +
                                        " i=" + std::to_string(i));
                            break;
                        }
                    }
                    if (!r.passed) break;
                }
                if (!r.passed) break;
            }
    return r;
}

SuiteResult check_lemma_unit_shifts(LevelCache& cache, int max_nodes) {
    SuiteResult r{"core/lemma-unit-shifts"};
    Tree edge = lambda(1, Tree());
    for (int n = 2; n <= max_nodes && r.passed; ++n) {
        for (const Tree& t : cache.level(n)) {
            ++r.cases;
            if (gamma(1, t) != oplus(t, edge)) {
                fail(r, "gamma_1 != t+edge: t=" + print(t));
                break;
            }
            if (lambda(1, t) != obslash(edge, t)) {
                fail(r, "lambda_1 != edge/t: t=" + print(t));
                break;
            }
            bool bad = false;
            for (int i = 1; i <= rpath_length(t) && !bad; ++i)
                for (int j = 1; j <= t.label() && !bad; ++j) {
                    ++r.cases;
                    if (gamma(i + 1, lambda(j, t)) != lambda(j + 1, gamma(i, t))) {
                        fail(r, "shift swap: t=" + print(t) + " i=" +
                                    std::to_string(i) + " j=" + std::to_string(j));
                        bad = true;
                    }
                }
            if (bad) break;
        }
    }
    return r;
}

SuiteResult check_decompose_inverses(LevelCache& cache, int max_nodes) {
    SuiteResult r{"core/decompose-inverses"};
    for (int n = 1; n <= max_nodes && r.passed; ++n) {
        for (const Tree& t : cache.level(n)) {
            ++r.cases;
            SumView sv = decompose_sum(t);
            if (auto* ind = std::get_if<IndecomposableCase>(&sv)) {
                if (t.children().size() != 1 || lambda(ind->index, ind->body) != t) {
                    fail(r, "sum view: t=" + print(t));
                    break;
                }
            } else if (auto* sum = std::get_if<SumCase>(&sv)) {
                if (sum->first.children().size() != 1 ||
                    oplus(sum->first, sum->rest) != t) {
                    fail(r, "sum view: t=" + print(t));
                    break;
                }
            } else if (!t.is_leaf()) {
                fail(r, "leaf view on non-leaf: t=" + print(t));
                break;
            }
            DualView dv = decompose_dual(t);
            if (auto* g = std::get_if<GammaCase>(&dv)) {
                if (g->index != rpath_length(t) || gamma(g->index, g->body) != t) {
                    fail(r, "dual view: t=" + print(t));
                    break;
                }
            } else if (auto* ds = std::get_if<DualSumCase>(&dv)) {
                bool lower_indec =
                    std::holds_alternative<GammaCase>(decompose_dual(ds->lower));
                if (!lower_indec || obslash(ds->upper, ds->lower) != t) {
                    fail(r, "dual view: t=" + print(t));
                    break;
                }
            } else if (!t.is_leaf()) {
                fail(r, "leaf view on non-leaf: t=" + print(t));
                break;
            }
            if (!t.is_leaf()) {
                StatTuple s = stats(t);
                std::vector<Tree> sf = sum_factors(t);
                std::vector<Tree> df = dual_factors(t);
                Tree sfold = sf[0];
                for (std::size_t k = 1; k < sf.size(); ++k) sfold = oplus(sfold, sf[k]);
                Tree dfold = df[0];
                for (std::size_t k = 1; k < df.size(); ++k)
                    dfold = obslash(dfold, df[k]);
                if (static_cast<int>(sf.size()) != s.sub ||
                    static_cast<int>(df.size()) != s.rsub || sfold != t || dfold != t) {
                    fail(r, "factors: t=" + print(t));
                    break;
                }
            }
        }
    }
    return r;
}

SuiteResult check_composition_identities(LevelCache& cache, int max_total) {
    SuiteResult r{"core/composition-identities"};
    for (int a = 2; a + 2 <= max_total && r.passed; ++a)
        for (int b = 2; a + b <= max_total && r.passed; ++b)
            for (const Tree& u : cache.level(a)) {
                for (const Tree& v : cache.level(b)) {
                    ++r.cases;
                    Tree sum = oplus(u, v);
                    Tree dual = obslash(u, v);
                    bool ok = root_label(sum) == root_label(u) + root_label(v) &&
                              rpath_length(sum) == rpath_length(v) &&
                              root_label(dual) == root_label(u) &&
                              rpath_length(dual) == rpath_length(u) + rpath_length(v);
                    if (!ok) {
                        fail(r, "u=" + print(u) + " v=" + print(v));
                        break;
                    }
                }
                if (!r.passed) break;
            }
    return r;
}

SuiteResult check_lambda_bijection(LevelCache& cache, int max_nodes) {
    SuiteResult r{"core/lambda-bijection"};
    for (int n = 2; n <= max_nodes && r.passed; ++n) {
        std::set<std::string> images;
        for (const Tree& t : cache.level(n - 1)) {
            for (int i = 1; i <= t.label(); ++i) {
                ++r.cases;
                std::string s = print(lambda(i, t));
                if (!images.insert(s).second) {
                    fail(r, "duplicate image " + s);
                    break;
                }
            }
            if (!r.passed) break;
        }
        if (r.passed && images != print_set(cache.indecomposables(n)))
            fail(r, "images do not exhaust the indecomposables at n=" +
                        std::to_string(n));
    }
    return r;
}

SuiteResult check_involution(LevelCache& cache, int max_nodes) {
    SuiteResult r{"involution/involution"};
    for (int n = 1; n <= max_nodes && r.passed; ++n) {
        for (const Tree& t : cache.level(n)) {
            ++r.cases;
            Tree ht = h(t);
            if (node_count(ht) != n || h(ht) != t) {
                fail(r, "t=" + print(t));
                break;
            }
        }
    }
    return r;
}

SuiteResult check_split_independence(LevelCache& cache, int max_nodes) {
    SuiteResult r{"involution/split-independence"};
    for (int n = 3; n <= max_nodes && r.passed; ++n) {
        for (const Tree& t : cache.level(n)) {
            if (t.children().size() < 2) continue;
            Tree expected = h(t);
            std::vector<Tree> factors = sum_factors(t);
            bool bad = false;
            for (std::size_t g = 1; g < factors.size() && !bad; ++g) {
                ++r.cases;
                Tree u = factors[0];
                for (std::size_t k = 1; k < g; ++k) u = oplus(u, factors[k]);
                Tree v = factors[g];
                for (std::size_t k = g + 1; k < factors.size(); ++k)
                    v = oplus(v, factors[k]);
                if (obslash(h(v), h(u)) != expected) {
                    fail(r, "t=" + print(t) + " gap=" + std::to_string(g));
                    bad = true;
                }
            }
            if (bad) break;
        }
    }
    return r;
}

SuiteResult check_h_dual(LevelCache& cache, int max_nodes) {
    SuiteResult r{"involution/dual-recursion"};
    for (int n = 1; n <= max_nodes && r.passed; ++n) {
        for (const Tree& t : cache.level(n)) {
            ++r.cases;
            HDualCheck c = h_dual_check(t);
            if (!c.base || !c.gamma_commutes || !c.dual_sum_swaps) {
                fail(r, "t=" + print(t));
                break;
            }
        }
    }
    // The composition form of the third clause, over all operand pairs.
    for (int a = 2; a + 2 <= max_nodes && r.passed; ++a)
        for (int b = 2; a + b <= max_nodes && r.passed; ++b)
            for (const Tree& u : cache.level(a)) {
                for (const Tree& v : cache.level(b)) {
                    ++r.cases;
                    if (h(obslash(u, v)) != oplus(h(v), h(u))) {
                        fail(r, "u=" + print(u) + " v=" + print(v));
                        break;
                    }
                }
                if (!r.passed) break;
            }
    return r;
}

SuiteResult check_h_bijection(LevelCache& cache, int max_nodes) {
    SuiteResult r{"involution/level-bijection"};
    for (int n = 1; n <= max_nodes && r.passed; ++n) {
        std::vector<std::string> domain, image;
        for (const Tree& t : cache.level(n)) {
            ++r.cases;
            domain.push_back(print(t));
            image.push_back(print(h(t)));
        }
        std::sort(domain.begin(), domain.end());
        std::sort(image.begin(), image.end());
        if (domain != image)
            fail(r, "image multiset differs at n=" + std::to_string(n));
    }
    return r;
}

SuiteResult check_indecomposable_duality(LevelCache& cache, int max_nodes) {
    SuiteResult r{"involution/indecomposable-duality"};
    for (int n = 2; n <= max_nodes && r.passed; ++n) {
        for (const Tree& t : cache.level(n)) {
            ++r.cases;
            bool indec = t.children().size() == 1;
            bool image_dual_indec =
                std::holds_alternative<GammaCase>(decompose_dual(h(t)));
            if (indec != image_dual_indec) {
                fail(r, "t=" + print(t));
                break;
            }
        }
    }
    return r;
}

SuiteResult check_stats_swap(LevelCache& cache, int max_nodes) {
    SuiteResult r{"stats/swap-theorem"};
    for (int n = 2; n <= max_nodes && r.passed; ++n) {
        for (const Tree& t : cache.level(n)) {
            ++r.cases;
            if (stats(h(t)) != swapped(stats(t))) {
                fail(r, "t=" + print(t));
                break;
            }
        }
    }
    return r;
}

SuiteResult check_equidistribution(LevelCache& cache, int max_nodes) {
    SuiteResult r{"stats/equidistribution"};
    for (int n = 1; n <= max_nodes && r.passed; ++n) {
        auto level = cache.level(n);
        std::vector<Tree> family(level.begin(), level.end());
        ++r.cases;
        std::string lhs = render_rows(
            dist_table(family, {Stat::Leaves, Stat::Root, Stat::Sub}));
        std::string rhs = render_rows(
            dist_table(family, {Stat::Internal, Stat::Rpath, Stat::Rsub}));
        if (lhs != rhs)
            fail(r, "tables differ at n=" + std::to_string(n));
    }
    return r;
}

SuiteResult check_stat_composition(LevelCache& cache, int max_nodes) {
    SuiteResult r{"stats/composition-consistency"};
    for (int n = 1; n + 1 <= max_nodes && r.passed; ++n) {
        for (const Tree& t : cache.level(n)) {
            bool bad = false;
            for (int i = 1; i <= t.label() && !bad; ++i) {
                ++r.cases;
                StatTuple s = stats(lambda(i, t));
                if (s.root != i || s.rpath != rpath_length(t) + 1) {
                    fail(r, "lambda: t=" + print(t) + " i=" + std::to_string(i));
                    bad = true;
                }
            }
            int k = t.is_leaf() ? 1 : rpath_length(t);
            for (int i = 1; i <= k && !bad; ++i) {
                ++r.cases;
                if (stats(gamma(i, t)).rpath != i) {
                    fail(r, "gamma: t=" + print(t) + " i=" + std::to_string(i));
                    bad = true;
                }
            }
            if (bad) break;
        }
    }
    return r;
}

SuiteResult check_words_swap(LevelCache& cache, int max_nodes) {
    SuiteResult r{"labeled/words-swap-theorem"};
    for (int n = 2; n <= max_nodes && r.passed; ++n) {
        for (const Tree& t : cache.level(n)) {
            ++r.cases;
            LabeledTree lt = with_canonical_ids(t);
            WordStats wt = words(lt);
            WordStats wh = words(labeled_h(lt));
            bool ok = wh.leaves == wt.internal && wh.internal == wt.leaves &&
                      wh.root == wt.rpath && wh.rpath == wt.root &&
                      wh.sub == wt.rsub && wh.rsub == wt.sub;
            if (!ok) {
                fail(r, "t=" + print(t));
                break;
            }
        }
    }
    return r;
}

SuiteResult check_preorder_reversal(LevelCache& cache, int max_nodes) {
    SuiteResult r{"labeled/preorder-reversal"};
    for (int n = 1; n <= max_nodes && r.passed; ++n) {
        for (const Tree& t : cache.level(n)) {
            ++r.cases;
            LabeledTree lt = with_canonical_ids(t);
            std::vector<std::string> forward = words(lt).nodes;
            std::reverse(forward.begin(), forward.end());
            if (words(labeled_h(lt)).nodes != forward) {
                fail(r, "t=" + print(t));
                break;
            }
        }
    }
    return r;
}

SuiteResult check_labeled_involution(LevelCache& cache, int max_nodes) {
    SuiteResult r{"labeled/involution-with-ids"};
    for (int n = 1; n <= max_nodes && r.passed; ++n) {
        for (const Tree& t : cache.level(n)) {
            ++r.cases;
            LabeledTree lt = with_canonical_ids(t);
            if (labeled_h(labeled_h(lt)) != lt) {
                fail(r, "t=" + print(t));
                break;
            }
        }
    }
    return r;
}

SuiteResult check_forget_commutes(LevelCache& cache, int max_nodes) {
    SuiteResult r{"labeled/forget-commutes"};
    for (int n = 1; n <= max_nodes && r.passed; ++n) {
        for (const Tree& t : cache.level(n)) {
            ++r.cases;
            if (forget(labeled_h(with_canonical_ids(t))) != h(t)) {
                fail(r, "t=" + print(t));
                break;
            }
        }
    }
    return r;
}

SuiteResult check_greedy_root_recursion(LevelCache& cache, int max_nodes) {
    SuiteResult r{"labeled/greedy-root-recursion"};
    for (int n = 1; n <= max_nodes && r.passed; ++n) {
        for (const Tree& t : cache.level(n)) {
            ++r.cases;
            LabeledTree lt = with_canonical_ids(t);
            if (greedy_root(lt) != recursive_root(lt)) {
                fail(r, "t=" + print(t));
                break;
            }
        }
    }
    return r;
}

SuiteResult check_scalar_shadows(LevelCache& cache, int max_nodes) {
    SuiteResult r{"labeled/scalar-shadows"};
    for (int n = 2; n <= max_nodes && r.passed; ++n) {
        for (const Tree& t : cache.level(n)) {
            ++r.cases;
            StatTuple s = stats(t);
            WordStats w = words(with_canonical_ids(t));
            bool ok = static_cast<int>(w.leaves.size()) == s.leaves &&
                      static_cast<int>(w.internal.size()) == s.internal &&
                      static_cast<int>(w.root.size()) == s.root &&
                      static_cast<int>(w.rpath.size()) == s.rpath &&
                      static_cast<int>(w.sub.size()) == s.sub &&
                      static_cast<int>(w.rsub.size()) == s.rsub &&
                      static_cast<int>(w.nodes.size()) == n;
            if (!ok) {
                fail(r, "t=" + print(t));
                break;
            }
        }
    }
    return r;
}

SuiteResult check_oracle_equivalence(LevelCache& cache, int oracle_max) {
    SuiteResult r{"enum/oracle-equivalence"};
    for (int n = 1; n <= oracle_max && r.passed; ++n) {
        ++r.cases;
        std::set<std::string> generated = print_set(cache.level(n));
        std::vector<Tree> brute = oracle_enumerate(n);
        std::set<std::string> filtered = print_set(brute);
        if (generated != filtered || brute.size() != filtered.size() ||
            generated.size() != cache.level(n).size())
            fail(r, "families differ at n=" + std::to_string(n));
    }
    return r;
}

SuiteResult check_no_duplicates(LevelCache& cache, int max_nodes) {
    SuiteResult r{"enum/no-duplicates"};
    for (int n = 1; n <= max_nodes && r.passed; ++n) {
        ++r.cases;
        if (print_set(cache.level(n)).size() != cache.level(n).size())
            fail(r, "duplicate emission at n=" + std::to_string(n));
    }
    return r;
}

SuiteResult check_lambda_partition(LevelCache& cache, int max_nodes) {
    SuiteResult r{"enum/lambda-partition"};
    for (int n = 2; n <= max_nodes && r.passed; ++n) {
        ++r.cases;
        long long expected = 0;
        for (const Tree& t : cache.level(n - 1)) expected += t.label();
        auto level = cache.level(n);
        auto indec = cache.indecomposables(n);
        if (static_cast<long long>(indec.size()) != expected) {
            fail(r, "indecomposable count at n=" + std::to_string(n));
            break;
        }
        for (std::size_t k = 0; k < level.size(); ++k) {
            bool should_be_indec = k < indec.size();
            if ((level[k].children().size() == 1) != should_be_indec) {
                fail(r, "partition order at n=" + std::to_string(n));
                break;
            }
        }
    }
    return r;
}

SuiteResult check_h_closure(LevelCache& cache, int max_nodes) {
    SuiteResult r = check_h_bijection(cache, max_nodes);
    r.name = "enum/h-closure";
    return r;
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& options) {
    LevelCache cache;
    int n = options.max_nodes;
    std::vector<SuiteResult> results;
    results.push_back(check_validate_closure(cache, n));
    results.push_back(check_round_trip(cache, n));
    results.push_back(check_lemma_lg_sum(cache, n));
    results.push_back(check_lemma_lambda_gamma(cache, n));
    results.push_back(check_lemma_unit_shifts(cache, n));
    results.push_back(check_decompose_inverses(cache, n));
    results.push_back(check_composition_identities(cache, n));
    results.push_back(check_lambda_bijection(cache, n));
    results.push_back(check_involution(cache, n));
    results.push_back(check_split_independence(cache, n));
    results.push_back(check_h_dual(cache, n));
    results.push_back(check_h_bijection(cache, n));
    results.push_back(check_indecomposable_duality(cache, n));
    results.push_back(check_stats_swap(cache, n));
    results.push_back(check_equidistribution(cache, n));
    results.push_back(check_stat_composition(cache, n));
    results.push_back(check_words_swap(cache, n));
    results.push_back(check_preorder_reversal(cache, n));
    results.push_back(check_labeled_involution(cache, n));
    results.push_back(check_forget_commutes(cache, n));
    results.push_back(check_greedy_root_recursion(cache, n));
    results.push_back(check_scalar_shadows(cache, n));
    results.push_back(check_oracle_equivalence(cache, options.oracle_max));
    results.push_back(check_no_duplicates(cache, n));
    results.push_back(check_lambda_partition(cache, n));
    results.push_back(check_h_closure(cache, n));
    return results;
}

} // namespace bt
