#include "bt/stats.hpp"
#include "bt/enumerate.hpp"
#include "bt/involution.hpp"

#include <doctest.h>

using namespace bt;

TEST_CASE("stat tuples of the worked examples") {
    CHECK(stats(Tree()) == StatTuple{1, 0, 1, 0, 0, 0});
    CHECK(stats(parse("(1 (1))")) == StatTuple{1, 1, 1, 1, 1, 1});
    CHECK(stats(parse("(4 (1 (2 (1) (1)) (1)) (3 (1) (1) (1)))")) ==
          StatTuple{6, 4, 4, 2, 2, 1});
    CHECK(stats(parse("(2 (2 (2 (1) (1 (1 (2 (1) (1))) (1)))))")) ==
          StatTuple{4, 6, 2, 4, 1, 2});
    CHECK(swapped(StatTuple{6, 4, 4, 2, 2, 1}) == StatTuple{4, 6, 2, 4, 1, 2});
}

TEST_CASE("structural invariants of the tuple") {
    LevelCache cache;
    for (int n = 1; n <= 6; ++n)
        for (const Tree& t : cache.level(n)) {
            StatTuple s = stats(t);
            CHECK(s.leaves + s.internal == n);
            CHECK(s.root >= 1);
            CHECK(s.root <= s.leaves);
            if (!t.is_leaf()) {
                CHECK(s.rpath <= s.internal);
                CHECK(s.sub == static_cast<int>(sum_factors(t).size()));
                CHECK(s.rsub == static_cast<int>(dual_factors(t).size()));
            }
        }
}

TEST_CASE("h swaps the tuple") {
    LevelCache cache;
    for (int n = 2; n <= 7; ++n)
        for (const Tree& t : cache.level(n))
            CHECK(stats(h(t)) == swapped(stats(t)));
}

TEST_CASE("distribution tables") {
    LevelCache cache;
    auto level3 = cache.level(3);
    std::vector<Tree> b3(level3.begin(), level3.end());

    DistTable by_root = dist_table(b3, {Stat::Root});
    REQUIRE(by_root.size() == 2);
    CHECK(by_root.at({1}) == 1);
    CHECK(by_root.at({2}) == 1);

    DistTable by_rpath = dist_table(b3, {Stat::Rpath});
    REQUIRE(by_rpath.size() == 2);
    CHECK(by_rpath.at({1}) == 1);
    CHECK(by_rpath.at({2}) == 1);

    std::vector<Tree> b1{Tree()};
    DistTable one = dist_table(b1, {Stat::Leaves, Stat::Sub});
    REQUIRE(one.size() == 1);
    CHECK(one.at({1, 0}) == 1);

    CHECK(render_tsv(by_root, {Stat::Root}) == "root\tcount\n1\t1\n2\t1\n");
    CHECK(render_rows(by_root) == render_rows(by_rpath));
}

TEST_CASE("stat names round trip") {
    for (Stat s : kAllStats) {
        auto parsed = stat_from_name(to_string(s));
        REQUIRE(parsed);
        CHECK(*parsed == s);
    }
    CHECK(!stat_from_name("depth"));
    CHECK(!stat_from_name(""));
}
