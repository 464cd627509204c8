#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "partition.hpp"

using namespace qtcomb;

TEST_CASE("parse and serialize") {
    CHECK(Partition::parse("3,1").parts() == std::vector<long>({3, 1}));
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse("0").empty());
    CHECK(Partition::parse("2,2,0,0").str() == "2,2");
    CHECK_THROWS_AS(Partition::parse("1,2"), usage_error);
    CHECK_THROWS_AS(Partition::parse("-1"), usage_error);
    CHECK_THROWS_AS(Partition::parse("a,b"), usage_error);
    CHECK(Partition({3, 1}).str() == "3,1");
    CHECK(Partition().str() == "");
}

TEST_CASE("weight and statistics") {
    Partition lam({2, 2, 1});
    CHECK(lam.weight() == 5);
    CHECK(lam.length() == 3);
    CHECK(lam.part(1) == 2);
    CHECK(lam.part(4) == 0);
    CHECK(lam.n_stat() == 0 * 2 + 1 * 2 + 2 * 1);
    CHECK(lam.n_conj_stat() == 1 + 1 + 0);
    // n(lam') via conjugate matches the binomial-sum form
    for (const Partition& p : partitions_up_to_weight(8))
        CHECK(p.conjugate().n_stat() == p.n_conj_stat());
}

TEST_CASE("conjugate") {
    CHECK(Partition().conjugate().empty());
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    for (const Partition& p : partitions_up_to_weight(8))
        CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("containment") {
    CHECK(Partition({2, 2}).contains(Partition()));
    CHECK(Partition({2, 2}).contains(Partition({2, 1})));
    CHECK_FALSE(Partition({2, 2}).contains(Partition({3})));
    auto shapes = partitions_up_to_weight(5);
    for (const Partition& a : shapes)
        for (const Partition& b : shapes)
            if (a.contains(b) && b.contains(a)) CHECK(a == b);
}

TEST_CASE("horizontal strips") {
    CHECK(is_horizontal_strip(Partition({2, 1}), Partition({2, 1})));
    CHECK(is_horizontal_strip(Partition({2, 1}), Partition({1, 1})));
    CHECK_FALSE(is_horizontal_strip(Partition({2, 2}), Partition({1})));

    // strip iff contained with at most one cell per column
    auto shapes = partitions_up_to_weight(6);
    for (const Partition& lam : shapes)
        for (const Partition& mu : shapes) {
            bool strip = is_horizontal_strip(lam, mu);
            bool expect = lam.contains(mu);
            if (expect) {
                Partition lc = lam.conjugate(), mc = mu.conjugate();
                for (int j = 1; j <= lc.length(); ++j)
                    if (lc.part(j) - mc.part(j) > 1) expect = false;
            }
            CHECK(strip == expect);
            if (strip) CHECK(lam.contains(mu));
        }
}

TEST_CASE("cell statistics") {
    auto st = cell_stats(Partition({1}), Cell{1, 1});
    CHECK(st.arm == 0);
    CHECK(st.leg == 0);
    CHECK(st.arm_co == 0);
    CHECK(st.leg_co == 0);

    st = cell_stats(Partition({3, 1}), Cell{1, 1});
    CHECK(st.arm == 2);
    CHECK(st.leg == 1);
    CHECK(st.arm_co == 0);
    CHECK(st.leg_co == 0);

    CHECK_THROWS_AS(cell_stats(Partition({3, 1}), Cell{2, 2}), usage_error);

    // colength sums recover n(lam') and n(lam)
    for (const Partition& lam : partitions_up_to_weight(8)) {
        long arm_co = 0, leg_co = 0;
        for (Cell s : cells(lam)) {
            auto cs = cell_stats(lam, s);
            arm_co += cs.arm_co;
            leg_co += cs.leg_co;
        }
        CHECK(arm_co == lam.n_conj_stat());
        CHECK(leg_co == lam.n_stat());
    }
}

TEST_CASE("skew cells") {
    auto sk = skew_cells(Partition({2, 1}), Partition({1}));
    CHECK(sk.size() == 2);
    CHECK(sk[0].row == 1);
    CHECK(sk[0].col == 2);
    CHECK(sk[1].row == 2);
    CHECK(sk[1].col == 1);
    CHECK_THROWS_AS(skew_cells(Partition({1}), Partition({2})), usage_error);
    CHECK(skew_cells(Partition({2, 1}), Partition({2, 1})).empty());
}

TEST_CASE("interlacing predecessors") {
    auto none = interlacing_predecessors(Partition());
    REQUIRE(none.size() == 1);
    CHECK(none[0].empty());

    auto preds = interlacing_predecessors(Partition({2, 1}));
    std::set<std::string> got;
    for (const Partition& p : preds) got.insert(p.str());
    CHECK(got == std::set<std::string>({"2,1", "2", "1,1", "1"}));
    CHECK(preds.size() == got.size()); // duplicate-free

    for (long k = 0; k <= 6; ++k)
        CHECK(interlacing_predecessors(Partition({k})).size() == static_cast<size_t>(k + 1));
}

TEST_CASE("interlacing predecessors agree with the strip predicate") {
    for (const Partition& lam : partitions_up_to_weight(6)) {
        std::set<std::string> expect;
        for (const Partition& mu : subpartitions(lam))
            if (is_horizontal_strip(lam, mu)) expect.insert(mu.str());
        std::set<std::string> got;
        for (const Partition& nu : interlacing_predecessors(lam)) got.insert(nu.str());
        CHECK(got == expect);
    }
}

TEST_CASE("interlacing predecessors with a lower cap") {
    for (const Partition& lam : partitions_up_to_weight(5)) {
        for (const Partition& cap : subpartitions(lam)) {
            std::set<std::string> expect;
            for (const Partition& nu : subpartitions(lam))
                if (is_horizontal_strip(lam, nu) && is_horizontal_strip(nu, cap))
                    expect.insert(nu.str());
            std::set<std::string> got;
            for (const Partition& nu : interlacing_predecessors(lam, cap)) got.insert(nu.str());
            CHECK(got == expect);
        }
    }
}

TEST_CASE("subpartitions enumerate the containment order") {
    for (const Partition& lam : partitions_up_to_weight(6)) {
        std::set<std::string> expect;
        for (const Partition& mu : partitions_up_to_weight(lam.weight()))
            if (lam.contains(mu)) expect.insert(mu.str());
        std::set<std::string> got;
        auto subs = subpartitions(lam);
        for (const Partition& mu : subs) got.insert(mu.str());
        CHECK(got == expect);
        CHECK(subs.size() == got.size());
    }
}

TEST_CASE("partition enumeration by weight") {
    auto all = partitions_up_to_weight(4);
    // 1 + 1 + 2 + 3 + 5 partitions of 0..4
    CHECK(all.size() == 12);
    std::set<std::string> seen;
    for (const Partition& p : all) {
        CHECK(p.weight() <= 4);
        seen.insert(p.str().empty() ? "-" : p.str());
    }
    CHECK(seen.size() == all.size());
}
