#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spindec/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

using namespace spindec;

namespace {

Partition P(std::initializer_list<std::int64_t> parts) {
    return Partition(std::vector<std::int64_t>(parts));
}

// Independent oracle for regularization: fill the ladders greedily from the
// top.  Collect how many boxes sit on each ladder (ladder index i + j - 1 for
// a box at (i, j)), then re-place every ladder's boxes at the smallest row
// indices available on that ladder, i.e. rows 1..count.  Row r of the result
// is the number of ladders holding at least r boxes.
Partition regularize_oracle(const Partition& lam) {
    std::map<std::int64_t, std::int64_t> ladder_count;
    const auto& parts = lam.parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::int64_t j = 1; j <= parts[i]; ++j)
            ++ladder_count[static_cast<std::int64_t>(i) + j];
    std::vector<std::int64_t> rows;
    for (const auto& [ladder, count] : ladder_count) {
        (void)ladder;
        if (static_cast<std::size_t>(count) > rows.size())
            rows.resize(static_cast<std::size_t>(count), 0);
        for (std::int64_t r = 0; r < count; ++r) ++rows[static_cast<std::size_t>(r)];
    }
    return Partition(rows);
}

void for_each_partition(std::int64_t n, std::int64_t max_part,
                        std::vector<std::int64_t>& acc,
                        const std::function<void(const Partition&)>& fn) {
    if (n == 0) {
        fn(Partition(acc));
        return;
    }
    for (std::int64_t p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        for_each_partition(n - p, p, acc, fn);
        acc.pop_back();
    }
}

} // namespace

TEST_CASE("parse accepts well-formed lists and round-trips") {
    CHECK(Partition::parse("9,3").parts() == std::vector<std::int64_t>{9, 3});
    CHECK(Partition::parse("12").parts() == std::vector<std::int64_t>{12});
    CHECK(Partition::parse("").parts().empty());
    CHECK(Partition::parse("5,5,2").to_string() == "5,5,2");
    CHECK(P({7, 5}).to_string() == "7,5");
}

TEST_CASE("parse reports the byte position of the offense") {
    CHECK_THROWS_AS(Partition::parse("3,9"), PartitionParseError);
    try {
        Partition::parse("3,9");
        FAIL("expected throw");
    } catch (const PartitionParseError& e) {
        CHECK(e.position == 2);
    }
    try {
        Partition::parse("4,x");
        FAIL("expected throw");
    } catch (const PartitionParseError& e) {
        CHECK(e.position == 2);
    }
    CHECK_THROWS_AS(Partition::parse("4,,2"), PartitionParseError);
    CHECK_THROWS_AS(Partition::parse("4,2,"), PartitionParseError);
    CHECK_THROWS_AS(Partition::parse("-3"), PartitionParseError);
}

TEST_CASE("constructor validates ordering and drops zeros") {
    CHECK(Partition(std::vector<std::int64_t>{4, 2, 0, 0}).length() == 2);
    CHECK(Partition(std::vector<std::int64_t>{}).empty());
    CHECK_THROWS_AS(Partition(std::vector<std::int64_t>{2, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<std::int64_t>{1, -1}),
                    std::invalid_argument);
}

TEST_CASE("strictness and accessors") {
    CHECK(P({9, 8}).is_strict());
    CHECK_FALSE(P({6, 6}).is_strict());
    CHECK(P({}).is_strict());
    CHECK(P({5, 4, 2, 1}).size() == 12);
    CHECK(P({5, 4, 2, 1}).part(2) == 4);
    CHECK(P({5, 4, 2, 1}).part(9) == 0);
    CHECK(P({5, 4, 2, 2}).even_part_count() == 3);
}

TEST_CASE("doubling maps, frozen values") {
    CHECK(dbl(P({11, 1})) == P({6, 5, 1}));
    CHECK(dbl(P({9, 3})) == P({5, 4, 2, 1}));
    CHECK(dbl(P({8, 4})) == P({5, 3, 3, 1}));
    CHECK(dbl(P({12})) == P({7, 5}));
    CHECK(bar_dbl(P({12})) == P({6, 6}));
    CHECK(bar_dbl(P({9, 3})) == P({5, 4, 2, 1}));
    CHECK(bar_dbl(P({7})) == P({4, 3}));
    CHECK(dbl(P({7})) == P({4, 3}));
    CHECK(dbl(P({1})) == P({1}));
    CHECK(bar_dbl(P({1})) == P({1}));
}

TEST_CASE("doubling maps, failure modes") {
    CHECK_THROWS_AS(dbl(P({3, 2})), std::domain_error); // rows (2,1),(2,1) -> 2,1,2,1 unsorted
    CHECK_FALSE(try_dbl(P({3, 2})).has_value());
    CHECK(try_dbl(P({9, 3})).has_value());
    // bar_dbl accepts every strict partition and rejects every other one.
    std::vector<std::int64_t> acc;
    for (std::int64_t n = 1; n <= 16; ++n)
        for_each_partition(n, n, acc, [](const Partition& lam) {
            if (lam.is_strict())
                CHECK_NOTHROW(bar_dbl(lam));
            else
                CHECK_THROWS_AS(bar_dbl(lam), std::invalid_argument);
        });
}

TEST_CASE("regularization frozen values and oracle sweep") {
    CHECK(regularize(P({6, 6})) == P({7, 5}));
    CHECK(regularize(P({4, 4, 2, 2})) == P({5, 4, 2, 1}));
    CHECK(regularize(P({2, 2})) == P({3, 1}));
    CHECK(regularize(P({1, 1})) == P({2}));
    std::vector<std::int64_t> acc;
    for (std::int64_t n = 1; n <= 14; ++n)
        for_each_partition(n, n, acc, [](const Partition& lam) {
            const Partition reg = regularize(lam);
            CAPTURE(lam.to_string());
            REQUIRE(reg == regularize_oracle(lam));
            REQUIRE(reg.is_strict());
            REQUIRE(reg.size() == lam.size());
            if (lam.is_strict()) REQUIRE(reg == lam);
        });
}

TEST_CASE("doubling vs regularization: exact boundary of the identity") {
    // dbl and regularize(bar_dbl) agree on a strict partition with 2-regular
    // double unless the partition ends with the parts 2, 1: dbl sends a part
    // equal to 2 to the single row (2) while bar_dbl sends it to (1,1), so a
    // part below it sits one row -- hence one ladder -- lower under bar_dbl,
    // and the ladder counts of the two images genuinely differ.
    CHECK(dbl(P({2, 1})) == P({2, 1}));
    CHECK(bar_dbl(P({2, 1})) == P({1, 1, 1}));
    CHECK(regularize(P({1, 1, 1})) == P({3})); // != dbl((2,1))
    CHECK(dbl(P({7, 2, 1})) == P({4, 3, 2, 1}));
    CHECK(regularize(bar_dbl(P({7, 2, 1}))) == P({5, 3, 2}));
    // A part 2 with nothing after it is harmless: (2) and (1,1) cover the
    // same two ladders.
    CHECK(regularize(bar_dbl(P({7, 2}))) == dbl(P({7, 2})));
    CHECK(regularize(bar_dbl(P({9, 2}))) == dbl(P({9, 2})));
    // Two-part strict partitions (the shapes behind every table column label)
    // never end with 2, 1 once n >= 4, so the identity holds for all of them.
    for (std::int64_t n = 4; n <= 200; ++n)
        for (std::int64_t b = 1; 2 * b < n; ++b) {
            const Partition lam = P({n - b, b});
            const auto doubled = try_dbl(lam);
            if (!doubled || !doubled->is_strict()) continue;
            CAPTURE(lam.to_string());
            REQUIRE(regularize(bar_dbl(lam)) == *doubled);
        }
    // General sweep: the identity holds exactly off the trailing-(2,1) family.
    std::vector<std::int64_t> acc;
    for (std::int64_t n = 1; n <= 18; ++n)
        for_each_partition(n, n, acc, [](const Partition& lam) {
            if (!lam.is_strict()) return;
            const auto doubled = try_dbl(lam);
            if (!doubled || !doubled->is_strict()) return;
            const std::int64_t h = lam.length();
            const bool tail21 =
                h >= 2 && lam.part(h - 1) == 2 && lam.part(h) == 1;
            CAPTURE(lam.to_string());
            REQUIRE((regularize(bar_dbl(lam)) == *doubled) == !tail21);
        });
}

TEST_CASE("contents") {
    CHECK(content(P({2, 1})) == Content{1, 2});
    CHECK(bar_content(P({3})) == Content{1, 2});
    CHECK(bar_content(P({9, 8})) == content(P({15, 2})));
    CHECK(bar_content(P({9, 8})) == Content{9, 8});
    CHECK_THROWS_AS(bar_content(P({3, 3})), std::invalid_argument);
}

TEST_CASE("node motion") {
    const Partition lam = P({9, 8});
    const auto add = bar_addable_nodes(lam);
    REQUIRE(add.size() == 2);
    CHECK(add[0] == Node{1, 10});
    CHECK(add[1] == Node{3, 1});
    const auto rem = bar_removable_nodes(lam);
    REQUIRE(rem.size() == 1);
    CHECK(rem[0] == Node{2, 8});
    CHECK(with_node_added(lam, Node{1, 10}) == P({10, 8}));
    CHECK(with_node_removed(lam, Node{2, 8}) == P({9, 7}));
    CHECK_THROWS_AS(with_node_added(lam, Node{2, 8}), std::invalid_argument);
    CHECK_THROWS_AS(with_node_removed(lam, Node{1, 10}), std::invalid_argument);
}

TEST_CASE("bar residues under both reading rules") {
    // Column pattern over j = 1..8: engine rule 0,1,1,0,0,1,1,0 starts at 0;
    // the alternative rule flips which side of each period carries the zeros.
    const std::vector<int> impl = {0, 1, 1, 0, 0, 1, 1, 0};
    const std::vector<int> literal = {1, 1, 0, 0, 1, 1, 0, 0};
    for (std::int64_t j = 1; j <= 8; ++j) {
        CHECK(bar_residue(Node{1, j}, BarRule::Implemented) ==
              impl[static_cast<std::size_t>(j - 1)]);
        CHECK(bar_residue(Node{1, j}, BarRule::LiteralSentence) ==
              literal[static_cast<std::size_t>(j - 1)]);
    }
    for (std::int64_t j = 1; j <= 64; ++j) {
        // Row independence: the bar residue depends on the column alone.
        CHECK(bar_residue(Node{1, j}, BarRule::Implemented) ==
              bar_residue(Node{7, j}, BarRule::Implemented));
        CHECK(bar_residue(Node{1, j}, BarRule::Implemented) ==
              ((j % 4 == 0 || j % 4 == 1) ? 0 : 1));
        CHECK(bar_residue(Node{1, j}, BarRule::LiteralSentence) ==
              ((j % 4 == 0 || j % 4 == 3) ? 0 : 1));
    }
}

TEST_CASE("signatures, frozen crystal facts") {
    const Partition lam = P({2, 1});
    const Signature s1 = signature(lam, 1);
    CHECK(s1.eps == 2);
    REQUIRE(tilde_e(lam, 1).has_value());
    CHECK(*tilde_e(lam, 1) == P({2}));
    REQUIRE(tilde_f(P({3, 2, 1}), 1).has_value());
    CHECK(*tilde_f(P({3, 2, 1}), 1) == P({4, 2, 1}));
    REQUIRE(tilde_f(P({2, 1}), 0).has_value());
    CHECK(*tilde_f(P({2, 1}), 0) == P({3, 1}));
    REQUIRE(tilde_f(P({3, 1}), 0).has_value());
    CHECK(*tilde_f(P({3, 1}), 0) == P({3, 2}));
    CHECK(signature(P({2}), 1).phi == 1);
    CHECK(*tilde_f(P({1}), 1) == P({2}));
    CHECK(*tilde_f(P({2}), 1) == P({2, 1}));
}

TEST_CASE("tilde_e inverts tilde_f where defined") {
    std::vector<std::int64_t> acc;
    for (std::int64_t n = 1; n <= 15; ++n)
        for_each_partition(n, n, acc, [](const Partition& lam) {
            if (!lam.is_strict()) return;
            for (int i : {0, 1}) {
                const auto up = tilde_f(lam, i);
                if (!up) continue;
                const auto back = tilde_e(*up, i);
                REQUIRE(back.has_value());
                REQUIRE(*back == lam);
            }
        });
}

TEST_CASE("dominance") {
    CHECK(dominates(P({7, 5}), P({6, 6})));
    CHECK_FALSE(dominates(P({6, 6}), P({7, 5})));
    CHECK(dominates(P({6, 6}), P({6, 6})));
    CHECK_THROWS_AS(dominates(P({3, 1}), P({3})), std::invalid_argument);
}

TEST_CASE("bounds, frozen values") {
    auto check = [](std::int64_t n, std::int64_t M, std::int64_t m,
                    std::int64_t mbar) {
        const Bounds b = bounds(n);
        CAPTURE(n);
        CHECK(b.M == M);
        CHECK(b.m == m);
        CHECK(b.mbar == mbar);
    };
    check(12, 6, 5, 3);
    check(20, 10, 9, 7);
    check(13, 6, 6, 4);
    check(8, 4, 3, 1);
    check(9, 4, 4, 2);
    check(16, 8, 7, 5);
    CHECK(bounds(4).mbar == -1);
    CHECK(bounds(5).mbar == 0);
    CHECK_THROWS_AS(bounds(0), std::invalid_argument);
}
