#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "signpart/partition.hpp"

using namespace signpart;

TEST_CASE("parse: grammar and expansion") {
    CHECK(Partition::parse("4,2") == Partition{4, 2});
    CHECK(Partition::parse("4,1^2") == Partition{4, 1, 1});
    CHECK(Partition::parse(" 4 , 1 ^ 2 ") == Partition{4, 1, 1});
    CHECK(Partition::parse("5,2,1^2").str() == "5,2,1^2");
    CHECK(Partition::parse("3^3") == Partition{3, 3, 3});

    CHECK_THROWS_AS(Partition::parse("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1^2,3"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("-3"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("4,"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("4^"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("4^0"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);

    // The offending token is named.
    try {
        Partition::parse("4,5");
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("\"5\"") != std::string::npos);
    }
}

TEST_CASE("parse/str round trip") {
    for (int n = 0; n <= 9; ++n)
        for (const Partition& p : enumerate_partitions(n)) {
            if (p.empty()) continue;  // "" is not in the grammar
            CHECK(Partition::parse(p.str()) == p);
        }
}

TEST_CASE("partition invariants enforced") {
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
    CHECK(Partition{}.weight() == 0);
    CHECK(Partition{}.str() == "");
    CHECK(Partition{4, 2}.weight() == 6);
}

TEST_CASE("enumerate_partitions: order, endpoints, counts") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions(4) ==
          std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(enumerate_partitions(10).size() == 42);

    for (int n = 0; n <= 30; ++n)
        CHECK(enumerate_partitions(n).size() ==
              oracles::kPartitionCounts[static_cast<std::size_t>(n)]);

    for (int n = 1; n <= 14; ++n) {
        const auto all = enumerate_partitions(n);
        CHECK(all.front() == Partition{n});
        CHECK(all.back() == Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
        for (std::size_t i = 1; i < all.size(); ++i) {
            CHECK(all[i - 1] > all[i]);  // strictly decreasing reverse-lex
            CHECK(all[i].weight() == n);
        }
    }
}

TEST_CASE("to_beta: fixtures and errors") {
    CHECK(to_beta(Partition{3, 1, 1}, 3).betas == std::vector<int>{5, 2, 1});
    CHECK(to_beta(Partition{}, 3).betas == std::vector<int>{2, 1, 0});
    CHECK(to_beta(Partition{3, 2, 1}, 3).betas == std::vector<int>{5, 3, 1});
    CHECK_THROWS_AS(to_beta(Partition{3, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("to_beta/to_partition round trip at every padding") {
    for (int n = 0; n <= 12; ++n)
        for (const Partition& p : enumerate_partitions(n))
            for (int r = static_cast<int>(p.size()); r <= n; ++r)
                CHECK(to_beta(p, r).to_partition() == p);
}

TEST_CASE("remove_hooks: fixtures") {
    const auto two = remove_hooks(Partition{3, 2, 1}, 3);
    REQUIRE(two.size() == 2);
    const std::set<Partition> results{two[0].result, two[1].result};
    CHECK(results == std::set<Partition>{Partition{3}, Partition{1, 1, 1}});

    // Ordered by descending bead.
    const auto pair = remove_hooks(Partition{3, 1, 1}, 2);
    REQUIRE(pair.size() == 2);
    CHECK(pair[0].result == Partition{1, 1, 1});
    CHECK(pair[0].leg_length == 0);
    CHECK(pair[1].result == Partition{3});
    CHECK(pair[1].leg_length == 1);
    CHECK(pair[0].hook_length == 2);

    for (int n = 1; n <= 8; ++n) {
        const auto row = remove_hooks(Partition{n}, n);
        REQUIRE(row.size() == 1);
        CHECK(row[0].result == Partition{});
        CHECK(row[0].leg_length == 0);
    }

    CHECK(remove_hooks(Partition{2, 2}, 4).empty());
    CHECK(remove_hooks(Partition{}, 1).empty());
    CHECK_THROWS_AS(remove_hooks(Partition{3}, 0), std::invalid_argument);
}

TEST_CASE("remove_hooks agrees with the cell-by-cell rim-hook oracle") {
    for (int n = 0; n <= 10; ++n)
        for (const Partition& p : enumerate_partitions(n))
            for (int a = 1; a <= 10; ++a) {
                auto got = remove_hooks(p, a);
                auto expected = oracles::rim_hook_removals_bruteforce(p, a);
                std::vector<std::pair<Partition, int>> got_pairs;
                for (const auto& h : got) {
                    CHECK(h.hook_length == a);
                    CHECK(h.result.weight() == p.weight() - a);
                    CHECK(h.leg_length >= 0);
                    CHECK(h.leg_length <= a - 1);
                    got_pairs.emplace_back(h.result, h.leg_length);
                }
                std::sort(got_pairs.begin(), got_pairs.end());
                std::sort(expected.begin(), expected.end());
                CHECK(got_pairs == expected);
            }
}

TEST_CASE("hook removal and addition are inverse") {
    for (int n = 1; n <= 10; ++n)
        for (const Partition& p : enumerate_partitions(n))
            for (int a = 1; a <= n; ++a)
                for (const HookRemoval& h : remove_hooks(p, a)) {
                    bool restored = false;
                    for (const HookAddition& add : add_hooks(h.result, a))
                        if (add.result == p && add.leg_length == h.leg_length)
                            restored = true;
                    CHECK(restored);
                }
}

TEST_CASE("hooks longer than n/2 are unique") {
    for (int n = 1; n <= 12; ++n)
        for (const Partition& p : enumerate_partitions(n))
            for (int m = n / 2 + 1; m <= n; ++m)
                CHECK(remove_hooks(p, m).size() <= 1);
}

TEST_CASE("hook_lengths: fixtures and count") {
    CHECK(hook_lengths(Partition{4, 2}) == std::vector<int>{5, 4, 2, 1, 2, 1});
    CHECK(hook_lengths(Partition{6}) == std::vector<int>{6, 5, 4, 3, 2, 1});
    CHECK(hook_lengths(Partition{1, 1, 1}) == std::vector<int>{3, 2, 1});
    for (int n = 0; n <= 10; ++n)
        for (const Partition& p : enumerate_partitions(n))
            CHECK(hook_lengths(p).size() == static_cast<std::size_t>(n));
}

TEST_CASE("conjugate is an involution") {
    CHECK(conjugate(Partition{4, 2}) == Partition{2, 2, 1, 1});
    CHECK(conjugate(Partition{}) == Partition{});
    for (int n = 0; n <= 10; ++n)
        for (const Partition& p : enumerate_partitions(n))
            CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("is_hook_shape") {
    CHECK(is_hook_shape(Partition{5, 1, 1}) == 2);
    CHECK(!is_hook_shape(Partition{2, 2}).has_value());
    CHECK(is_hook_shape(Partition{3}) == 0);
    CHECK(is_hook_shape(Partition{1, 1, 1, 1}) == 3);
    CHECK(!is_hook_shape(Partition{}).has_value());
}
