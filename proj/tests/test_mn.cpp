#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "signpart/mn.hpp"

using namespace signpart;

TEST_CASE("char_value: fixtures") {
    CHECK(char_value({5, 1}, {6}) == -1);
    CHECK(char_value({3, 1, 1}, {2, 2, 1}) == -2);
    CHECK(char_value({4, 1}, {3, 1, 1}) == 1);
    CHECK(char_value({}, {}) == 1);

    // The trivial character is 1 on every class.
    for (int n = 1; n <= 8; ++n)
        for (const Partition& mu : enumerate_partitions(n))
            CHECK(char_value(Partition{n}, mu) == 1);
}

TEST_CASE("char_value: weight mismatch is a contract error") {
    CHECK_THROWS_AS(char_value({3, 1}, {3}), std::invalid_argument);
    CHECK_THROWS_AS(orthogonality_sum({3, 1}, {3}), std::invalid_argument);
}

TEST_CASE("centralizer_order") {
    CHECK(centralizer_order({4, 2}) == 8);
    CHECK(centralizer_order({2, 2, 1}) == 8);
    CHECK(centralizer_order({}) == 1);
    for (int n = 1; n <= 8; ++n)
        CHECK(centralizer_order(Partition(std::vector<int>(
                  static_cast<std::size_t>(n), 1))) == factorial(n));
    // Distinct parts: plain product.
    CHECK(centralizer_order({5, 4, 2, 1}) == 40);
}

TEST_CASE("centralizer_is_abelian") {
    CHECK(centralizer_is_abelian({4, 2}));
    CHECK(centralizer_is_abelian({3, 1, 1}));
    CHECK(!centralizer_is_abelian({2, 2}));
    CHECK(!centralizer_is_abelian({1, 1, 1}));
}

TEST_CASE("degree: fixtures and the identity-column route") {
    CHECK(degree({4, 2}) == 9);
    for (int n = 1; n <= 8; ++n) CHECK(degree(Partition{n}) == 1);

    const CharValue d6 = degree({6}) + degree({4, 2}) + degree({2, 2, 1, 1}) +
                         degree({1, 1, 1, 1, 1, 1});
    CHECK(d6 == 20);
    CHECK(degree({6}) == 1);
    CHECK(degree({2, 2, 1, 1}) == 9);

    for (int n = 0; n <= 8; ++n) {
        const Partition identity(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const Partition& lambda : enumerate_partitions(n))
            CHECK(degree(lambda) == char_value(lambda, identity));
    }
}

TEST_CASE("degree_is_odd: valuation route matches the full degree") {
    CHECK(degree_is_odd({4, 2}));       // degree 9
    CHECK(degree_is_odd({5, 1}));       // degree 5
    CHECK(degree(Partition{5, 1}) == 5);
    CHECK(!degree_is_odd({3, 2, 1}));   // degree 16
    for (int n = 1; n <= 8; ++n)
        CHECK(degree_is_odd(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))));

    for (int n = 0; n <= 11; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            CHECK(degree_is_odd(lambda) == ((degree(lambda) & 1) == 1));
}

TEST_CASE("degree_coprime_to matches divisibility for small primes") {
    for (int p : {2, 3, 5})
        for (int n = 0; n <= 9; ++n)
            for (const Partition& lambda : enumerate_partitions(n))
                CHECK(degree_coprime_to(lambda, p) == (degree(lambda) % p != 0));
}

TEST_CASE("orthogonality: fixtures") {
    CHECK(orthogonality_sum({4, 2}, {4, 2}) == 8);
    CHECK(orthogonality_sum({6}, {5, 1}) == 0);
    CHECK(orthogonality_sum({1, 1, 1}, {1, 1, 1}) == 6);
    CHECK(orthogonality_check({4, 2}, {4, 2}));
    CHECK(orthogonality_check({6}, {5, 1}));
}

TEST_CASE("orthogonality: full sweep through n = 7, random pairs at 10 and 11") {
    for (int n = 1; n <= 7; ++n) {
        const auto classes = enumerate_partitions(n);
        for (const Partition& mu : classes)
            for (const Partition& nu : classes)
                CHECK(orthogonality_check(mu, nu));
    }
    std::mt19937 rng(20250809);
    for (int n : {10, 11}) {
        const auto classes = enumerate_partitions(n);
        std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
        for (int trial = 0; trial < 100; ++trial)
            CHECK(orthogonality_check(classes[pick(rng)], classes[pick(rng)]));
    }
}

TEST_CASE("conjugate twist: sign-character symmetry through n = 9") {
    for (int n = 1; n <= 9; ++n) {
        const auto all = enumerate_partitions(n);
        for (const Partition& mu : all) {
            CharColumn column(mu);
            const bool flip = (n - static_cast<int>(mu.size())) % 2 != 0;
            for (const Partition& lambda : all) {
                const CharValue lhs = char_value(conjugate(lambda), mu);
                const CharValue rhs = column.value(lambda);
                CHECK(lhs == (flip ? -rhs : rhs));
            }
        }
    }
}

TEST_CASE("n-cycle column: nonzero exactly on hooks, value (-1)^leg") {
    for (int n = 1; n <= 12; ++n) {
        CharColumn column(Partition{n});
        for (const Partition& lambda : enumerate_partitions(n)) {
            const CharValue v = column.value(lambda);
            const auto leg = is_hook_shape(lambda);
            if (leg)
                CHECK(v == (*leg % 2 ? -1 : 1));
            else
                CHECK(v == 0);
        }
    }
}

TEST_CASE("alternating sum over hook additions vanishes off multiples of a") {
    // kappa_i = (t-a) plus an a-hook of leg i, a < t < 2a: the signed sum of
    // the kappa_i is zero on every class with no part divisible by a.
    for (int a = 2; a <= 5; ++a) {
        for (int t = a + 1; t < 2 * a; ++t) {
            const auto kappas = add_hooks(Partition{t - a}, a);
            REQUIRE(kappas.size() == static_cast<std::size_t>(a));
            for (const Partition& mu_star : enumerate_partitions(t)) {
                bool divisible = false;
                for (int part : mu_star.parts())
                    if (part % a == 0) divisible = true;
                if (divisible) continue;
                CharValue sum = 0;
                for (const HookAddition& k : kappas) {
                    const CharValue v = char_value(k.result, mu_star);
                    sum += (k.leg_length % 2) ? -v : v;
                }
                CHECK(sum == 0);
            }
        }
    }
}

TEST_CASE("[n-b,b] counts the multiplicity of a repeated smallest part b > 1") {
    int family = 0;
    for (int n = 4; n <= 14; ++n) {
        for (const Partition& mu : enumerate_partitions(n)) {
            const int b = mu[mu.size() - 1];
            if (b <= 1) continue;
            std::size_t m = 0;
            for (int part : mu.parts())
                if (part == b) ++m;
            if (m < 2) continue;
            ++family;
            CHECK(char_value(Partition{n - b, b}, mu) == m);
        }
    }
    CHECK(family >= 20);
}

TEST_CASE("[n-a,1^a] on (a^m, mu*) with small tail equals m*(-1)^(a-1)") {
    for (int a : {4, 5})
        for (int m : {2, 3})
            for (int t = 1; t <= a; ++t)
                for (const Partition& mu_star : enumerate_partitions(t)) {
                    if (mu_star[0] >= a) continue;
                    std::vector<int> parts(static_cast<std::size_t>(m), a);
                    parts.insert(parts.end(), mu_star.parts().begin(),
                                 mu_star.parts().end());
                    const Partition mu(std::move(parts));
                    const int n = mu.weight();
                    std::vector<int> shape{n - a};
                    shape.insert(shape.end(), static_cast<std::size_t>(a), 1);
                    const CharValue expected = (a % 2) ? m : -m;
                    CHECK(char_value(Partition(std::move(shape)), mu) == expected);
                }
}

TEST_CASE("memoization is invisible: cold, warm and store-backed runs agree") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> pick_n(0, 12);
    CharStore store;
    std::unordered_map<Partition, CharColumn, PartitionHash> warm;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = pick_n(rng);
        const auto all = enumerate_partitions(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        const Partition& lambda = all[pick(rng)];
        const Partition& mu = all[pick(rng)];

        const CharValue cold = char_value(lambda, mu);
        auto [it, inserted] = warm.try_emplace(mu, mu);
        CHECK(it->second.value(lambda) == cold);
        CharColumn stored(mu, &store);
        CHECK(stored.value(lambda) == cold);
        CharColumn stored_again(mu, &store);  // now hits the shared store
        CHECK(stored_again.value(lambda) == cold);
    }
    CHECK(store.size() > 0);
}

TEST_CASE("CharStore: disk round trip and fail-safe corruption handling") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "signpart_store_test";
    fs::create_directories(dir);
    const fs::path file = dir / "charvalues.bin";

    CharStore store;
    CharColumn column(Partition{4, 2}, &store);
    for (const Partition& lambda : enumerate_partitions(6)) column.value(lambda);
    const CharValue big = -factorial(25);
    store.put(Partition{25}, Partition{25}, big);
    store.put(Partition{3}, Partition{1, 1, 1}, 0);
    REQUIRE(store.save(file));

    CharStore loaded;
    REQUIRE(loaded.load(file));
    CHECK(loaded.size() == store.size());
    CHECK(loaded.find(Partition{25}, Partition{25}) == big);
    CHECK(loaded.find(Partition{3}, Partition{1, 1, 1}) == CharValue(0));
    CHECK(loaded.find(Partition{4, 2}, Partition{4, 2}) == CharValue(1));
    CHECK(!loaded.find(Partition{9}, Partition{9}).has_value());

    // Truncation and garbage both load as empty stores.
    {
        std::ofstream trunc(file, std::ios::binary | std::ios::trunc);
        trunc << "SPCV garbage follows";
    }
    CharStore corrupt;
    CHECK(!corrupt.load(file));
    CHECK(corrupt.size() == 0);
    CharStore missing;
    CHECK(!missing.load(dir / "nonexistent.bin"));
    fs::remove_all(dir);
}
