#include <doctest.h>

#include <random>
#include <set>

#include "latpoly/permutation.hpp"
#include "support/random_helpers.hpp"

using namespace latpoly;

TEST_CASE("identity and from_image basics") {
    Permutation id = Permutation::identity(4);
    CHECK(id.degree() == 4);
    CHECK(id.is_identity());
    for (int x = 1; x <= 4; ++x) CHECK(id(x) == x);

    Permutation p = Permutation::from_image({2, 3, 1, 4});
    CHECK(p(1) == 2);
    CHECK(p(2) == 3);
    CHECK(p(3) == 1);
    CHECK(p(4) == 4);
    CHECK(!p.is_identity());

    CHECK_THROWS_AS(Permutation::from_image({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_image({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_image({3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(0), std::invalid_argument);
}

TEST_CASE("compose and inverse") {
    Permutation p = Permutation::from_image({2, 3, 1});
    Permutation q = Permutation::from_image({1, 3, 2});
    // (p*q)(x) = p(q(x))
    Permutation pq = compose(p, q);
    CHECK(pq(1) == 2);
    CHECK(pq(2) == 1);
    CHECK(pq(3) == 3);
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(compose(p.inverse(), p).is_identity());
    CHECK_THROWS_AS(compose(p, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("cycle notation parsing") {
    Permutation p = parse_permutation("(1 2 3)(4 5)", 5);
    CHECK(p == Permutation::from_image({2, 3, 1, 5, 4}));

    CHECK(parse_permutation("", 3).is_identity());
    CHECK(parse_permutation("()", 3).is_identity());
    CHECK(parse_permutation("  ( 2   3 ) ", 3) == Permutation::from_image({1, 3, 2}));
    CHECK(parse_permutation("(2)(1 3)", 3) == Permutation::from_image({3, 2, 1}));

    CHECK_THROWS_AS(parse_permutation("(1 2", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("(1 9)", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("(0 1)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("1 2 3", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("(1, 2)", 3), std::invalid_argument);
}

TEST_CASE("cycle notation printing") {
    CHECK(print_cycles(Permutation::identity(4)) == "()");
    CHECK(print_cycles(Permutation::from_image({2, 1, 4, 3})) == "(1 2)(3 4)");
    CHECK(print_cycles(Permutation::from_image({1, 3, 2})) == "(2 3)");
    // min-first rotation and sort by minimum
    CHECK(print_cycles(parse_permutation("(5 4)(3 1 2)", 5)) == "(1 2 3)(4 5)");
}

TEST_CASE("parse/print round-trip on random permutations") {
    std::mt19937 rng(20260819u);
    for (int n = 1; n <= 7; ++n) {
        for (int rep = 0; rep < 50; ++rep) {
            Permutation p = test_support::random_permutation(n, rng);
            CHECK(parse_permutation(print_cycles(p), n) == p);
        }
    }
}

TEST_CASE("cycle decomposition invariants") {
    Permutation p = parse_permutation("(1 2 3)(4 5)", 6);
    CycleDecomposition dec = cycle_decomposition(p);
    REQUIRE(dec.cycles.size() == 3);
    CHECK(dec.cycles[0] == Cycle{1, 2, 3});
    CHECK(dec.cycles[1] == Cycle{4, 5});
    CHECK(dec.cycles[2] == Cycle{6});

    std::mt19937 rng(7u);
    for (int n = 1; n <= 7; ++n) {
        for (int rep = 0; rep < 30; ++rep) {
            Permutation q = test_support::random_permutation(n, rng);
            CycleDecomposition d = cycle_decomposition(q);
            std::set<int> all;
            int last_min = 0;
            for (const Cycle& c : d.cycles) {
                REQUIRE(!c.empty());
                // min-first
                for (int v : c) CHECK(c.front() <= v);
                // sorted by minimum
                CHECK(c.front() > last_min);
                last_min = c.front();
                for (int v : c) CHECK(all.insert(v).second);
                // cycle really maps around
                for (size_t u = 0; u < c.size(); ++u) CHECK(q(c[u]) == c[(u + 1) % c.size()]);
            }
            CHECK(static_cast<int>(all.size()) == n);
        }
    }
}

TEST_CASE("cycle structure") {
    Permutation p = parse_permutation("(1 2 3)(4 5)", 6);
    CycleStructure ls = cycle_structure(p);
    CHECK(ls.counts == std::vector<int>{0, 1, 1, 1, 0, 0, 0});
    CHECK(ls.cycle_count() == 3);
    CHECK(ls.fixed_point_count() == 1);

    std::mt19937 rng(11u);
    for (int n = 1; n <= 7; ++n)
        for (int rep = 0; rep < 30; ++rep) {
            Permutation q = test_support::random_permutation(n, rng);
            CycleStructure s = cycle_structure(q);
            long long total = 0;
            for (int len = 1; len <= n; ++len) total += static_cast<long long>(len) * s.counts[static_cast<size_t>(len)];
            CHECK(total == n);
            int fixed = 0;
            for (int x = 1; x <= n; ++x)
                if (q(x) == x) ++fixed;
            CHECK(s.fixed_point_count() == fixed);
        }
}

TEST_CASE("make_cycle_structure validation") {
    CycleStructure ls = make_cycle_structure(4, {2, 1, 0, 0});
    CHECK(ls.counts == std::vector<int>{0, 2, 1, 0, 0});
    CHECK_THROWS_AS(make_cycle_structure(4, {1, 1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_cycle_structure(4, {2, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_cycle_structure(4, {-1, 0, 0, 5}), std::invalid_argument);
}

TEST_CASE("order and power_apply") {
    Permutation p = parse_permutation("(1 2 3)(4 5)", 5);
    CHECK(permutation_order(p) == 6);
    CHECK(permutation_order(Permutation::identity(4)) == 1);

    CHECK(power_apply(p, 0, 2) == 2);
    CHECK(power_apply(p, 1, 1) == 2);
    CHECK(power_apply(p, 2, 1) == 3);
    CHECK(power_apply(p, 3, 1) == 1);
    CHECK(power_apply(p, -1, 2) == 1);
    CHECK(power_apply(p, -4, 1) == 3);  // -4 mod 3 == 2
    CHECK(power_apply(p, 7, 4) == 5);

    std::mt19937 rng(13u);
    for (int n = 1; n <= 7; ++n)
        for (int rep = 0; rep < 20; ++rep) {
            Permutation q = test_support::random_permutation(n, rng);
            const long long ord = permutation_order(q);
            for (int x = 1; x <= n; ++x) {
                CHECK(power_apply(q, ord, x) == x);
                CHECK(power_apply(q, -1, x) == q.inverse()(x));
                CHECK(power_apply(q, 2, x) == q(q(x)));
            }
        }
}

TEST_CASE("conjugation preserves cycle structure") {
    std::mt19937 rng(17u);
    for (int n = 2; n <= 7; ++n)
        for (int rep = 0; rep < 30; ++rep) {
            Permutation p = test_support::random_permutation(n, rng);
            Permutation s = test_support::random_permutation(n, rng);
            Permutation c = conjugate(p, s);
            CHECK(cycle_structure(c) == cycle_structure(p));
            // definition check: c(s(x)) == s(p(x))
            for (int x = 1; x <= n; ++x) CHECK(c(s(x)) == s(p(x)));
        }
}

TEST_CASE("representative permutation of a cycle structure") {
    CHECK(print_cycles(representative_permutation(make_cycle_structure(4, {2, 1, 0, 0}))) == "(3 4)");
    CHECK(print_cycles(representative_permutation(make_cycle_structure(3, {0, 0, 1}))) == "(1 2 3)");
    CHECK(representative_permutation(make_cycle_structure(3, {3, 0, 0})).is_identity());
    CHECK(print_cycles(representative_permutation(make_cycle_structure(6, {1, 1, 1, 0, 0, 0}))) == "(2 3)(4 5 6)");

    // structure of the representative equals the requested structure
    for (int n = 1; n <= 6; ++n) {
        // enumerate partitions of n as count vectors via simple recursion
        std::vector<std::vector<int>> parts;
        std::vector<int> cur(static_cast<size_t>(n), 0);
        std::function<void(int, int)> go = [&](int remain, int maxlen) {
            if (remain == 0) {
                parts.push_back(cur);
                return;
            }
            for (int len = std::min(remain, maxlen); len >= 1; --len) {
                ++cur[static_cast<size_t>(len) - 1];
                go(remain - len, len);
                --cur[static_cast<size_t>(len) - 1];
            }
        };
        go(n, n);
        for (const auto& counts : parts) {
            CycleStructure want = make_cycle_structure(n, counts);
            CHECK(cycle_structure(representative_permutation(want)) == want);
        }
    }
}
