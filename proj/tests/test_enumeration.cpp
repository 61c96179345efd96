#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "latpoly/constraint_system.hpp"
#include "latpoly/enumeration.hpp"
#include "support/random_helpers.hpp"
#include "support/structures.hpp"

using namespace latpoly;
using test_support::StructureTripleSpec;

namespace {

long long count_of(const StructureTripleSpec& spec) {
    const EnumerationResult r = count_squares(test_support::make_isotopism(spec));
    REQUIRE(r.complete);
    return r.delta;
}

bool row_satisfied(const SparseRow& row, int rhs, const std::vector<uint8_t>& x) {
    int lhs = 0;
    for (const auto& [col, coeff] : row.entries) lhs += coeff * x[static_cast<size_t>(col)];
    return lhs == rhs;
}

}  // namespace

TEST_CASE("counts for hand-checked small classes") {
    CHECK(count_of({{0, 0, 1}, {0, 0, 1}, {0, 0, 1}}) == 3);
    CHECK(count_of({{0, 0, 1}, {0, 0, 1}, {3, 0, 0}}) == 6);
    CHECK(count_of({{1, 1, 0}, {1, 1, 0}, {1, 1, 0}}) == 4);
    CHECK(count_of({{0, 1}, {0, 1}, {2, 0}}) == 2);
}

TEST_CASE("identity isotopism counts the full catalogue") {
    for (int n = 1; n <= 4; ++n) {
        const EnumerationResult r = count_squares(identity_isotopism(n));
        CHECK(r.complete);
        CHECK(r.delta == all_latin_squares(n));
    }
}

TEST_CASE("counts for order 4 and 5 classes") {
    CHECK(count_of({{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 2, 0, 0}}) == 8);
    CHECK(count_of({{0, 0, 0, 1}, {0, 0, 0, 1}, {2, 1, 0, 0}}) == 8);
    CHECK(count_of({{0, 0, 0, 1}, {0, 0, 0, 1}, {4, 0, 0, 0}}) == 24);
    CHECK(count_of({{0, 2, 0, 0}, {0, 2, 0, 0}, {0, 2, 0, 0}}) == 32);
    CHECK(count_of({{0, 2, 0, 0}, {0, 2, 0, 0}, {2, 1, 0, 0}}) == 32);
    CHECK(count_of({{0, 2, 0, 0}, {0, 2, 0, 0}, {4, 0, 0, 0}}) == 96);
    CHECK(count_of({{1, 0, 1, 0}, {1, 0, 1, 0}, {1, 0, 1, 0}}) == 9);
    CHECK(count_of({{2, 1, 0, 0}, {2, 1, 0, 0}, {2, 1, 0, 0}}) == 16);
    CHECK(count_of({{0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}}) == 15);
    CHECK(count_of({{0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}, {5, 0, 0, 0, 0}}) == 120);
    CHECK(count_of({{1, 0, 0, 1, 0}, {1, 0, 0, 1, 0}, {1, 0, 0, 1, 0}}) == 32);
    CHECK(count_of({{1, 2, 0, 0, 0}, {1, 2, 0, 0, 0}, {1, 2, 0, 0, 0}}) == 256);
    CHECK(count_of({{2, 0, 1, 0, 0}, {2, 0, 1, 0, 0}, {2, 0, 1, 0, 0}}) == 144);
}

TEST_CASE("counts for a few larger classes stay cheap") {
    CHECK(count_of({{0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 1}, {0, 0, 2, 0, 0, 0}}) == 72);
    CHECK(count_of({{0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 1}, {6, 0, 0, 0, 0, 0}}) == 720);
    CHECK(count_of({{0, 0, 0, 0, 0, 1}, {0, 0, 2, 0, 0, 0}, {0, 3, 0, 0, 0, 0}}) == 288);
    CHECK(count_of({{1, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 1, 0}}) == 75);
    CHECK(count_of({{1, 0, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 1, 0}}) == 288);
}

TEST_CASE("count is invariant under independent conjugation of the components") {
    std::mt19937 rng(20240817);
    for (const StructureTripleSpec& spec : test_support::small_structures()) {
        if (spec.la.size() > 4) continue;
        const Isotopism T = test_support::make_isotopism(spec);
        const long long base = count_squares(T).delta;
        for (int rep = 0; rep < 3; ++rep) {
            const Isotopism U = test_support::random_conjugate(T, rng);
            CHECK(count_squares(U).delta == base);
        }
    }
}

TEST_CASE("enumeration agrees with filtering the full catalogue") {
    std::mt19937 rng(424242);
    for (const StructureTripleSpec& spec : test_support::small_structures()) {
        if (spec.la.size() > 4) continue;
        const Isotopism T = test_support::make_isotopism(spec);
        CHECK(count_squares(T).delta == oracle_count(T));
    }
    // Arbitrary isotopisms too, including ones admitting no square at all.
    for (int n = 2; n <= 4; ++n) {
        for (int rep = 0; rep < 8; ++rep) {
            const Isotopism T = test_support::random_isotopism(n, rng);
            CAPTURE(n);
            CHECK(count_squares(T).delta == oracle_count(T));
        }
    }
}

TEST_CASE("every emitted square is Latin and compatible, with no repeats") {
    const Isotopism T = test_support::make_isotopism({{1, 2, 0, 0, 0}, {1, 2, 0, 0, 0}, {1, 2, 0, 0, 0}});
    std::set<std::string> seen;
    const EnumerationResult r = enumerate_squares(T, {}, [&](const LatinSquare& L) {
        CHECK(is_autotopism(T, L));
        CHECK(seen.insert(embed(L).to_line()).second);
        return true;
    });
    CHECK(r.complete);
    CHECK(r.delta == 256);
    CHECK(seen.size() == 256);
}

TEST_CASE("emission order is deterministic") {
    const Isotopism T = test_support::make_isotopism({{0, 2, 0, 0}, {0, 2, 0, 0}, {2, 1, 0, 0}});
    std::vector<std::string> first, second;
    enumerate_squares(T, {}, [&](const LatinSquare& L) {
        first.push_back(embed(L).to_line());
        return true;
    });
    enumerate_squares(T, {}, [&](const LatinSquare& L) {
        second.push_back(embed(L).to_line());
        return true;
    });
    CHECK(first == second);
    CHECK(first.size() == 32);
}

TEST_CASE("vertices satisfy the reduced system and lift to full-system solutions") {
    std::vector<StructureTripleSpec> picks = {
        {{0, 0, 1}, {0, 0, 1}, {3, 0, 0}},
        {{1, 1, 0}, {1, 1, 0}, {1, 1, 0}},
        {{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 2, 0, 0}},
        {{2, 1, 0, 0}, {2, 1, 0, 0}, {2, 1, 0, 0}},
    };
    for (const StructureTripleSpec& spec : picks) {
        const Isotopism T = test_support::make_isotopism(spec);
        const ReductionContext ctx(T);
        const ConstraintSystem reduced = reduced_system(ctx);
        const ConstraintSystem full = full_system(T);
        int vertices = 0;
        const EnumerationResult r = enumerate_vertices(ctx, {}, [&](const std::vector<uint8_t>& x) {
            ++vertices;
            REQUIRE(static_cast<int>(x.size()) == ctx.index_map.size());
            for (size_t row = 0; row < reduced.rows.size(); ++row)
                CHECK(row_satisfied(reduced.rows[row], reduced.rhs[row], x));
            const BinaryVector w = lift(ctx, x);
            std::vector<uint8_t> wbits(w.bits.begin(), w.bits.end());
            for (size_t row = 0; row < full.rows.size(); ++row)
                CHECK(row_satisfied(full.rows[row], full.rhs[row], wbits));
            CHECK(restrict_vector(ctx, w) == x);
            CHECK(is_autotopism(T, unembed(w)));
            return true;
        });
        CHECK(r.complete);
        CHECK(vertices == r.delta);
        CHECK(r.delta == count_squares(T).delta);
    }
}

TEST_CASE("a node budget stops the search and marks it incomplete") {
    const Isotopism T = test_support::make_isotopism({{2, 2, 0, 0, 0, 0}, {2, 2, 0, 0, 0, 0}, {2, 2, 0, 0, 0, 0}});
    const EnumerationResult full = count_squares(T);
    REQUIRE(full.complete);
    CHECK(full.delta == 20480);

    Budget tight;
    tight.max_nodes = 50;
    const EnumerationResult cut = count_squares(T, tight);
    CHECK_FALSE(cut.complete);
    CHECK(cut.nodes <= 50);
    CHECK(cut.delta < full.delta);

    Budget instant;
    instant.max_secs = 1e-9;
    const EnumerationResult timed = count_squares(T, instant);
    CHECK_FALSE(timed.complete);
    CHECK(timed.delta < full.delta);
}

TEST_CASE("a sink can stop the search after the first solution") {
    const Isotopism T = test_support::make_isotopism({{0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}, {5, 0, 0, 0, 0}});
    const EnumerationResult r = enumerate_squares(T, {}, [](const LatinSquare&) { return false; });
    CHECK_FALSE(r.complete);
    CHECK(r.delta == 1);
}

TEST_CASE("degenerate degrees") {
    CHECK(count_squares(identity_isotopism(1)).delta == 1);
    const Isotopism swap2 = test_support::make_isotopism({{0, 1}, {0, 1}, {0, 1}});
    CHECK(count_squares(swap2).delta == 0);  // the symbol swap is compatible with neither order-2 square
}
