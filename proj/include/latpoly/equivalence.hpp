#pragma once

// Component-wise conjugation between isotopisms with equal cycle structures.
// Any such pair is related by a triple of relabelling permutations
// (s1, s2, s3); the induced point map (i,j,k) -> (s1 i, s2 j, s3 k) carries
// the compatible squares of one isotopism bijectively onto those of the
// other, which is why every class invariant here (count, rank, dimension)
// only depends on the three cycle structures.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "latpoly/enumeration.hpp"
#include "latpoly/latin_square.hpp"
#include "latpoly/permutation.hpp"

namespace latpoly {

// A relabelling permutation s with s p s^{-1} = q, built by matching the r-th
// cycle of each length in p (ordered by minimum) to the r-th in q and mapping
// them elementwise. Throws if the cycle structures differ.
inline Permutation conjugator(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw std::invalid_argument("permutations must share one degree");
    const int n = p.degree();
    std::map<size_t, std::vector<const Cycle*>> by_len_p, by_len_q;
    const CycleDecomposition dp = cycle_decomposition(p), dq = cycle_decomposition(q);
    for (const Cycle& c : dp.cycles) by_len_p[c.size()].push_back(&c);
    for (const Cycle& c : dq.cycles) by_len_q[c.size()].push_back(&c);

    std::vector<int> image(static_cast<size_t>(n) + 1, 0);
    for (const auto& [len, from_cycles] : by_len_p) {
        const auto it = by_len_q.find(len);
        if (it == by_len_q.end() || it->second.size() != from_cycles.size())
            throw std::invalid_argument("permutations have different cycle structures");
        for (size_t r = 0; r < from_cycles.size(); ++r) {
            const Cycle& src = *from_cycles[r];
            const Cycle& dst = *it->second[r];
            for (size_t t = 0; t < len; ++t) image[static_cast<size_t>(src[t])] = dst[t];
        }
    }
    Permutation s = Permutation::from_image(std::vector<int>(image.begin() + 1, image.end()));
    if (conjugate(p, s) != q) throw std::logic_error("conjugator construction failed");
    return s;
}

struct EquivalenceMap {
    Permutation s1, s2, s3;

    Isotopism as_isotopism() const { return Isotopism(s1, s2, s3); }
};

// Relabelling triple with s1 a s1^{-1} = a', s2 b s2^{-1} = b',
// s3 c s3^{-1} = c'. Exists iff the component structures agree pairwise.
inline EquivalenceMap build_equivalence(const Isotopism& from, const Isotopism& to) {
    return EquivalenceMap{conjugator(from.alpha, to.alpha), conjugator(from.beta, to.beta),
                          conjugator(from.gamma, to.gamma)};
}

// Image of a compatible square under the point map.
inline LatinSquare transport_square(const EquivalenceMap& map, const LatinSquare& L) {
    return apply_isotopism(map.as_isotopism(), L);
}

// Image of an embedded 0/1 vector: coordinate (i,j,k) moves to (s1 i, s2 j, s3 k).
inline BinaryVector transport_vector(const EquivalenceMap& map, const BinaryVector& w) {
    const int n = w.n;
    BinaryVector out;
    out.n = n;
    out.bits.assign(w.bits.size(), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                const size_t src = static_cast<size_t>(triple_position(TripleIndex{i, j, k}, n));
                if (!w.bits[src]) continue;
                out.bits[static_cast<size_t>(
                    triple_position(TripleIndex{map.s1(i), map.s2(j), map.s3(k)}, n))] = 1;
            }
    return out;
}

enum class VerifyOutcome { Confirmed, Refuted, Inconclusive };

// Check, by enumeration, that the map carries the solution set of `from`
// exactly onto the solution set of `to`. Conjugation identities are checked
// first (their failure refutes without any search); a budget that runs out
// before both sides are enumerated leaves the outcome inconclusive.
inline VerifyOutcome verify_equivalence(const Isotopism& from, const Isotopism& to, const EquivalenceMap& map,
                                        const Budget& budget = {}) {
    if (conjugate(from.alpha, map.s1) != to.alpha || conjugate(from.beta, map.s2) != to.beta ||
        conjugate(from.gamma, map.s3) != to.gamma)
        return VerifyOutcome::Refuted;

    bool mismatch = false;
    std::set<std::string> transported;
    const EnumerationResult a = enumerate_squares(from, budget, [&](const LatinSquare& L) {
        const LatinSquare image = transport_square(map, L);
        if (!is_autotopism(to, image)) {
            mismatch = true;
            return false;
        }
        transported.insert(embed(image).to_line());
        return true;
    });
    if (mismatch) return VerifyOutcome::Refuted;
    if (!a.complete) return VerifyOutcome::Inconclusive;

    std::set<std::string> target;
    const EnumerationResult b = enumerate_squares(to, budget, [&](const LatinSquare& L) {
        target.insert(embed(L).to_line());
        return true;
    });
    if (!b.complete) return VerifyOutcome::Inconclusive;
    return transported == target ? VerifyOutcome::Confirmed : VerifyOutcome::Refuted;
}

// Human-readable form: the three relabelling permutations and the point map.
inline std::string describe(const EquivalenceMap& map) {
    std::string out;
    out += "s1: " + print_cycles(map.s1) + "\n";
    out += "s2: " + print_cycles(map.s2) + "\n";
    out += "s3: " + print_cycles(map.s3) + "\n";
    out += "pi: (i,j,k) -> (s1 i, s2 j, s3 k)\n";
    return out;
}

}  // namespace latpoly
