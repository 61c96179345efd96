#pragma once

// Variable-reduction machinery for the symmetric constraint system of an
// isotopism T = (alpha, beta, gamma): coordinates forced to zero by the
// fixed-point pattern, representative cells, canonical triples, and the
// reduced coordinate dictionary.

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "latpoly/latin_square.hpp"
#include "latpoly/permutation.hpp"

namespace latpoly {

inline TripleIndex apply_to_triple(const Isotopism& T, const TripleIndex& t) {
    return TripleIndex{T.alpha(t.i), T.beta(t.j), T.gamma(t.k)};
}

// Triples whose coordinate is zero in every solution symmetric under T:
//   a) i and j fixed, k not fixed;
//   b) i and k fixed, j not fixed;
//   c) j and k fixed, i not fixed.
struct FixedZeroSet {
    int n = 0;
    std::vector<TripleIndex> triples;  // lexicographic
    std::vector<uint8_t> mask;         // indexed by triple_position

    bool contains(const TripleIndex& t) const { return mask[static_cast<size_t>(triple_position(t, n))] != 0; }
};

inline FixedZeroSet fixed_zero_set(const Isotopism& T) {
    const int n = T.degree();
    FixedZeroSet fz;
    fz.n = n;
    fz.mask.assign(static_cast<size_t>(n) * n * n, 0);
    auto fixed = [](const Permutation& p, int x) { return p(x) == x; };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                const bool fa = fixed(T.alpha, i), fb = fixed(T.beta, j), fc = fixed(T.gamma, k);
                const bool forced = (fa && fb && !fc) || (fa && fc && !fb) || (fb && fc && !fa);
                if (forced) {
                    fz.triples.push_back({i, j, k});
                    fz.mask[static_cast<size_t>(triple_position({i, j, k}, n))] = 1;
                }
            }
    return fz;
}

// Closed-form size of fixed_zero_set in terms of cycle structures.
inline long long fixed_zero_count(const CycleStructure& la, const CycleStructure& lb,
                                  const CycleStructure& lc) {
    const long long n = la.degree;
    const long long f1a = la.fixed_point_count(), f1b = lb.fixed_point_count(), f1c = lc.fixed_point_count();
    return f1a * f1b * (n - f1c) + f1a * f1c * (n - f1b) + f1b * f1c * (n - f1a);
}

// Cells (i,j) whose value determines the whole cell orbit under (alpha, beta):
// i ranges over cycle minima of alpha; j over all of [n] when i moves, and
// over cycle minima of beta when i is fixed.
struct RepresentativeCells {
    int n = 0;
    std::vector<std::pair<int, int>> cells;  // lexicographic
    std::vector<uint8_t> mask;               // indexed by (i-1)*n + (j-1)

    bool contains(int i, int j) const {
        return mask[static_cast<size_t>(i - 1) * static_cast<size_t>(n) + static_cast<size_t>(j - 1)] != 0;
    }
};

inline RepresentativeCells representative_cells(const Isotopism& T) {
    const int n = T.degree();
    RepresentativeCells rc;
    rc.n = n;
    rc.mask.assign(static_cast<size_t>(n) * n, 0);
    std::vector<char> amin(static_cast<size_t>(n) + 1, 0), bmin(static_cast<size_t>(n) + 1, 0);
    for (const Cycle& c : cycle_decomposition(T.alpha).cycles) amin[static_cast<size_t>(c.front())] = 1;
    for (const Cycle& c : cycle_decomposition(T.beta).cycles) bmin[static_cast<size_t>(c.front())] = 1;
    for (int i = 1; i <= n; ++i) {
        if (!amin[static_cast<size_t>(i)]) continue;
        const bool i_fixed = T.alpha(i) == i;
        for (int j = 1; j <= n; ++j) {
            if (i_fixed && !bmin[static_cast<size_t>(j)]) continue;
            rc.cells.emplace_back(i, j);
            rc.mask[static_cast<size_t>(i - 1) * static_cast<size_t>(n) + static_cast<size_t>(j - 1)] = 1;
        }
    }
    return rc;
}

inline long long representative_cell_count(const CycleStructure& la, const CycleStructure& lb) {
    const long long n = la.degree;
    const long long na = la.cycle_count(), nb = lb.cycle_count();
    const long long f1a = la.fixed_point_count();
    return (na - f1a) * n + f1a * nb;
}

// For each triple t, the unique triple over a representative cell reached by
// applying T some minimal number of times.
class CanonicalTripleMap {
public:
    struct Result {
        TripleIndex triple;
        int shift = 0;  // minimal t >= 0 with (alpha^t(i), beta^t(j)) representative
    };

    explicit CanonicalTripleMap(const Isotopism& T)
        : n_(T.degree()), alpha_(T.alpha), beta_(T.beta), gamma_(T.gamma), shift_(static_cast<size_t>(n_) * n_, -1) {
        RepresentativeCells rc = representative_cells(T);
        int max_shift = 0;
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) {
                int ci = i, cj = j, m = 0;
                const int limit = n_ * n_ + 1;  // every cell orbit meets the representative set
                while (!rc.contains(ci, cj)) {
                    ci = T.alpha(ci);
                    cj = T.beta(cj);
                    if (++m > limit) throw std::logic_error("cell orbit misses the representative set");
                }
                shift_[cell_index(i, j)] = m;
                if (m > max_shift) max_shift = m;
            }
        // power tables: pow_[t][x-1] = component^t(x), t = 0..max_shift
        build_powers(alpha_, pow_a_, max_shift);
        build_powers(beta_, pow_b_, max_shift);
        build_powers(gamma_, pow_c_, max_shift);
    }

    int degree() const { return n_; }

    int cell_shift(int i, int j) const { return shift_[cell_index(i, j)]; }

    Result canonical(const TripleIndex& t) const {
        const int m = shift_[cell_index(t.i, t.j)];
        const auto mt = static_cast<size_t>(m);
        return {TripleIndex{pow_a_[mt][static_cast<size_t>(t.i) - 1], pow_b_[mt][static_cast<size_t>(t.j) - 1],
                            pow_c_[mt][static_cast<size_t>(t.k) - 1]},
                m};
    }

private:
    size_t cell_index(int i, int j) const {
        return static_cast<size_t>(i - 1) * static_cast<size_t>(n_) + static_cast<size_t>(j - 1);
    }

    static void build_powers(const Permutation& p, std::vector<std::vector<int>>& table, int max_shift) {
        const int n = p.degree();
        table.assign(static_cast<size_t>(max_shift) + 1, std::vector<int>(static_cast<size_t>(n)));
        for (int x = 1; x <= n; ++x) table[0][static_cast<size_t>(x) - 1] = x;
        for (int t = 1; t <= max_shift; ++t)
            for (int x = 1; x <= n; ++x)
                table[static_cast<size_t>(t)][static_cast<size_t>(x) - 1] =
                    p(table[static_cast<size_t>(t) - 1][static_cast<size_t>(x) - 1]);
    }

    int n_;
    Permutation alpha_, beta_, gamma_;
    std::vector<int> shift_;
    std::vector<std::vector<int>> pow_a_, pow_b_, pow_c_;
};

inline CanonicalTripleMap::Result canonical_triple(const Isotopism& T, const TripleIndex& t) {
    return CanonicalTripleMap(T).canonical(t);
}

// Lexicographically ordered dictionary of the reduced coordinates: triples
// over representative cells that are not forced to zero.
struct ReducedIndexMap {
    int n = 0;
    std::vector<TripleIndex> coords;
    std::vector<int> position;  // triple_position -> reduced index, -1 if absent

    int size() const { return static_cast<int>(coords.size()); }

    int index_of(const TripleIndex& t) const { return position[static_cast<size_t>(triple_position(t, n))]; }

    std::string to_json() const {
        std::string out = "{\"n\":" + std::to_string(n) + ",\"d\":" + std::to_string(size()) + ",\"coords\":[";
        for (size_t u = 0; u < coords.size(); ++u) {
            if (u) out += ',';
            out += '[' + std::to_string(coords[u].i) + ',' + std::to_string(coords[u].j) + ',' +
                   std::to_string(coords[u].k) + ']';
        }
        out += "]}";
        return out;
    }
};

inline ReducedIndexMap reduced_index_map(const Isotopism& T) {
    const int n = T.degree();
    RepresentativeCells rc = representative_cells(T);
    FixedZeroSet fz = fixed_zero_set(T);
    ReducedIndexMap map;
    map.n = n;
    map.position.assign(static_cast<size_t>(n) * n * n, -1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (!rc.contains(i, j)) continue;
            for (int k = 1; k <= n; ++k) {
                const TripleIndex t{i, j, k};
                if (fz.contains(t)) continue;
                map.position[static_cast<size_t>(triple_position(t, n))] = static_cast<int>(map.coords.size());
                map.coords.push_back(t);
            }
        }
    return map;
}

// Number of reduced coordinates, in closed form.
inline long long d_theta(const CycleStructure& la, const CycleStructure& lb, const CycleStructure& lc) {
    if (la.degree != lb.degree || lb.degree != lc.degree)
        throw std::invalid_argument("cycle structures must share one degree");
    const long long n = la.degree;
    const long long na = la.cycle_count(), nb = lb.cycle_count();
    const long long f1a = la.fixed_point_count(), f1b = lb.fixed_point_count(), f1c = lc.fixed_point_count();
    return ((na - f1a) * n * n + f1a * nb * n) -
           (f1a * f1b * (n - f1c) + f1a * f1c * (nb - f1b) + f1b * f1c * (na - f1a));
}

inline long long d_theta(const Isotopism& T) {
    return d_theta(cycle_structure(T.alpha), cycle_structure(T.beta), cycle_structure(T.gamma));
}

// Everything the constraint builder and the solution enumerator need, built once.
struct ReductionContext {
    Isotopism iso;
    FixedZeroSet forced_zeros;
    RepresentativeCells rep_cells;
    CanonicalTripleMap canon;
    ReducedIndexMap index_map;

    explicit ReductionContext(const Isotopism& T)
        : iso(T), forced_zeros(fixed_zero_set(T)), rep_cells(representative_cells(T)),
          canon(T), index_map(reduced_index_map(T)) {}
};

}  // namespace latpoly
