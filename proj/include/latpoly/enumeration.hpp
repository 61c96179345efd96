#pragma once

// Backtracking enumeration of the Latin squares of order n that commute with
// a prescribed isotopism (L(alpha(i), beta(j)) = gamma(L(i,j)) for all cells).
// Assignments are made orbit-at-a-time: fixing the symbol of one
// representative cell forces the symbol of every cell in its (alpha,beta)
// orbit, so the search branches only on representative cells and prunes with
// row/column masks plus a gamma-closure test per orbit.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "latpoly/latin_square.hpp"
#include "latpoly/reduction.hpp"

namespace latpoly {

// Resource limits for a search. Zero means unlimited. A "node" is one
// candidate symbol examined at a decision cell.
struct Budget {
    long long max_nodes = 0;
    double max_secs = 0.0;
};

struct EnumerationResult {
    long long delta = 0;    // solutions found (all of them iff complete)
    bool complete = true;   // false if the budget ran out or a sink stopped the search
    long long nodes = 0;    // candidate symbols examined
    double seconds = 0.0;   // wall time spent
};

// Return false from a sink to stop the search early (marks the result incomplete).
using SquareSink = std::function<bool(const LatinSquare&)>;
using VertexSink = std::function<bool(const std::vector<uint8_t>&)>;

namespace detail {

class OrbitSearch {
public:
    OrbitSearch(const Isotopism& T, const Budget& budget, const SquareSink& sink)
        : n_(T.degree()), budget_(budget), sink_(sink) {
        if (n_ > 64) throw std::invalid_argument("enumeration supports degree at most 64");

        // Orbit walk of every representative cell: the distinct cells
        // (alpha^t(i), beta^t(j)) with their shift t, in visiting order.
        const RepresentativeCells rc = representative_cells(T);
        int max_shift = 0;
        for (const auto& [i, j] : rc.cells) {
            Orbit orbit;
            orbit.cell = cell_index(i, j);
            int a = i, b = j, t = 0;
            do {
                orbit.walk.emplace_back(cell_index(a, b), t);
                a = T.alpha(a);
                b = T.beta(b);
                ++t;
            } while (a != i || b != j);
            max_shift = std::max(max_shift, t);
            orbits_.push_back(std::move(orbit));
        }

        // Longest orbits first: they are the most constrained decisions.
        std::stable_sort(orbits_.begin(), orbits_.end(), [](const Orbit& x, const Orbit& y) {
            return x.walk.size() > y.walk.size();
        });

        // gamma_pow_[t][k] = gamma^t(k), for every shift the walks use plus the
        // closure exponent (the full orbit length).
        gamma_pow_.assign(static_cast<size_t>(max_shift) + 1, std::vector<int>(static_cast<size_t>(n_) + 1, 0));
        for (int k = 1; k <= n_; ++k) gamma_pow_[0][static_cast<size_t>(k)] = k;
        for (int t = 1; t <= max_shift; ++t)
            for (int k = 1; k <= n_; ++k)
                gamma_pow_[static_cast<size_t>(t)][static_cast<size_t>(k)] =
                    T.gamma(gamma_pow_[static_cast<size_t>(t) - 1][static_cast<size_t>(k)]);

        grid_.assign(static_cast<size_t>(n_) * n_, 0);
        row_used_.assign(static_cast<size_t>(n_), 0);
        col_used_.assign(static_cast<size_t>(n_), 0);
    }

    EnumerationResult run() {
        const auto t0 = std::chrono::steady_clock::now();
        start_ = t0;
        result_ = EnumerationResult{};
        stopped_ = false;
        descend(0);
        result_.complete = !stopped_;
        result_.seconds =
            std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() - t0).count();
        return result_;
    }

private:
    struct Orbit {
        int cell = 0;                            // representative cell, row-major index
        std::vector<std::pair<int, int>> walk;   // (cell, shift) for the whole orbit
    };

    int cell_index(int i, int j) const { return (i - 1) * n_ + (j - 1); }

    bool over_budget() {
        if (budget_.max_nodes > 0 && result_.nodes >= budget_.max_nodes) return true;
        if (budget_.max_secs > 0.0 && (result_.nodes & 1023) == 0) {
            const double elapsed =
                std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() - start_)
                    .count();
            if (elapsed > budget_.max_secs) return true;
        }
        return false;
    }

    // Place gamma^t(k) on every cell of the orbit; undo and report failure if
    // any placement collides with a row or column.
    bool place(const Orbit& orbit, int k, size_t& placed) {
        placed = 0;
        for (const auto& [cell, shift] : orbit.walk) {
            const int f = gamma_pow_[static_cast<size_t>(shift)][static_cast<size_t>(k)];
            const int r = cell / n_, c = cell % n_;
            const uint64_t bit = uint64_t{1} << (f - 1);
            if ((row_used_[static_cast<size_t>(r)] | col_used_[static_cast<size_t>(c)]) & bit) {
                unplace(orbit, placed);
                return false;
            }
            grid_[static_cast<size_t>(cell)] = f;
            row_used_[static_cast<size_t>(r)] |= bit;
            col_used_[static_cast<size_t>(c)] |= bit;
            ++placed;
        }
        return true;
    }

    void unplace(const Orbit& orbit, size_t placed) {
        for (size_t u = 0; u < placed; ++u) {
            const auto& [cell, shift] = orbit.walk[u];
            const int f = grid_[static_cast<size_t>(cell)];
            const int r = cell / n_, c = cell % n_;
            const uint64_t bit = uint64_t{1} << (f - 1);
            grid_[static_cast<size_t>(cell)] = 0;
            row_used_[static_cast<size_t>(r)] &= ~bit;
            col_used_[static_cast<size_t>(c)] &= ~bit;
        }
    }

    void emit() {
        ++result_.delta;
        if (!sink_) return;
        std::vector<std::vector<int>> rows(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_)));
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c)
                rows[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    grid_[static_cast<size_t>(r) * static_cast<size_t>(n_) + static_cast<size_t>(c)];
        if (!sink_(LatinSquare::from_rows(rows))) stopped_ = true;
    }

    void descend(size_t at) {
        while (at < orbits_.size() && grid_[static_cast<size_t>(orbits_[at].cell)] != 0) ++at;
        if (at == orbits_.size()) {
            emit();
            return;
        }
        const Orbit& orbit = orbits_[at];
        const int closure = static_cast<int>(orbit.walk.size());
        for (int k = 1; k <= n_ && !stopped_; ++k) {
            if (over_budget()) {
                stopped_ = true;
                return;
            }
            ++result_.nodes;
            if (gamma_pow_[static_cast<size_t>(closure)][static_cast<size_t>(k)] != k) continue;
            size_t placed = 0;
            if (!place(orbit, k, placed)) continue;
            descend(at + 1);
            unplace(orbit, placed);
        }
    }

    int n_;
    Budget budget_;
    SquareSink sink_;
    std::vector<Orbit> orbits_;
    std::vector<std::vector<int>> gamma_pow_;
    std::vector<int> grid_;
    std::vector<uint64_t> row_used_, col_used_;
    std::chrono::steady_clock::time_point start_;
    EnumerationResult result_;
    bool stopped_ = false;
};

}  // namespace detail

// Enumerate every Latin square compatible with T, in a deterministic order.
inline EnumerationResult enumerate_squares(const Isotopism& T, const Budget& budget = {},
                                           const SquareSink& sink = {}) {
    return detail::OrbitSearch(T, budget, sink).run();
}

// Count only (the delta invariant of T's symmetry class).
inline EnumerationResult count_squares(const Isotopism& T, const Budget& budget = {}) {
    return enumerate_squares(T, budget, {});
}

// Enumerate the 0/1 points of the reduced system: each compatible square,
// restricted to the reduced coordinate dictionary of ctx.
inline EnumerationResult enumerate_vertices(const ReductionContext& ctx, const Budget& budget,
                                            const VertexSink& sink) {
    std::vector<uint8_t> point(static_cast<size_t>(ctx.index_map.size()), 0);
    return enumerate_squares(ctx.iso, budget, [&](const LatinSquare& L) {
        for (size_t u = 0; u < ctx.index_map.coords.size(); ++u) {
            const TripleIndex& t = ctx.index_map.coords[u];
            point[u] = L.at(t.i, t.j) == t.k ? 1 : 0;
        }
        return sink(point);
    });
}

// Independent reference count: filter the full catalogue of Latin squares
// (only feasible for degree at most 5).
inline long long oracle_count(const Isotopism& T) {
    long long hits = 0;
    all_latin_squares(T.degree(), [&](const LatinSquare& L) {
        if (is_autotopism(T, L)) ++hits;
    });
    return hits;
}

}  // namespace latpoly
