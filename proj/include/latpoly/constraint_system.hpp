#pragma once

// Sparse equality systems over 0/1 coordinates: the classical assignment
// system with symmetry rows appended (full system), and the variable-reduced
// system over canonical coordinates (reduced system).

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "latpoly/latin_square.hpp"
#include "latpoly/reduction.hpp"

namespace latpoly {

struct SparseRow {
    std::vector<std::pair<int, int>> entries;  // (column, coefficient), column ascending

    bool operator==(const SparseRow&) const = default;
    auto operator<=>(const SparseRow&) const = default;
};

// Row tags name the constraint family a row belongs to:
//   "1.1"/"2.1"  one appearance of each (column, symbol) pair per row index
//   "1.2"/"2.2"  one appearance of each (row, symbol) pair per column index
//   "1.3"/"2.3"  one symbol per cell
//   "1.5"        coordinate symmetry under the isotopism
struct ConstraintSystem {
    int cols = 0;
    std::vector<SparseRow> rows;
    std::vector<int> rhs;
    std::vector<std::string> row_tags;
    std::vector<int> multiplicities;        // >1 when dedup merged identical rows
    std::optional<ReducedIndexMap> vars;    // column dictionary; full n^3 lexicographic when absent

    size_t row_count() const { return rows.size(); }
};

// The 3n^2 assignment equalities (rhs 1) followed by n^3 symmetry rows
// x_t - x_{T(t)} = 0 (rhs 0; the row is all-zero when T fixes the triple).
inline ConstraintSystem full_system(const Isotopism& T) {
    const int n = T.degree();
    ConstraintSystem sys;
    sys.cols = n * n * n;

    auto add_row = [&sys](SparseRow row, int rhs, const char* tag) {
        sys.rows.push_back(std::move(row));
        sys.rhs.push_back(rhs);
        sys.row_tags.emplace_back(tag);
        sys.multiplicities.push_back(1);
    };

    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            SparseRow row;
            for (int i = 1; i <= n; ++i) row.entries.emplace_back(triple_position({i, j, k}, n), 1);
            std::sort(row.entries.begin(), row.entries.end());
            add_row(std::move(row), 1, "1.1");
        }
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            SparseRow row;
            for (int j = 1; j <= n; ++j) row.entries.emplace_back(triple_position({i, j, k}, n), 1);
            std::sort(row.entries.begin(), row.entries.end());
            add_row(std::move(row), 1, "1.2");
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            SparseRow row;
            for (int k = 1; k <= n; ++k) row.entries.emplace_back(triple_position({i, j, k}, n), 1);
            add_row(std::move(row), 1, "1.3");
        }
    for (int pos = 0; pos < n * n * n; ++pos) {
        const TripleIndex t = triple_at(pos, n);
        const int image = triple_position(apply_to_triple(T, t), n);
        SparseRow row;
        if (image != pos) {
            row.entries.emplace_back(pos, 1);
            row.entries.emplace_back(image, -1);
            std::sort(row.entries.begin(), row.entries.end());
        }
        add_row(std::move(row), 0, "1.5");
    }
    return sys;
}

namespace detail {

inline void dedup_rows(ConstraintSystem& sys) {
    std::map<std::pair<SparseRow, int>, size_t> first_of;
    ConstraintSystem out;
    out.cols = sys.cols;
    out.vars = std::move(sys.vars);
    for (size_t r = 0; r < sys.rows.size(); ++r) {
        auto key = std::make_pair(sys.rows[r], sys.rhs[r]);
        auto it = first_of.find(key);
        if (it == first_of.end()) {
            first_of.emplace(std::move(key), out.rows.size());
            out.rows.push_back(std::move(sys.rows[r]));
            out.rhs.push_back(sys.rhs[r]);
            out.row_tags.push_back(std::move(sys.row_tags[r]));
            out.multiplicities.push_back(sys.multiplicities[r]);
        } else {
            out.multiplicities[it->second] += sys.multiplicities[r];
        }
    }
    sys = std::move(out);
}

}  // namespace detail

// The 3n^2 assignment equalities rewritten over the reduced coordinates:
// every summand is replaced by its canonical triple (coefficients accumulate
// when summands share one) and summands forced to zero are dropped.
inline ConstraintSystem reduced_system(const ReductionContext& ctx, bool dedup = true) {
    const int n = ctx.iso.degree();
    ConstraintSystem sys;
    sys.cols = ctx.index_map.size();
    sys.vars = ctx.index_map;

    auto add_row = [&](int fixed_a, int fixed_b, int family, const char* tag) {
        std::map<int, int> coeff;
        for (int x = 1; x <= n; ++x) {
            TripleIndex t;
            if (family == 1) t = {x, fixed_a, fixed_b};
            else if (family == 2) t = {fixed_a, x, fixed_b};
            else t = {fixed_a, fixed_b, x};
            if (ctx.forced_zeros.contains(t)) continue;
            const int col = ctx.index_map.index_of(ctx.canon.canonical(t).triple);
            if (col < 0) throw std::logic_error("canonical triple missing from the reduced dictionary");
            ++coeff[col];
        }
        SparseRow row;
        row.entries.assign(coeff.begin(), coeff.end());
        sys.rows.push_back(std::move(row));
        sys.rhs.push_back(1);
        sys.row_tags.emplace_back(tag);
        sys.multiplicities.push_back(1);
    };

    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) add_row(j, k, 1, "2.1");
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) add_row(i, k, 2, "2.2");
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) add_row(i, j, 3, "2.3");

    if (dedup) detail::dedup_rows(sys);
    return sys;
}

inline ConstraintSystem reduced_system(const Isotopism& T, bool dedup = true) {
    return reduced_system(ReductionContext(T), dedup);
}

// Expands a reduced 0/1 point to the full coordinate space: zero on forced
// zeros, the canonical coordinate's value elsewhere.
inline BinaryVector lift(const ReductionContext& ctx, const std::vector<uint8_t>& reduced) {
    const int n = ctx.iso.degree();
    if (static_cast<int>(reduced.size()) != ctx.index_map.size())
        throw std::invalid_argument("reduced vector length differs from the coordinate dictionary");
    BinaryVector out{n, std::vector<uint8_t>(static_cast<size_t>(n) * n * n, 0)};
    for (int pos = 0; pos < n * n * n; ++pos) {
        const TripleIndex t = triple_at(pos, n);
        if (ctx.forced_zeros.contains(t)) continue;
        const int col = ctx.index_map.index_of(ctx.canon.canonical(t).triple);
        if (col < 0) throw std::logic_error("canonical triple missing from the reduced dictionary");
        out.bits[static_cast<size_t>(pos)] = reduced[static_cast<size_t>(col)] ? 1 : 0;
    }
    return out;
}

inline BinaryVector lift(const Isotopism& T, const std::vector<uint8_t>& reduced) {
    return lift(ReductionContext(T), reduced);
}

// Selects the reduced coordinates of a full vector.  Requires the vector to be
// symmetric under the isotopism and zero on the forced-zero triples.
inline std::vector<uint8_t> restrict_vector(const ReductionContext& ctx, const BinaryVector& w) {
    const int n = ctx.iso.degree();
    if (w.n != n || w.bits.size() != static_cast<size_t>(n) * n * n)
        throw std::invalid_argument("vector length differs from the coordinate space");
    for (int pos = 0; pos < n * n * n; ++pos) {
        const TripleIndex t = triple_at(pos, n);
        const int image = triple_position(apply_to_triple(ctx.iso, t), n);
        if (w.bits[static_cast<size_t>(pos)] != w.bits[static_cast<size_t>(image)])
            throw std::invalid_argument("vector is not symmetric under the isotopism");
    }
    for (const TripleIndex& t : ctx.forced_zeros.triples)
        if (w.bits[static_cast<size_t>(triple_position(t, n))])
            throw std::invalid_argument("vector is nonzero on a forced-zero coordinate");
    std::vector<uint8_t> out(static_cast<size_t>(ctx.index_map.size()), 0);
    for (int u = 0; u < ctx.index_map.size(); ++u)
        out[static_cast<size_t>(u)] =
            w.bits[static_cast<size_t>(triple_position(ctx.index_map.coords[static_cast<size_t>(u)], n))];
    return out;
}

inline std::vector<uint8_t> restrict_vector(const Isotopism& T, const BinaryVector& w) {
    return restrict_vector(ReductionContext(T), w);
}

// Plain-text export: "rows cols nnz" header, then one "row col value" line per
// nonzero, 1-based, in row-major order.
inline void write_matrix(const ConstraintSystem& sys, std::ostream& out) {
    size_t nnz = 0;
    for (const SparseRow& row : sys.rows) nnz += row.entries.size();
    out << sys.rows.size() << ' ' << sys.cols << ' ' << nnz << '\n';
    for (size_t r = 0; r < sys.rows.size(); ++r)
        for (const auto& [c, v] : sys.rows[r].entries) out << (r + 1) << ' ' << (c + 1) << ' ' << v << '\n';
}

inline void write_rhs(const ConstraintSystem& sys, std::ostream& out) {
    for (int v : sys.rhs) out << v << '\n';
}

inline std::string matrix_sidecar_json(const ConstraintSystem& sys) {
    std::ostringstream out;
    out << "{\"rows\":" << sys.rows.size() << ",\"cols\":" << sys.cols << ",\"row_tags\":[";
    for (size_t r = 0; r < sys.row_tags.size(); ++r) {
        if (r) out << ',';
        out << '"' << sys.row_tags[r] << '"';
    }
    out << "],\"multiplicities\":[";
    for (size_t r = 0; r < sys.multiplicities.size(); ++r) {
        if (r) out << ',';
        out << sys.multiplicities[r];
    }
    out << "]}";
    return out.str();
}

}  // namespace latpoly
