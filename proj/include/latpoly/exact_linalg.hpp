#pragma once

// Exact integer linear algebra: matrix rank by fraction-free elimination and
// the affine dimension of a streamed point set via an incremental basis.
// All arithmetic is arbitrary-precision (GMP), so results are exact; rows are
// divided by their content after every combination to keep entries small.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "latpoly/constraint_system.hpp"

namespace latpoly {

namespace detail {

// Divide a row by the gcd of its entries (leaves zero rows alone).
inline void normalize_content(std::vector<mpz_class>& row) {
    mpz_class g = 0;
    for (const mpz_class& v : row) {
        if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (mpz_class& v : row) v /= g;
}

// In-place fraction-free row echelon; returns the rank. Pivot choice (the
// smallest nonzero magnitude in the column) keeps intermediate entries small.
inline int echelon_rank(std::vector<std::vector<mpz_class>>& m) {
    if (m.empty()) return 0;
    const size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < m.size(); ++c) {
        size_t pivot = m.size();
        for (size_t x = r; x < m.size(); ++x) {
            if (m[x][c] == 0) continue;
            if (pivot == m.size() || mpz_cmpabs(m[x][c].get_mpz_t(), m[pivot][c].get_mpz_t()) < 0) pivot = x;
        }
        if (pivot == m.size()) continue;
        std::swap(m[r], m[pivot]);
        for (size_t x = r + 1; x < m.size(); ++x) {
            if (m[x][c] == 0) continue;
            const mpz_class a = m[r][c], b = m[x][c];
            for (size_t y = c; y < cols; ++y) m[x][y] = m[x][y] * a - m[r][y] * b;
            normalize_content(m[x]);
        }
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace detail

// Rank of a dense integer matrix.
inline int exact_rank(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<mpz_class>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<mpz_class> r(row.size());
        for (size_t y = 0; y < row.size(); ++y) r[y] = static_cast<long>(row[y]);
        m.push_back(std::move(r));
    }
    return detail::echelon_rank(m);
}

// Rank of a constraint system's coefficient matrix (the rhs plays no part).
inline int exact_rank(const ConstraintSystem& sys) {
    std::vector<std::vector<mpz_class>> m;
    m.reserve(sys.rows.size());
    for (const SparseRow& row : sys.rows) {
        if (row.entries.empty()) continue;  // identically-zero rows cannot raise the rank
        std::vector<mpz_class> dense(static_cast<size_t>(sys.cols), 0);
        for (const auto& [col, coeff] : row.entries) dense[static_cast<size_t>(col)] = coeff;
        m.push_back(std::move(dense));
    }
    return detail::echelon_rank(m);
}

// Affine span of a stream of integer points, kept in echelon form. Feed
// points with add(); dimension() is exact at every moment for the points seen
// so far, so a caller that knows an upper bound can stop streaming as soon as
// the bound is reached.
class AffineBasis {
public:
    explicit AffineBasis(int ambient) : ambient_(ambient), lead_row_(static_cast<size_t>(ambient), -1) {}

    // True if the point enlarged the span.
    bool add(const std::vector<uint8_t>& point) {
        std::vector<mpz_class> p(point.size());
        for (size_t y = 0; y < point.size(); ++y) p[y] = static_cast<int>(point[y]);
        return add_exact(std::move(p));
    }

    bool add_exact(std::vector<mpz_class> p) {
        if (static_cast<int>(p.size()) != ambient_) throw std::invalid_argument("point has the wrong length");
        ++points_seen_;
        if (!have_origin_) {
            origin_ = std::move(p);
            have_origin_ = true;
            return true;
        }
        for (int y = 0; y < ambient_; ++y) p[static_cast<size_t>(y)] -= origin_[static_cast<size_t>(y)];
        // Reduce against the basis, then insert at the leading column if anything is left.
        for (int c = 0; c < ambient_; ++c) {
            if (p[static_cast<size_t>(c)] == 0) continue;
            const int at = lead_row_[static_cast<size_t>(c)];
            if (at < 0) {
                detail::normalize_content(p);
                lead_row_[static_cast<size_t>(c)] = static_cast<int>(basis_.size());
                basis_.push_back(std::move(p));
                return true;
            }
            const std::vector<mpz_class>& row = basis_[static_cast<size_t>(at)];
            const mpz_class a = row[static_cast<size_t>(c)], b = p[static_cast<size_t>(c)];
            for (int y = c; y < ambient_; ++y)
                p[static_cast<size_t>(y)] = p[static_cast<size_t>(y)] * a - row[static_cast<size_t>(y)] * b;
        }
        return false;
    }

    // Affine dimension of the points seen: -1 before any point, 0 for one point.
    int dimension() const { return have_origin_ ? static_cast<int>(basis_.size()) : -1; }

    long long points_seen() const { return points_seen_; }
    int ambient() const { return ambient_; }

private:
    int ambient_;
    bool have_origin_ = false;
    long long points_seen_ = 0;
    std::vector<mpz_class> origin_;
    std::vector<std::vector<mpz_class>> basis_;
    std::vector<int> lead_row_;
};

// Affine dimension of a finite point set (-1 when the set is empty).
inline int affine_dimension(const std::vector<std::vector<uint8_t>>& points) {
    if (points.empty()) return -1;
    AffineBasis basis(static_cast<int>(points.front().size()));
    for (const auto& p : points) basis.add(p);
    return basis.dimension();
}

}  // namespace latpoly
