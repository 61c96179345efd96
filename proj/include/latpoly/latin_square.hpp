#pragma once

// Latin squares over the symbol set [n], their 0/1 embeddings in R^(n^3),
// isotopisms acting on rows/columns/symbols, and an exhaustive generator for
// small orders.

#include <cassert>
#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "latpoly/permutation.hpp"

namespace latpoly {

// 1-based (row, column, symbol) triple.
struct TripleIndex {
    int i = 1, j = 1, k = 1;
    auto operator<=>(const TripleIndex&) const = default;
};

// Lexicographic position of (i,j,k) in [n]^3: k varies fastest, then j, then i.
inline int triple_position(const TripleIndex& t, int n) {
    assert(1 <= t.i && t.i <= n && 1 <= t.j && t.j <= n && 1 <= t.k && t.k <= n);
    return ((t.i - 1) * n + (t.j - 1)) * n + (t.k - 1);
}

inline TripleIndex triple_at(int pos, int n) {
    assert(0 <= pos && pos < n * n * n);
    return TripleIndex{pos / (n * n) + 1, pos / n % n + 1, pos % n + 1};
}

class LatinSquare {
public:
    // cells in row-major order, symbols in [1..n].  Throws on any violation,
    // naming the first offending row or column.
    LatinSquare(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {
        if (n_ < 1) throw std::invalid_argument("latin square order must be >= 1");
        if (cells_.size() != static_cast<size_t>(n_) * static_cast<size_t>(n_))
            throw std::invalid_argument("latin square needs exactly n*n cells");
        for (int i = 1; i <= n_; ++i) {
            std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
            for (int j = 1; j <= n_; ++j) {
                const int s = at(i, j);
                if (s < 1 || s > n_)
                    throw std::invalid_argument("symbol " + std::to_string(s) + " out of range in row " + std::to_string(i));
                if (seen[static_cast<size_t>(s)])
                    throw std::invalid_argument("symbol " + std::to_string(s) + " repeats in row " + std::to_string(i));
                seen[static_cast<size_t>(s)] = 1;
            }
        }
        for (int j = 1; j <= n_; ++j) {
            std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
            for (int i = 1; i <= n_; ++i) {
                const int s = at(i, j);
                if (seen[static_cast<size_t>(s)])
                    throw std::invalid_argument("symbol " + std::to_string(s) + " repeats in column " + std::to_string(j));
                seen[static_cast<size_t>(s)] = 1;
            }
        }
    }

    static LatinSquare from_rows(const std::vector<std::vector<int>>& rows) {
        const int n = static_cast<int>(rows.size());
        std::vector<int> cells;
        cells.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != static_cast<size_t>(n))
                throw std::invalid_argument("row " + std::to_string(i + 1) + " has wrong length");
            cells.insert(cells.end(), rows[i].begin(), rows[i].end());
        }
        return LatinSquare(n, std::move(cells));
    }

    int size() const { return n_; }

    int at(int i, int j) const {
        assert(1 <= i && i <= n_ && 1 <= j && j <= n_);
        return cells_[static_cast<size_t>(i - 1) * static_cast<size_t>(n_) + static_cast<size_t>(j - 1)];
    }

    const std::vector<int>& cells() const { return cells_; }

    bool operator==(const LatinSquare&) const = default;

private:
    int n_;
    std::vector<int> cells_;
};

// 0/1 point of R^(n^3) in the lexicographic coordinate order of triple_position.
struct BinaryVector {
    int n = 0;
    std::vector<uint8_t> bits;

    bool operator==(const BinaryVector&) const = default;

    std::string to_line() const {
        std::string s(bits.size(), '0');
        for (size_t p = 0; p < bits.size(); ++p)
            if (bits[p]) s[p] = '1';
        return s;
    }
};

inline BinaryVector embed(const LatinSquare& L) {
    const int n = L.size();
    BinaryVector v{n, std::vector<uint8_t>(static_cast<size_t>(n) * n * n, 0)};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            v.bits[static_cast<size_t>(triple_position({i, j, L.at(i, j)}, n))] = 1;
    return v;
}

// Inverse of embed.  Throws if v is not the embedding of a Latin square.
inline LatinSquare unembed(const BinaryVector& v) {
    const int n = v.n;
    if (n < 1 || v.bits.size() != static_cast<size_t>(n) * n * n)
        throw std::invalid_argument("binary vector has wrong length for its order");
    std::vector<int> cells(static_cast<size_t>(n) * n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int symbol = 0, hits = 0;
            for (int k = 1; k <= n; ++k)
                if (v.bits[static_cast<size_t>(triple_position({i, j, k}, n))]) {
                    symbol = k;
                    ++hits;
                }
            if (hits != 1)
                throw std::invalid_argument("cell (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") selects " + std::to_string(hits) + " symbols");
            cells[static_cast<size_t>(i - 1) * n + static_cast<size_t>(j - 1)] = symbol;
        }
    return LatinSquare(n, std::move(cells));  // row/column violations rejected here
}

// Triple of permutations acting on rows, columns and symbols respectively.
struct Isotopism {
    Permutation alpha, beta, gamma;

    Isotopism(Permutation a, Permutation b, Permutation c)
        : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)) {
        if (alpha.degree() != beta.degree() || beta.degree() != gamma.degree())
            throw std::invalid_argument("isotopism components must share one degree");
    }

    int degree() const { return alpha.degree(); }
    bool operator==(const Isotopism&) const = default;
};

inline Isotopism identity_isotopism(int n) {
    return Isotopism(Permutation::identity(n), Permutation::identity(n), Permutation::identity(n));
}

// Canonical isotopism with the given component cycle structures.
inline Isotopism representative_isotopism(const CycleStructure& la, const CycleStructure& lb,
                                          const CycleStructure& lc) {
    return Isotopism(representative_permutation(la), representative_permutation(lb),
                     representative_permutation(lc));
}

// L' with L'(alpha(i), beta(j)) = gamma(L(i, j)).
inline LatinSquare apply_isotopism(const Isotopism& T, const LatinSquare& L) {
    const int n = L.size();
    if (T.degree() != n) throw std::invalid_argument("isotopism degree differs from square order");
    std::vector<int> cells(static_cast<size_t>(n) * n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            cells[static_cast<size_t>(T.alpha(i) - 1) * n + static_cast<size_t>(T.beta(j) - 1)] = T.gamma(L.at(i, j));
    return LatinSquare(n, std::move(cells));
}

inline bool is_autotopism(const Isotopism& T, const LatinSquare& L) {
    const int n = L.size();
    if (T.degree() != n) throw std::invalid_argument("isotopism degree differs from square order");
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (L.at(T.alpha(i), T.beta(j)) != T.gamma(L.at(i, j))) return false;
    return true;
}

namespace detail {

inline void all_latin_squares_rec(int n, int cell, std::vector<int>& grid,
                                  std::vector<uint32_t>& row_used, std::vector<uint32_t>& col_used,
                                  long long& count, const std::function<void(const LatinSquare&)>& sink) {
    if (cell == n * n) {
        ++count;
        if (sink) sink(LatinSquare(n, grid));
        return;
    }
    const int r = cell / n, c = cell % n;
    for (int s = 1; s <= n; ++s) {
        const uint32_t bit = uint32_t{1} << s;
        if ((row_used[static_cast<size_t>(r)] | col_used[static_cast<size_t>(c)]) & bit) continue;
        row_used[static_cast<size_t>(r)] |= bit;
        col_used[static_cast<size_t>(c)] |= bit;
        grid[static_cast<size_t>(cell)] = s;
        all_latin_squares_rec(n, cell + 1, grid, row_used, col_used, count, sink);
        row_used[static_cast<size_t>(r)] &= ~bit;
        col_used[static_cast<size_t>(c)] &= ~bit;
    }
}

}  // namespace detail

// Generates every Latin square of order n (n <= 5) in lexicographic order of
// the row-major cell vector.  Returns the count; sink may be empty.
inline long long all_latin_squares(int n, const std::function<void(const LatinSquare&)>& sink = {}) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    if (n > 5) throw std::invalid_argument("exhaustive generation is limited to order <= 5");
    std::vector<int> grid(static_cast<size_t>(n) * n, 0);
    std::vector<uint32_t> row_used(static_cast<size_t>(n), 0), col_used(static_cast<size_t>(n), 0);
    long long count = 0;
    detail::all_latin_squares_rec(n, 0, grid, row_used, col_used, count, sink);
    return count;
}

// Text format: first line n, then n lines of n space-separated symbols.
inline std::string write_square_text(const LatinSquare& L) {
    std::ostringstream out;
    out << L.size() << "\n";
    for (int i = 1; i <= L.size(); ++i) {
        for (int j = 1; j <= L.size(); ++j) {
            if (j > 1) out << ' ';
            out << L.at(i, j);
        }
        out << "\n";
    }
    return out.str();
}

inline LatinSquare read_square_text(std::istream& in) {
    int n = 0;
    if (!(in >> n) || n < 1) throw std::invalid_argument("square file must start with the order n >= 1");
    std::vector<int> cells;
    cells.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int idx = 0; idx < n * n; ++idx) {
        int s = 0;
        if (!(in >> s))
            throw std::invalid_argument("square file ends early: expected " + std::to_string(n * n) +
                                        " cells, got " + std::to_string(idx));
        cells.push_back(s);
    }
    return LatinSquare(n, std::move(cells));
}

inline LatinSquare read_square_text(const std::string& text) {
    std::istringstream in(text);
    return read_square_text(in);
}

}  // namespace latpoly
