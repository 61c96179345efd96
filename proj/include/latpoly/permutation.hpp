#pragma once

// Permutations of [n] = {1,...,n} with cycle-notation parsing/printing and
// cycle-structure queries.  All public interfaces are 1-based.

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latpoly {

class Permutation {
public:
    explicit Permutation(int n) : img_(static_cast<size_t>(check_degree(n)) + 1) {
        std::iota(img_.begin(), img_.end(), 0);
    }

    static Permutation identity(int n) { return Permutation(n); }

    // image1 = (p(1), p(2), ..., p(n)).
    static Permutation from_image(const std::vector<int>& image1) {
        const int n = static_cast<int>(image1.size());
        Permutation p(n);
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        for (int x = 1; x <= n; ++x) {
            const int y = image1[static_cast<size_t>(x) - 1];
            if (y < 1 || y > n)
                throw std::invalid_argument("permutation image out of range: " + std::to_string(y));
            if (seen[static_cast<size_t>(y)])
                throw std::invalid_argument("permutation image repeats element " + std::to_string(y));
            seen[static_cast<size_t>(y)] = 1;
            p.img_[static_cast<size_t>(x)] = y;
        }
        return p;
    }

    int degree() const { return static_cast<int>(img_.size()) - 1; }

    int apply(int x) const {
        assert(1 <= x && x <= degree());
        return img_[static_cast<size_t>(x)];
    }
    int operator()(int x) const { return apply(x); }

    bool is_identity() const {
        for (int x = 1; x <= degree(); ++x)
            if (img_[static_cast<size_t>(x)] != x) return false;
        return true;
    }

    Permutation inverse() const {
        Permutation q(degree());
        for (int x = 1; x <= degree(); ++x) q.img_[static_cast<size_t>(apply(x))] = x;
        return q;
    }

    bool operator==(const Permutation&) const = default;

private:
    static int check_degree(int n) {
        if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
        return n;
    }

    std::vector<int> img_;  // img_[x] = p(x); img_[0] unused
};

// (p * q)(x) = p(q(x)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("cannot compose permutations of different degrees");
    std::vector<int> image(static_cast<size_t>(p.degree()));
    for (int x = 1; x <= p.degree(); ++x) image[static_cast<size_t>(x) - 1] = p.apply(q.apply(x));
    return Permutation::from_image(image);
}

// s * p * s^-1.
inline Permutation conjugate(const Permutation& p, const Permutation& s) {
    return compose(compose(s, p), s.inverse());
}

using Cycle = std::vector<int>;

// Each cycle is rotated so its minimum element comes first; cycles (fixed
// points included, as singletons) are sorted by their minimum element.
struct CycleDecomposition {
    int degree = 0;
    std::vector<Cycle> cycles;
};

inline CycleDecomposition cycle_decomposition(const Permutation& p) {
    const int n = p.degree();
    CycleDecomposition dec;
    dec.degree = n;
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        Cycle c;
        int x = start;
        do {
            seen[static_cast<size_t>(x)] = 1;
            c.push_back(x);
            x = p.apply(x);
        } while (x != start);
        dec.cycles.push_back(std::move(c));  // start is the cycle minimum
    }
    return dec;
}

// counts[len] = number of cycles of that length; counts[0] unused.
struct CycleStructure {
    int degree = 0;
    std::vector<int> counts;

    int cycle_count() const { return std::accumulate(counts.begin(), counts.end(), 0); }
    int fixed_point_count() const { return counts.size() > 1 ? counts[1] : 0; }
    bool operator==(const CycleStructure&) const = default;
};

inline CycleStructure cycle_structure(const Permutation& p) {
    CycleStructure ls;
    ls.degree = p.degree();
    ls.counts.assign(static_cast<size_t>(p.degree()) + 1, 0);
    for (const Cycle& c : cycle_decomposition(p).cycles) ++ls.counts[c.size()];
    return ls;
}

inline long long permutation_order(const Permutation& p) {
    long long ord = 1;
    for (const Cycle& c : cycle_decomposition(p).cycles)
        ord = std::lcm(ord, static_cast<long long>(c.size()));
    return ord;
}

// p^t(x) for any integer t (negative powers allowed).
inline int power_apply(const Permutation& p, long long t, int x) {
    // Walk the cycle containing x to learn its length, then step t mod length.
    std::vector<int> cyc{x};
    for (int y = p.apply(x); y != x; y = p.apply(y)) cyc.push_back(y);
    const long long len = static_cast<long long>(cyc.size());
    const long long r = ((t % len) + len) % len;
    return cyc[static_cast<size_t>(r)];
}

// Cycle notation, e.g. "(1 2 3)(4 5)".  Fixed points may be included as
// singleton cycles; both "" and "()" denote the identity.
inline Permutation parse_permutation(std::string_view text, int n) {
    std::vector<int> image(static_cast<size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);

    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw std::invalid_argument("expected '(' in cycle notation at position " + std::to_string(pos));
        ++pos;
        Cycle cyc;
        for (;;) {
            skip_ws();
            if (pos >= text.size()) throw std::invalid_argument("unterminated cycle in cycle notation");
            if (text[pos] == ')') { ++pos; break; }
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw std::invalid_argument(std::string("unexpected character '") + text[pos] + "' in cycle notation");
            int value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                if (value > 1000000) throw std::invalid_argument("cycle element out of range");
                ++pos;
            }
            if (value < 1 || value > n)
                throw std::invalid_argument("cycle element " + std::to_string(value) + " out of range [1," + std::to_string(n) + "]");
            if (used[static_cast<size_t>(value)])
                throw std::invalid_argument("element " + std::to_string(value) + " appears twice in cycle notation");
            used[static_cast<size_t>(value)] = 1;
            cyc.push_back(value);
        }
        for (size_t u = 0; u < cyc.size(); ++u)
            image[static_cast<size_t>(cyc[u]) - 1] = cyc[(u + 1) % cyc.size()];
        skip_ws();
    }
    return Permutation::from_image(image);
}

// Inverse of parse_permutation: min-first cycles sorted by minimum, fixed
// points omitted, identity printed as "()".
inline std::string print_cycles(const Permutation& p) {
    std::string out;
    for (const Cycle& c : cycle_decomposition(p).cycles) {
        if (c.size() == 1) continue;
        out += '(';
        for (size_t u = 0; u < c.size(); ++u) {
            if (u) out += ' ';
            out += std::to_string(c[u]);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

// Validates that counts[] describes a permutation of [degree].
inline CycleStructure make_cycle_structure(int degree, const std::vector<int>& counts_by_length) {
    if (degree < 1) throw std::invalid_argument("cycle structure degree must be >= 1");
    if (static_cast<int>(counts_by_length.size()) != degree)
        throw std::invalid_argument("cycle structure needs exactly one count per length 1..n");
    long long total = 0;
    for (int len = 1; len <= degree; ++len) {
        const int c = counts_by_length[static_cast<size_t>(len) - 1];
        if (c < 0) throw std::invalid_argument("cycle structure counts must be nonnegative");
        total += static_cast<long long>(len) * c;
    }
    if (total != degree)
        throw std::invalid_argument("cycle structure lengths sum to " + std::to_string(total) +
                                    ", expected " + std::to_string(degree));
    CycleStructure ls;
    ls.degree = degree;
    ls.counts.assign(static_cast<size_t>(degree) + 1, 0);
    for (int len = 1; len <= degree; ++len) ls.counts[static_cast<size_t>(len)] = counts_by_length[static_cast<size_t>(len) - 1];
    return ls;
}

// Canonical representative: cycles laid out over consecutive integers in
// ascending cycle length, e.g. counts (2,1,0,0) -> (3 4).
inline Permutation representative_permutation(const CycleStructure& ls) {
    std::vector<int> image(static_cast<size_t>(ls.degree));
    int next = 1;
    for (int len = 1; len <= ls.degree; ++len) {
        for (int c = 0; c < ls.counts[static_cast<size_t>(len)]; ++c) {
            const int first = next;
            for (int u = 0; u < len; ++u) {
                const int x = first + u;
                const int y = (u + 1 == len) ? first : x + 1;
                image[static_cast<size_t>(x) - 1] = y;
            }
            next += len;
        }
    }
    return Permutation::from_image(image);
}

}  // namespace latpoly
