#pragma once

// Cycle-structure triples used across the test suites, given as count vectors
// (counts[len-1] = number of cycles of length len).

#include <vector>

#include "latpoly/latin_square.hpp"
#include "latpoly/permutation.hpp"

namespace test_support {

struct StructureTripleSpec {
    std::vector<int> la, lb, lc;
};

inline latpoly::Isotopism make_isotopism(const StructureTripleSpec& s) {
    const int n = static_cast<int>(s.la.size());
    return latpoly::representative_isotopism(latpoly::make_cycle_structure(n, s.la),
                                             latpoly::make_cycle_structure(n, s.lb),
                                             latpoly::make_cycle_structure(n, s.lc));
}

// Nontrivial symmetry classes with known solution counts at orders 2..5.
inline const std::vector<StructureTripleSpec>& small_structures() {
    static const std::vector<StructureTripleSpec> rows = {
        {{0, 1}, {0, 1}, {2, 0}},
        {{0, 0, 1}, {0, 0, 1}, {0, 0, 1}},
        {{0, 0, 1}, {0, 0, 1}, {3, 0, 0}},
        {{1, 1, 0}, {1, 1, 0}, {1, 1, 0}},
        {{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 2, 0, 0}},
        {{0, 0, 0, 1}, {0, 0, 0, 1}, {2, 1, 0, 0}},
        {{0, 0, 0, 1}, {0, 0, 0, 1}, {4, 0, 0, 0}},
        {{0, 2, 0, 0}, {0, 2, 0, 0}, {0, 2, 0, 0}},
        {{0, 2, 0, 0}, {0, 2, 0, 0}, {2, 1, 0, 0}},
        {{0, 2, 0, 0}, {0, 2, 0, 0}, {4, 0, 0, 0}},
        {{1, 0, 1, 0}, {1, 0, 1, 0}, {1, 0, 1, 0}},
        {{2, 1, 0, 0}, {2, 1, 0, 0}, {2, 1, 0, 0}},
        {{0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}},
        {{0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}, {5, 0, 0, 0, 0}},
        {{1, 0, 0, 1, 0}, {1, 0, 0, 1, 0}, {1, 0, 0, 1, 0}},
        {{1, 2, 0, 0, 0}, {1, 2, 0, 0, 0}, {1, 2, 0, 0, 0}},
        {{2, 0, 1, 0, 0}, {2, 0, 1, 0, 0}, {2, 0, 1, 0, 0}},
    };
    return rows;
}

}  // namespace test_support
