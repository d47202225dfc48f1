#pragma once

#include "nmil/base.hpp"

namespace nmil {

// Finite ranked poset.  Face lattices are bounded and Eulerian; cell posets
// of subdivisions share the unique minimum (the empty cell) but may have
// several maximal elements.
struct GradedPoset {
    std::vector<int> rank;
    std::vector<std::vector<char>> leq_;  // leq_[a][b] : a <= b

    int size() const { return static_cast<int>(rank.size()); }
    bool leq(int a, int b) const { return leq_[a][b] != 0; }
    std::vector<int> interval(int a, int b) const;

    // test support
    bool is_graded() const;
    bool eulerian_interval(int a, int b) const;
};

}  // namespace nmil
