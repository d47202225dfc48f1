#pragma once

#include <initializer_list>

#include "nmil/invariants.hpp"
#include "nmil/parse.hpp"

namespace nmil::test {

inline IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.push_back(x);
    return v;
}

inline RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }

inline Support sup(int n, std::initializer_list<std::initializer_list<long>> ms) {
    std::vector<IntVec> vs;
    for (const auto& m : ms) vs.push_back(iv(m));
    return Support::make(n, std::move(vs));
}

inline LatticePolytope hull(int n, std::initializer_list<std::initializer_list<long>> ps) {
    std::vector<IntVec> vs;
    for (const auto& p : ps) vs.push_back(iv(p));
    return convex_hull(n, vs);
}

inline UniPoly upoly(std::initializer_list<long> coeffs) {
    UniPoly p;
    for (long c : coeffs) p.c.push_back(Int(c));
    p.trim();
    return p;
}

inline RotationNumber rot(long num, long den) { return RotationNumber(Rat(num, den)); }

// the running example: f = x1^7 + x1^3 x2 + x1^2 x2^4
inline Support example_support() { return sup(2, {{7, 0}, {3, 1}, {2, 4}}); }
inline Support cusp_support() { return sup(2, {{2, 0}, {0, 3}}); }
inline Support smooth_support() { return sup(2, {{1, 0}, {0, 1}}); }

// affine form taking the given integer values at the vertices of a simplex
inline AffineForm interpolate_values(const LatticePolytope& simplex,
                                     const std::vector<long>& vals) {
    int n = simplex.ambient;
    size_t k = simplex.vertices.size();
    std::vector<IntVec> cols;
    for (int j = 0; j < n; ++j) {
        IntVec col(k);
        for (size_t i = 0; i < k; ++i) col[i] = simplex.vertices[i][j];
        cols.push_back(col);
    }
    cols.push_back(IntVec(k, 1));
    IntVec target(k);
    for (size_t i = 0; i < k; ++i) target[i] = vals[i];
    auto sol = solve_combination(cols, target);
    if (!sol) throw calc_error("interpolate_values: no affine interpolation");
    AffineForm f;
    f.lin.assign(n, Rat(0));
    for (int j = 0; j < n; ++j) f.lin[j] = (*sol)[j];
    f.cst = (*sol)[n];
    return f;
}

// spans the same lattice?
inline bool same_lattice(const std::vector<IntVec>& basis, const std::vector<IntVec>& expected,
                         int n) {
    auto integral_in = [&](const IntVec& v, const std::vector<IntVec>& B) {
        if (B.empty()) return vec_is_zero(v);
        auto sol = solve_combination(B, v);
        if (!sol) return false;
        for (const auto& q : *sol)
            if (rat_den(q) != 1) return false;
        return true;
    };
    if (basis.size() != expected.size()) return false;
    for (const auto& v : basis)
        if (!integral_in(v, expected)) return false;
    for (const auto& v : expected)
        if (!integral_in(v, basis)) return false;
    return true;
}

}  // namespace nmil::test
