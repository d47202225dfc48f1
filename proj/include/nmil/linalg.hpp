#pragma once

#include <optional>

#include "nmil/base.hpp"

namespace nmil {

// Basis of {x in Z^n : <r,x> = 0 for every row r}.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, int n);

// Z-basis of the saturation (Q-span of the input) ∩ Z^n.  Empty input or
// zero vectors give the zero lattice (empty basis).  This is the spec's
// hermite_basis operation.
std::vector<IntVec> hermite_basis(const std::vector<IntVec>& vectors, int n);

// Rank over Q of the given row vectors.
int rank_of(const std::vector<IntVec>& rows);

// Solve sum_i x_i * rows[i] = target over Q.  nullopt if inconsistent.
std::optional<RatVec> solve_combination(const std::vector<IntVec>& rows, const IntVec& target);
std::optional<RatVec> solve_combination_rat(const std::vector<IntVec>& rows, const RatVec& target);

// Solve M y = rhs for square rational M (rows), error if singular.
RatVec solve_square(const std::vector<RatVec>& rows, const RatVec& rhs);

// Determinant of a square integer matrix given by rows.
Int det(const std::vector<IntVec>& rows);

}  // namespace nmil
