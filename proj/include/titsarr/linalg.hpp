#pragma once

#include <optional>
#include <vector>

#include "titsarr/numeric.hpp"

namespace titsarr {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// In-place reduced row echelon form with deterministic pivoting (first
// nonzero row per column). Returns the rank and the pivot columns.
std::size_t rref(RatMat& m, std::vector<std::size_t>* pivot_cols = nullptr);

// Basis of { x : m x = 0 }, one vector per free column, in column order.
// Each basis vector has value 1 at its free column.
std::vector<RatVec> nullspace(const RatMat& m, std::size_t cols);

// Solves m x = b exactly; nullopt when inconsistent. When the system is
// underdetermined the free variables are set to zero.
std::optional<RatVec> solve(RatMat m, const RatVec& b);

// Scales a nonzero rational vector to a primitive integer vector with
// positive first nonzero entry.
std::vector<Int> primitive_integer(const RatVec& v);

}  // namespace titsarr
