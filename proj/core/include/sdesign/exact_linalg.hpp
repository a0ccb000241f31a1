#pragma once

#include "sdesign/scalar.hpp"

#include <optional>
#include <vector>

namespace sdesign {

/// Dense row-major matrix of rationals.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form by exact Gauss-Jordan elimination. Pivots are
/// chosen by largest absolute value within the column. Returns the pivot
/// columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Solves a x = b exactly; nullopt when the system is inconsistent. Free
/// variables are set to zero.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace sdesign
