#pragma once

#include <optional>
#include <vector>

#include "qshapo/scalars.hpp"

namespace qshapo {

using MatrixQ = std::vector<std::vector<RatQ>>;  // row-major

// Inverse of a square matrix, or nullopt when singular.
std::optional<MatrixQ> invert(const MatrixQ& a);

// Solves a x = b for a possibly non-square a. Returns nullopt when inconsistent;
// free variables are set to zero.
std::optional<std::vector<RatQ>> solve(const MatrixQ& a, const std::vector<RatQ>& b);

}  // namespace qshapo
