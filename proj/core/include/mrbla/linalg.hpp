#pragma once

#include "mrbla/matrix.hpp"

#include <optional>

namespace mrbla {

struct LinearSolveResult {
    int rank = 0;
    int nullity = 0;
    std::vector<Vec> nullspace_basis;          // reduced-echelon kernel basis
    std::optional<Vec> particular_solution;    // only from solve(), when consistent
};

/// Exact fraction Gauss-Jordan elimination with a deterministic pivot rule:
/// columns are processed left to right and the first nonzero entry (top to
/// bottom among unused rows) becomes the pivot. rank + nullity = cols.
LinearSolveResult reduce(const Matrix& A);

/// Same elimination carried out on [A | b]; fills particular_solution when
/// the system A x = b is consistent (free variables set to zero).
LinearSolveResult solve(const Matrix& A, const Vec& b);

} // namespace mrbla
