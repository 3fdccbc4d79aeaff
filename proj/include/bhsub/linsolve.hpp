#pragma once

#include <vector>

#include "bhsub/rational.hpp"

namespace bhsub {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

/// Exact solve of A x = b by Gaussian elimination over the rationals.
/// Pivot choice is the first nonzero entry in column order; exact
/// arithmetic needs no pivoting for stability and this keeps the
/// elimination deterministic.
///
/// Throws invalid_input when A is not square or sizes disagree,
/// singular_matrix when A is rank deficient.
RationalVector rat_linsolve(RationalMatrix A, RationalVector b);

} // namespace bhsub
