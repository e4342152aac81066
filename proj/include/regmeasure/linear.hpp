// Exact linear algebra over integers and rationals.

#ifndef REGMEASURE_LINEAR_HPP
#define REGMEASURE_LINEAR_HPP

#include <vector>

#include "regmeasure/core.hpp"

namespace regmeasure {

using IntMatrix = std::vector<std::vector<BigInt>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A·X = B for a square non-singular integer matrix A and a rational
/// right-hand side with any number of columns, using fraction-free (Bareiss)
/// elimination with row pivoting. Throws std::domain_error when A is singular.
RationalMatrix solve_exact(IntMatrix a, RationalMatrix rhs);

/// Single right-hand-side convenience wrapper.
std::vector<Rational> solve_exact(IntMatrix a, const std::vector<Rational>& rhs);

}  // namespace regmeasure

#endif  // REGMEASURE_LINEAR_HPP
