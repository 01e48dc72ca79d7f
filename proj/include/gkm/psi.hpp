#pragma once

#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

// Exact <tau_{a_1} ... tau_{a_n}>_g = int_{Mbar_{g,n}} psi_1^{a_1}...psi_n^{a_n}.
// Zero unless (g,n) is stable and sum(a) = 3g-3+n.  Computed by the string and
// dilaton equations with the DVV recursion on the largest exponent; memoized.
Rational psi_intersection(int g, std::vector<int> exponents);

}  // namespace gkm
