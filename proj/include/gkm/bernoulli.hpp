#pragma once

#include "gkm/rational.hpp"

namespace gkm {

// B_m with the generating-function convention t e^{tx}/(e^t - 1), so B_1 = -1/2.
Rational bernoulli_number(int m);

// B_m(x) = sum_k C(m,k) B_k x^{m-k}; m bounded by kMaxBernoulliDegree.
inline constexpr int kMaxBernoulliDegree = 24;
Rational bernoulli_polynomial(int m, const Rational& x);

}  // namespace gkm
