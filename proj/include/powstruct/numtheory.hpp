#pragma once

#include <vector>

#include "powstruct/rational.hpp"

namespace powstruct {

int mobius(int n);
int euler_phi(int n);

/// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);

Integer factorial(int n);
Integer binomial(int n, int k);

/// B_n with B_1 = -1/2, from sum_{j=0}^{m} C(m+1, j) B_j = 0.
Rational bernoulli(int n);

}  // namespace powstruct
