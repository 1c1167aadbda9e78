#pragma once

#include "mouldkit/rational.hpp"

namespace mk {

// Generating function z/(e^z - 1); B_1 = -1/2.
Rational bernoulli(int n);

// Sum of d^l over positive divisors d of n. Throws std::domain_error for n <= 0.
Integer sigma(int l, long n);

bool is_prime(long n);

}  // namespace mk
