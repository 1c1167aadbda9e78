#pragma once

#include <gmpxx.h>

#include <string>

namespace mk {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& s);

Integer factorial(int n);
Integer binomial(int n, int k);

}  // namespace mk
