#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace lring {

// Exact arithmetic everywhere; no floating point is used anywhere in the
// library. mpq_rational keeps values reduced with a positive denominator.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

Integer factorial_int(int n);

// base^exp with negative exponents allowed; base must be nonzero when exp < 0.
Rational rational_pow(const Rational& base, int exp);

// Accepts "3", "-3", "1/2", "-7/4".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

}  // namespace lring
