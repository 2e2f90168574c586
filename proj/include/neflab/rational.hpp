#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace neflab {

// Every class coordinate, slope and certificate coefficient is an exact rational.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q" and finite decimals such as "-1.25". Anything else
// (exponents, radicals, nan/inf) is rejected with std::invalid_argument.
Rational parse_rational(std::string_view text);

// Canonical "p" or "p/q" form; stable across runs.
std::string to_string(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// Smallest k / denominator (k integral) that is >= sqrt(value); value >= 0.
Rational sqrt_ceil(const Rational& value, const Integer& denominator);

Rational abs(const Rational& q);

// num/den in lowest terms; mpq_class(num, den) alone does not reduce.
Rational frac(long num, long den);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace neflab
