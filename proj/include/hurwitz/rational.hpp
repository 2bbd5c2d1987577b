#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hurwitz {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// "num/den" decimal form; the denominator is always written, e.g. "3/1".
std::string to_string(const Rational& q);

/// Parses "num/den" or "num". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned n);

/// Integer power with a nonnegative exponent.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace hurwitz
