#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wkit {

/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses `p`, `-p` or `p/q`. Throws ParseError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

} // namespace wkit
