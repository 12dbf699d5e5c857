#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyspace {

/// Exact rational number. mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "7", "-3/4", "0.15", "1e-2" style strings exactly. Throws
/// Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q" in lowest terms, including integers ("2/1", "0/1").
std::string to_string(const Rational& value);

/// Decimal rendering rounded half away from zero to `digits` places.
/// For display only.
std::string to_decimal(const Rational& value, int digits);

Rational factorial(unsigned k);

}  // namespace polyspace
