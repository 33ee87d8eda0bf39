#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nilrad {

// Arbitrary-precision rational in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws nilrad::Error on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Rounds a positive rational to `digits` significant digits, half-to-even, returning
/// the decimal string with trailing zeros kept ("1.00", "0.692").
std::string round_significant(const Rational& q, int digits);

/// Two-stage rounding used for Min columns: half-even to 4 significant digits, then to 3.
std::string min_decimal(const Rational& q);

double to_double(const Rational& q);

Integer lcm_of_denominators(const std::vector<Rational>& values);

}  // namespace nilrad
