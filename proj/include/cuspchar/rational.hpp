#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cuspchar {

/// Exact rational number. GMP keeps it canonical: positive denominator and
/// coprime numerator/denominator after every arithmetic operation.
using Rational = mpq_class;

/// Parses "n", "-n", "n/d" or "-n/d" (decimal digits only).
/// Throws InputError on malformed text and ZeroDenominator for d == 0.
Rational parse_rational(std::string_view text);

/// "n/d", or just "n" when the denominator is 1. Never a float.
std::string to_string(const Rational& value);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// base^exp for a non-negative integer exponent.
Rational pow(const Rational& base, std::int64_t exp);

}  // namespace cuspchar
