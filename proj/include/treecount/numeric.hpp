#pragma once

#include <gmpxx.h>

#include <string>

namespace treecount {

/// Exact non-negative spanning-tree count.
using Count = mpz_class;

/// Exact rational in canonical (gcd-reduced, positive denominator) form.
using Rational = mpq_class;

/// base^exponent for any integer exponent; base must be non-zero when the
/// exponent is negative.
Rational power(const Rational& base, long exponent);
Count power(const Count& base, unsigned long exponent);

bool is_integral(const Rational& value);

/// Numerator of an integral rational. Throws std::domain_error otherwise.
Count to_count(const Rational& value);

std::string to_string(const Count& value);
std::string to_string(const Rational& value);

/// Parses "p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);

}  // namespace treecount
