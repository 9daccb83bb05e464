#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace treeot {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p", or a finite decimal such as "0.25" into a canonical
/// rational. Throws Error(ParseError) on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical lossless form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Rounded decimal rendering. Display only; the rational stays authoritative.
std::string to_decimal(const Rational& value, int significant_digits = 12);

/// base^exponent for any integer exponent; base must be nonzero when exponent < 0.
Rational power(const Rational& base, long exponent);

inline Rational power(long base, long exponent) { return power(Rational(base), exponent); }

inline int sign(const Rational& value) { return sgn(value); }

inline Rational abs_value(const Rational& value) { return sign(value) < 0 ? Rational(-value) : value; }

double to_double(const Rational& value);

/// Canonical num/den. Throws Error(InvalidParams) when den == 0.
Rational ratio(long num, long den);

}  // namespace treeot
