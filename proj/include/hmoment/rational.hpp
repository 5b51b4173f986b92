#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hmoment {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. Every exact identity in the library lives in this field.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or a plain decimal such as "-1.25" or "3e-2".
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Parses a decimal literal exactly (no binary rounding).
Rational parse_decimal(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

Rational pow(const Rational& base, unsigned long exponent);

/// Exact conversion; a finite double is a dyadic rational.
Rational from_double(double value);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace hmoment
