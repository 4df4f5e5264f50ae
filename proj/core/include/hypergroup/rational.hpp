#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypergroup {

/// Arbitrary-precision rational, always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

/// Parses "p/q", a signed integer, or a finite decimal such as "-0.125" or "2.5e-3".
/// The result is exact: "0.1" becomes 1/10. Throws DomainError on malformed input.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Exact binary expansion of a finite double.
Rational from_double(double x);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace hypergroup
