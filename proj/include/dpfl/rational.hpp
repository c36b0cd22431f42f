#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dpfl {

// All arithmetic in this project is exact. Rational is GMP's canonical
// arbitrary-precision rational; every value that reaches a comparison is in
// canonical form (gcd(|num|, den) = 1, den > 0).
//
// Do not construct values with mpq_class(p, q) directly: that constructor
// skips canonicalization. Use frac() or arithmetic on integers instead.
using Rational = mpq_class;

// p/q in canonical form. Throws InvalidRange on q == 0.
Rational frac(long p, long q = 1);

// Accepts "p", "p/q" and finite decimals ("3.1" -> 31/10), with an optional
// leading '-'. Throws ParseError on anything else (including q <= 0).
Rational parse_rational(std::string_view text);

// Canonical "p/q", or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& r);

// Rounded to `digits` fractional digits, half away from zero. A '~' suffix
// marks values whose decimal expansion was truncated.
std::string to_decimal_string(const Rational& r, int digits);

}  // namespace dpfl
