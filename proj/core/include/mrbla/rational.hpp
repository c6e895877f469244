#pragma once

#include <gmpxx.h>

#include <string>

namespace mrbla {

/// Exact rational scalar over the ground field. GMP keeps every value in
/// canonical form (gcd(|num|, den) = 1, den > 0), so arithmetic is exact and
/// equality is structural. No floating point anywhere in the engine.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational x(num, den);
    x.canonicalize();
    return x;
}

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q" with
/// q > 1 and a minus sign (if any) on p only.
std::string to_string(const Rational& x);

/// Parses "p" or "p/q". Throws MalformedInputError on syntax errors or a zero
/// denominator. In strict mode the text must already be canonical ("2/4",
/// "3/1", "-0" and "007" are rejected); otherwise the value is canonicalized.
Rational rational_from_string(const std::string& text, bool strict = true);

Rational pow_rational(const Rational& base, int exponent);

} // namespace mrbla
