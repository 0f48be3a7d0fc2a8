#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace novikov {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// Canonical text form: "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

// Smallest integer >= x.
Integer ceil(const Rational& x);
// Largest integer <= x.
Integer floor(const Rational& x);

// x^k for k of either sign; x must be nonzero when k < 0.
Rational power(const Rational& x, long k);

inline Rational field_inverse(const Rational& x) { return 1 / x; }

}  // namespace novikov
