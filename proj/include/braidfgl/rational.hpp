#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace braidfgl {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" or "p"; canonical (reduced, positive denominator).
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace. Throws
// ParseError on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace braidfgl
