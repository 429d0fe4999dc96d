#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace resultants {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// "p/q" with q > 0 and gcd(p, q) = 1, or "p" when q = 1.
std::string to_string(const Rational& q);

// Accepts "p", "p/q", optional sign; no decimal points.
Rational parse_rational(std::string_view text);

std::size_t bit_length(const Integer& z);
std::size_t bit_length(const Rational& q);

Rational pow(const Rational& base, unsigned long exponent);

}  // namespace resultants
