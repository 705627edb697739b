#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace descartes {

/// Exact rational number. GMP keeps mpq values canonical (lowest terms,
/// positive denominator) as long as every value is built through
/// `make_rational` / `parse_rational` or ordinary arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "n", "n/d" or a plain decimal such as "-0.125" exactly.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "num/den", with "/den" omitted when the denominator is 1.
std::string to_text(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

Rational abs_value(const Rational& q);

/// 2^k for any integer k.
Rational pow2(int k);

Rational power(const Rational& base, unsigned exponent);

/// Decimal rendering truncated toward zero to `digits` places. Only used for
/// human-readable reports; never as an input to further computation.
std::string to_decimal(const Rational& q, int digits);

}  // namespace descartes
