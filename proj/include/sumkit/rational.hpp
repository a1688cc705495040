#pragma once

// Exact rational scalars. GMP's mpq_class keeps every result of arithmetic in
// lowest terms with a positive denominator; the helpers below make sure values
// built from raw numerator/denominator pairs are canonical too.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace sumkit {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Always "p/q" (denominator printed even when it is 1).
std::string to_fraction_string(const Rational& q);

/// Accepts "p", "p/q", with optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace sumkit
