#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mhpp {

/// Arbitrary-precision rational; always kept in canonical form.
using Rational = mpq_class;

/// num/den in lowest terms (the two-argument mpq_class constructor does not
/// reduce).  Throws InputError when den == 0.
Rational ratio(long num, long den);
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q != 0). Throws InputError otherwise.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" for integers) representation.
std::string to_string(const Rational& q);

Integer binomial(long n, long k);

/// q^k for any integer k; q must be nonzero when k < 0.
Rational pow(const Rational& q, long k);

bool is_integer(const Rational& q);

/// Requires is_integer(q) and a value that fits in a long.
long to_long(const Rational& q);

}  // namespace mhpp
