#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace qbk {

/// Exact rational, always stored reduced with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);

/// Accepts "n", "-n", "n/d". Throws ParseError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

/// The nonnegative rational r with r*r == x, if one exists.
std::optional<Rational> rational_sqrt(const Rational& x);

/// x^e for any integer e; throws DivisionByZero for 0^e with e < 0.
Rational pow(const Rational& x, long e);

Integer binomial(long n, long k);

}  // namespace qbk
