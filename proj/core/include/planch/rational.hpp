#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace planch {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "a/b", "-a/b" (surrounding blanks allowed). Throws InputError.
Rational parse_rational(std::string_view text);

/// n/d in lowest terms (mpq_class(n, d) does not canonicalize). Throws InputError for d = 0.
Rational ratio(const Integer& n, const Integer& d);

/// Canonical "a/b" (or "a" when the denominator is 1).
std::string to_string(const Rational& r);

/// Representative of r modulo 1 in [0, 1).
Rational mod1(const Rational& r);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);
bool is_integer(const Rational& r);

/// Exact p-adic valuation of a nonzero integer.
long valuation(const Integer& n, long p);

/// Exact p-adic valuation of a nonzero rational.
long valuation(const Rational& r, long p);

Rational pow(const Rational& base, long exponent);

double to_double(const Rational& r);

/// Closest rational with denominator at most max_den (continued fractions).
Rational approximate(double x, long max_den);

}  // namespace planch
