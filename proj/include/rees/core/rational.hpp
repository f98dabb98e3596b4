#pragma once

#include <gmpxx.h>

#include <string>

namespace rees {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);
Integer binomial(long n, long k);

// Number of monomials of the given total degree in `nvars` variables.
Integer monomial_count(int nvars, long degree);

Integer ipow(long base, unsigned long exponent);

// num/den in lowest terms; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

// Always rendered as "p/q" with q >= 1, e.g. "3/1", "-1/2".
std::string to_fraction_string(const Rational& q);
Rational parse_fraction(const std::string& text);
Rational abs(const Rational& q);
Integer floor_div(const Rational& q);

}  // namespace rees
