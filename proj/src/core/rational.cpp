#include "rees/core/rational.hpp"

#include "rees/core/errors.hpp"

namespace rees {

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer monomial_count(int nvars, long degree) {
  if (degree < 0) return 0;
  if (nvars == 0) return degree == 0 ? 1 : 0;
  return binomial(degree + nvars - 1, nvars - 1);
}

Integer ipow(long base, unsigned long exponent) {
  Integer r;
  Integer b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exponent);
  return r;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
  // Decimal notation such as "1.25" or "-0.5".
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    const bool negative = !whole.empty() && whole[0] == '-';
    const std::string digits = (negative ? whole.substr(1) : whole) + frac;
    Integer num;
    if (digits.empty() || frac.find_first_not_of("0123456789") != std::string::npos ||
        num.set_str(digits, 10) != 0 || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("not a rational number: '" + text + "'");
    }
    return make_rational(negative ? Integer(-num) : num, ipow(10, frac.size()));
  }
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw InputError("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Integer floor_div(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace rees
