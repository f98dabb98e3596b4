#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rees/core/rational.hpp"

namespace rees::core {

// Dense univariate polynomial over Q, coefficients from the constant term up.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  // Unique polynomial of degree < xs.size() through the given points.
  static Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  Rational coefficient(int power) const;
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  Rational operator()(const Rational& x) const;
  bool operator==(const Polynomial&) const = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

// Polynomial in X (first exponent) and Y (second exponent).
class BivariatePolynomial {
 public:
  using Monomial = std::pair<int, int>;

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::map<Monomial, Rational> terms);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(int x_power, int y_power) const;
  int total_degree() const;
  BivariatePolynomial homogeneous_part(int degree) const;

  Rational operator()(const Rational& x, const Rational& y) const;
  // P(c*n, n) as a polynomial in n.
  Polynomial along_ray(const Rational& slope) const;
  bool operator==(const BivariatePolynomial&) const = default;

  std::string to_string(const std::string& x = "X", const std::string& y = "Y") const;

 private:
  std::map<Monomial, Rational> terms_;
};

// Exact Gaussian elimination; nullopt when the system is singular.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> matrix,
                                                  std::vector<Rational> rhs);

}  // namespace rees::core
