#include "rees/core/polynomial.hpp"

#include <algorithm>

#include "rees/core/errors.hpp"

namespace rees::core {

namespace {

Rational rational_power(const Rational& base, int exponent) {
  Rational r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::string coefficient_text(const Rational& c, bool leading, bool has_monomial) {
  std::string sign;
  Rational magnitude = c;
  if (c < 0) {
    sign = leading ? "-" : " - ";
    magnitude = -c;
  } else if (!leading) {
    sign = " + ";
  }
  if (has_monomial && magnitude == 1) return sign;
  std::string body = magnitude.get_str();
  return sign + body + (has_monomial ? "*" : "");
}

std::string power_text(const std::string& var, int power) {
  if (power == 0) return "";
  if (power == 1) return var;
  return var + "^" + std::to_string(power);
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Polynomial Polynomial::interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size() || xs.empty()) throw InputError("interpolation needs matching, nonempty samples");
  const std::size_t k = xs.size();
  std::vector<std::vector<Rational>> matrix(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < k; ++j) {
      matrix[i][j] = p;
      p *= xs[i];
    }
  }
  auto solution = solve_linear(std::move(matrix), std::vector<Rational>(ys.begin(), ys.end()));
  if (!solution) throw InputError("interpolation nodes must be distinct");
  return Polynomial(std::move(*solution));
}

Rational Polynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coefficients_.size())) return 0;
  return coefficients_[static_cast<std::size_t>(power)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational r = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) r = r * x + *it;
  return r;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coefficients_.empty()) return "0";
  std::string s;
  bool leading = true;
  for (int p = degree(); p >= 0; --p) {
    const Rational& c = coefficients_[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    s += coefficient_text(c, leading, p > 0) + power_text(var, p);
    leading = false;
  }
  return s;
}

BivariatePolynomial::BivariatePolynomial(std::map<Monomial, Rational> terms) {
  for (auto& [m, c] : terms) {
    if (c != 0) terms_.emplace(m, std::move(c));
  }
}

Rational BivariatePolynomial::coefficient(int x_power, int y_power) const {
  auto it = terms_.find({x_power, y_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BivariatePolynomial::total_degree() const {
  int degree = -1;
  for (const auto& [m, c] : terms_) degree = std::max(degree, m.first + m.second);
  return degree;
}

BivariatePolynomial BivariatePolynomial::homogeneous_part(int degree) const {
  std::map<Monomial, Rational> part;
  for (const auto& [m, c] : terms_) {
    if (m.first + m.second == degree) part.emplace(m, c);
  }
  return BivariatePolynomial(std::move(part));
}

Rational BivariatePolynomial::operator()(const Rational& x, const Rational& y) const {
  Rational r = 0;
  for (const auto& [m, c] : terms_) r += c * rational_power(x, m.first) * rational_power(y, m.second);
  return r;
}

Polynomial BivariatePolynomial::along_ray(const Rational& slope) const {
  std::vector<Rational> coefficients(static_cast<std::size_t>(std::max(0, total_degree() + 1)));
  for (const auto& [m, c] : terms_) {
    coefficients[static_cast<std::size_t>(m.first + m.second)] += c * rational_power(slope, m.first);
  }
  return Polynomial(std::move(coefficients));
}

std::string BivariatePolynomial::to_string(const std::string& x, const std::string& y) const {
  if (terms_.empty()) return "0";
  // Descending total degree, then descending X power.
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string s;
  bool leading = true;
  for (const auto& [m, c] : ordered) {
    std::string mono = power_text(x, m.first);
    const std::string ypart = power_text(y, m.second);
    if (!mono.empty() && !ypart.empty()) mono += "*";
    mono += ypart;
    s += coefficient_text(c, leading, !mono.empty()) + mono;
    leading = false;
  }
  return s;
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> matrix,
                                                  std::vector<Rational> rhs) {
  const std::size_t n = matrix.size();
  if (rhs.size() != n) throw InputError("solve_linear: dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && matrix[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(matrix[pivot], matrix[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || matrix[row][col] == 0) continue;
      const Rational factor = matrix[row][col] / matrix[col][col];
      for (std::size_t k = col; k < n; ++k) matrix[row][k] -= factor * matrix[col][k];
      rhs[row] -= factor * rhs[col];
    }
  }
  std::vector<Rational> solution(n);
  for (std::size_t i = 0; i < n; ++i) solution[i] = rhs[i] / matrix[i][i];
  return solution;
}

}  // namespace rees::core
