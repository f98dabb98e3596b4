#include "rees/density/grid.hpp"

#include <algorithm>

#include "rees/core/errors.hpp"

namespace rees::density {

std::string to_string(DensityKind kind) {
  switch (kind) {
    case DensityKind::Adic: return "adic";
    case DensityKind::Saturated: return "saturated";
    case DensityKind::Epsilon: return "epsilon";
    case DensityKind::Cumulative: return "cumulative";
  }
  return "unknown";
}

DensityKind parse_density_kind(const std::string& text) {
  if (text == "adic") return DensityKind::Adic;
  if (text == "saturated") return DensityKind::Saturated;
  if (text == "epsilon") return DensityKind::Epsilon;
  if (text == "cumulative") return DensityKind::Cumulative;
  throw InputError("unknown density kind '" + text + "' (expected adic, saturated, epsilon or cumulative)");
}

std::string to_string(Extrapolation method) {
  return method == Extrapolation::Raw ? "raw" : "richardson";
}

void GridSpec::validate() const {
  if (step <= 0) throw InputError("grid step must be positive");
  if (upper < lower) throw InputError("grid upper bound lies below the lower bound");
  if ((upper - lower) / step > 1'000'000) throw InputError("grid has more than 10^6 points");
}

std::vector<Rational> GridSpec::points() const {
  validate();
  std::vector<Rational> xs;
  for (Rational x = lower; x <= upper; x += step) xs.push_back(x);
  return xs;
}

GridSpec default_grid(const core::TermModule& m) {
  const long c0 = m.ambient().support_offset();
  const long top = m.is_zero() ? 0 : m.max_generator_degree();
  return GridSpec{Rational(-c0 - 1), Rational(top + 2), Rational(1, 8)};
}

std::vector<int> default_ladder() { return {8, 16, 24, 32, 40}; }

Rational normalization(DensityKind kind, int d, int e, int n) {
  const int exponent = kind == DensityKind::Cumulative ? d + e - 1 : d + e - 2;
  return make_rational(factorial(static_cast<unsigned long>(d + e - 1)),
                  ipow(n, static_cast<unsigned long>(exponent)));
}

const Rational& DensityGrid::value(int n, std::size_t x_index) const {
  auto it = std::find(sampled.begin(), sampled.end(), n);
  if (it == sampled.end()) throw InputError("n = " + std::to_string(n) + " was not sampled");
  return values.at(x_index)[static_cast<std::size_t>(it - sampled.begin())];
}

std::vector<Rational> DensityGrid::row(int n) const {
  std::vector<Rational> r;
  r.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r.push_back(value(n, i));
  return r;
}

std::size_t DensityGrid::index_of(const Rational& point) const {
  auto it = std::find(x.begin(), x.end(), point);
  if (it == x.end()) throw InputError("x = " + point.get_str() + " is not a grid point");
  return static_cast<std::size_t>(it - x.begin());
}

Rational trapezoid(const std::vector<Rational>& xs, const std::vector<Rational>& ys,
                   const Rational& upto) {
  if (xs.size() != ys.size()) throw InputError("trapezoid: size mismatch");
  Rational area = 0;
  for (std::size_t i = 0; i + 1 < xs.size() && xs[i + 1] <= upto; ++i) {
    area += (xs[i + 1] - xs[i]) * (ys[i] + ys[i + 1]) / 2;
  }
  return area;
}

}  // namespace rees::density
