#pragma once

#include <string>
#include <vector>

#include "rees/core/rational.hpp"
#include "rees/core/term_module.hpp"

namespace rees::density {

enum class DensityKind {
  Adic,        // l((M^n)_floor(xn))
  Saturated,   // l((sat M^n)_floor(xn))
  Epsilon,     // l((sat M^n / M^n)_floor(xn))
  Cumulative,  // sum_{m <= floor(xn)} l((M^n)_m), the A[y]-extension
};

std::string to_string(DensityKind kind);
DensityKind parse_density_kind(const std::string& text);

enum class Extrapolation {
  Raw,         // value at n_max
  Richardson,  // 2 v(n_max) - v(n_max/2), assuming an O(1/n) error
};

std::string to_string(Extrapolation method);

// Arithmetic progression lower, lower+step, ..., up to and including upper
// when upper lies on the progression.
struct GridSpec {
  Rational lower;
  Rational upper;
  Rational step;

  void validate() const;
  std::vector<Rational> points() const;
};

// Step 1/8 on [-c0 - 1, d_M + 2].
GridSpec default_grid(const core::TermModule& m);
std::vector<int> default_ladder();

// (d+e-1)!/n^(d+e-2) for the three densities; (d+e-1)!/n^(d+e-1) for the
// cumulative sampler so that it tracks the integral of the adic density.
Rational normalization(DensityKind kind, int d, int e, int n);

struct DensityGrid {
  DensityKind kind = DensityKind::Adic;
  Extrapolation method = Extrapolation::Raw;
  int dimension = 0;
  int rank = 0;
  std::vector<Rational> x;
  std::vector<int> ladder;   // requested n values, ascending
  std::vector<int> sampled;  // ladder plus the halvings extrapolation needs
  std::vector<std::vector<Rational>> values;  // values[x index][sampled index]
  std::vector<Rational> extrapolated;
  std::vector<Rational> diagnostic;  // |v(n_max) - v(n_max/2)|
  std::vector<Rational> heldout;     // same extrapolation, one halving earlier

  int n_max() const { return ladder.back(); }
  const Rational& value(int n, std::size_t x_index) const;
  std::vector<Rational> row(int n) const;
  std::size_t index_of(const Rational& point) const;
};

// Trapezoidal integral of ys over xs from xs.front() to `upto` (a grid point).
Rational trapezoid(const std::vector<Rational>& xs, const std::vector<Rational>& ys,
                   const Rational& upto);

}  // namespace rees::density
