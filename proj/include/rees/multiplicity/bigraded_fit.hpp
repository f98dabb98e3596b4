#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rees/core/polynomial.hpp"
#include "rees/core/power_cache.hpp"

namespace rees::multiplicity {

enum class FitData {
  Component,   // length of (M^n)_m, total degree d+e-2
  Cumulative,  // cumulative length (the A[y]-extension), total degree d+e-1
};

std::string to_string(FitData data);

struct BigradedFitOptions {
  long c = 0;  // must exceed d_M
  FitData data = FitData::Component;
  int h_max = 3;
  long margin_start = 2;
  long margin_cap = 64;
  long n_start = 1;
};

// P(X, Y) with X the degree m and Y the power n, valid for m >= c*n + margin.
struct BigradedFit {
  FitData data = FitData::Component;
  long c = 0;
  int degree_bound = 0;  // D
  int ring_dimension = 0;  // d, or d+1 for cumulative data
  int rank = 0;
  bool success = false;
  int period = 0;
  long margin = 0;
  core::BivariatePolynomial polynomial;  // the fit for the residue class (0, 0)
  std::vector<core::BivariatePolynomial> class_polynomials;
  std::optional<bool> leading_forms_agree;
  std::vector<std::string> diagnostics;
  std::string status;  // "fitted" or "quasi-period undetected"

  core::BivariatePolynomial leading_form() const { return polynomial.homogeneous_part(degree_bound); }
};

// Exact interpolation on a principal lattice of (n, m - c*n) with spacing h
// inside each residue class, validated on the next two lattice layers.
BigradedFit fit_bigraded_polynomial(const core::TermModule& m, core::PowerCache& cache,
                                    const BigradedFitOptions& options);

struct MixedMultiplicities {
  FitData data = FitData::Component;
  std::vector<Rational> e;  // e_0 .. e_{dim-1}
  bool integral = false;
  bool form_shape_ok = false;  // no X^i Y^(D-i) with i >= dim
  bool nonnegative = false;
  // (dim+e-1)! * leading_form(x, 1); for component data this is the top
  // chamber polynomial of the adic density.
  core::Polynomial density_polynomial;
  std::vector<std::string> diagnostics;
};

// e_i = i! (D-i)! * coefficient of X^i Y^(D-i) in the leading form.
MixedMultiplicities mixed_multiplicities(const BigradedFit& fit);

}  // namespace rees::multiplicity
