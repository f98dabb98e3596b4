#include "rees/multiplicity/bigraded_fit.hpp"

#include <algorithm>
#include <map>

#include "rees/core/errors.hpp"
#include "rees/density/sampler.hpp"
#include "rees/hilbert/lengths.hpp"

namespace rees::multiplicity {

std::string to_string(FitData data) {
  return data == FitData::Component ? "component" : "cumulative";
}

namespace {

using Monomial = core::BivariatePolynomial::Monomial;

class LengthSource {
 public:
  LengthSource(const core::TermModule& m, core::PowerCache& cache, FitData data)
      : module_(m), cache_(cache), data_(data) {}

  Integer operator()(long n, long degree) {
    auto it = powers_.find(n);
    if (it == powers_.end()) {
      it = powers_.emplace(n, cache_.power(module_, static_cast<int>(n))).first;
    }
    return data_ == FitData::Component ? hilbert::length_component(*it->second, degree)
                                       : hilbert::cumulative_length(*it->second, degree);
  }

 private:
  const core::TermModule& module_;
  core::PowerCache& cache_;
  FitData data_;
  std::map<long, core::ModulePtr> powers_;
};

struct LatticePoint {
  long n;
  long degree;
};

// Points n = n_start + rn + h*i, m = c*n + margin + rm + h*j.
std::vector<LatticePoint> layer_points(const BigradedFitOptions& o, long margin, int h, int rn,
                                       int rm, int min_sum, int max_sum) {
  std::vector<LatticePoint> points;
  for (int s = min_sum; s <= max_sum; ++s) {
    for (int i = 0; i <= s; ++i) {
      const int j = s - i;
      const long n = o.n_start + rn + static_cast<long>(h) * i;
      points.push_back({n, o.c * n + margin + rm + static_cast<long>(h) * j});
    }
  }
  return points;
}

Rational power_of(long base, int exponent) {
  Rational r = 1;
  for (int k = 0; k < exponent; ++k) r *= base;
  return r;
}

std::optional<core::BivariatePolynomial> fit_class(LengthSource& lengths,
                                                   const BigradedFitOptions& o, int degree,
                                                   long margin, int h, int rn, int rm) {
  std::vector<Monomial> monomials;
  for (int s = 0; s <= degree; ++s) {
    for (int a = s; a >= 0; --a) monomials.emplace_back(a, s - a);
  }
  const auto nodes = layer_points(o, margin, h, rn, rm, 0, degree);
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> rhs;
  for (const auto& p : nodes) {
    std::vector<Rational> row;
    for (const auto& [a, b] : monomials) row.push_back(power_of(p.degree, a) * power_of(p.n, b));
    matrix.push_back(std::move(row));
    rhs.emplace_back(lengths(p.n, p.degree));
  }
  auto solution = core::solve_linear(std::move(matrix), std::move(rhs));
  if (!solution) throw InternalError("principal lattice is not unisolvent");
  std::map<Monomial, Rational> terms;
  for (std::size_t k = 0; k < monomials.size(); ++k) terms[monomials[k]] = (*solution)[k];
  core::BivariatePolynomial p(std::move(terms));

  for (const auto& q : layer_points(o, margin, h, rn, rm, degree + 1, degree + 2)) {
    if (p(Rational(q.degree), Rational(q.n)) != Rational(lengths(q.n, q.degree))) {
      return std::nullopt;
    }
  }
  return p;
}

}  // namespace

BigradedFit fit_bigraded_polynomial(const core::TermModule& m, core::PowerCache& cache,
                                    const BigradedFitOptions& options) {
  density::require_full_rank(m);
  const long d_m = m.max_generator_degree();
  if (options.c <= d_m) {
    throw InputError("bigraded fit needs c > d_M = " + std::to_string(d_m) + ", got c = " +
                     std::to_string(options.c));
  }
  if (options.h_max < 1 || options.margin_start < 0 || options.margin_cap < options.margin_start ||
      options.n_start < 0) {
    throw InputError("invalid bigraded fit options");
  }

  BigradedFit fit;
  fit.data = options.data;
  fit.c = options.c;
  fit.rank = m.ambient().rank();
  fit.ring_dimension = m.dimension() + (options.data == FitData::Cumulative ? 1 : 0);
  fit.degree_bound = fit.ring_dimension + fit.rank - 2;

  LengthSource lengths(m, cache, options.data);
  for (long margin = options.margin_start;; margin = std::max(2 * margin, margin + 1)) {
    if (margin > options.margin_cap) break;
    for (int h = 1; h <= options.h_max; ++h) {
      std::vector<core::BivariatePolynomial> classes;
      bool all = true;
      for (int rn = 0; rn < h && all; ++rn) {
        for (int rm = 0; rm < h && all; ++rm) {
          auto p = fit_class(lengths, options, fit.degree_bound, margin, h, rn, rm);
          if (p) {
            classes.push_back(std::move(*p));
          } else {
            all = false;
          }
        }
      }
      if (!all) continue;
      const auto lead = classes.front().homogeneous_part(fit.degree_bound);
      const bool agree = std::all_of(classes.begin(), classes.end(), [&](const auto& p) {
        return p.homogeneous_part(fit.degree_bound) == lead;
      });
      if (!agree) {
        fit.diagnostics.push_back("period " + std::to_string(h) + ", margin " +
                                  std::to_string(margin) +
                                  ": classes validate but their leading forms differ");
        continue;
      }
      fit.success = true;
      fit.period = h;
      fit.margin = margin;
      fit.polynomial = classes.front();
      fit.class_polynomials = std::move(classes);
      fit.leading_forms_agree = true;
      fit.status = "fitted";
      return fit;
    }
  }
  fit.status = "quasi-period undetected";
  fit.diagnostics.push_back("no period h <= " + std::to_string(options.h_max) +
                            " validated for margins up to " + std::to_string(options.margin_cap));
  return fit;
}

MixedMultiplicities mixed_multiplicities(const BigradedFit& fit) {
  if (!fit.success) throw InputError("mixed multiplicities need a successful bigraded fit");
  MixedMultiplicities out;
  out.data = fit.data;
  const int D = fit.degree_bound;
  const int dim = fit.ring_dimension;
  const auto lead = fit.leading_form();

  out.integral = true;
  out.nonnegative = true;
  for (int i = 0; i < dim && i <= D; ++i) {
    const Rational e = lead.coefficient(i, D - i) * Rational(factorial(i) * factorial(D - i));
    if (e.get_den() != 1) {
      out.integral = false;
      out.diagnostics.push_back("e_" + std::to_string(i) + " = " + e.get_str() +
                                " is not an integer; the fit region may be too shallow");
    }
    if (e < 0) out.nonnegative = false;
    out.e.push_back(e);
  }
  out.form_shape_ok = true;
  for (int i = dim; i <= D; ++i) {
    if (lead.coefficient(i, D - i) != 0) out.form_shape_ok = false;
  }
  if (!out.form_shape_ok) {
    out.diagnostics.push_back("leading form has X-degree above " + std::to_string(dim - 1));
  }

  const Integer scale = factorial(static_cast<unsigned long>(dim + fit.rank - 1));
  std::vector<Rational> coefficients;
  for (int i = 0; i <= D; ++i) coefficients.push_back(Rational(scale) * lead.coefficient(i, D - i));
  out.density_polynomial = core::Polynomial(std::move(coefficients));
  return out;
}

}  // namespace rees::multiplicity
