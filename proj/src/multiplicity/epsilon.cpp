#include "rees/multiplicity/epsilon.hpp"

#include <algorithm>

#include "rees/core/errors.hpp"
#include "rees/core/parallel.hpp"
#include "rees/density/sampler.hpp"
#include "rees/hilbert/lengths.hpp"

namespace rees::multiplicity {

std::vector<Integer> quotient_totals(const core::TermModule& m, int n_max,
                                     core::PowerCache& cache) {
  std::vector<core::ModulePtr> powers;
  for (int n = 1; n <= n_max; ++n) powers.push_back(cache.power(m, n));
  std::vector<Integer> totals(powers.size());
  core::parallel_for(powers.size(), [&](std::size_t i) {
    totals[i] = hilbert::quotient_total_length(*powers[i]).total;
  });
  return totals;
}

namespace {

// Grid with step 1/n covering the whole quotient of M^n, zero at both ends.
density::GridSpec census_grid(const core::TermModule& m, int n, core::PowerCache& cache) {
  const long c0 = m.ambient().support_offset();
  long top = m.max_generator_degree() + 2;
  const auto census = hilbert::quotient_total_length(*cache.power(m, n));
  if (census.max_degree) top = std::max(top, (*census.max_degree + 1 + n - 1) / n + 1);
  return density::GridSpec{Rational(-c0 - 1), Rational(top), Rational(1, n)};
}

}  // namespace

EpsilonReport epsilon_multiplicity(const core::TermModule& m, core::PowerCache& cache,
                                   const EpsilonOptions& options) {
  density::require_full_rank(m);
  if (!m.nonnegatively_graded()) {
    throw InputError("epsilon multiplicity needs a module generated in nonnegative degrees");
  }
  if (options.n_max < 2) throw InputError("epsilon multiplicity needs n_max >= 2");

  EpsilonReport r;
  r.dimension = m.dimension();
  r.rank = m.ambient().rank();
  const int k = r.dimension + r.rank - 1;
  for (int n = 1; n <= options.n_max; ++n) r.ns.push_back(n);
  r.totals = quotient_totals(m, options.n_max, cache);

  const auto scaled = [&](int n) {
    return make_rational(factorial(k) * r.totals[n - 1], ipow(n, k));
  };
  r.estimate = scaled(options.n_max);
  r.estimate_half = scaled(options.n_max / 2);
  r.diagnostic = abs(r.estimate - r.estimate_half);

  r.differences = stabilize_quasi(r.totals, 1, options.max_period, options.min_run);
  switch (r.differences.status) {
    case StabilizationStatus::Zero:
      r.exact = 0;
      break;
    case StabilizationStatus::Stabilized:
      if (r.differences.order == k) {
        r.exact = r.differences.top_difference();
      } else if (r.differences.order < k) {
        r.exact = 0;
      } else {
        r.diagnostics.push_back("t_n settles at difference order " +
                                std::to_string(r.differences.order) + ", above d+e-1 = " +
                                std::to_string(k));
      }
      break;
    case StabilizationStatus::Undetermined:
      r.diagnostics.push_back(r.differences.diagnostic);
      break;
  }
  r.status = r.exact ? "exact" : "undetermined";

  if (options.cross_check) {
    const int n = options.n_max;
    density::DensitySampler sampler(m, cache);
    const auto grid = sampler.sample(density::DensityKind::Epsilon, census_grid(m, n, cache), {n});
    r.integral = density::trapezoid(grid.x, grid.row(n), grid.x.back());
    r.integral_agrees =
        abs(*r.integral - r.estimate) <= options.tolerance * std::max(Rational(1), r.estimate);
    if (!*r.integral_agrees) {
      r.diagnostics.push_back("trapezoid of the epsilon density " + r.integral->get_str() +
                              " disagrees with the census estimate " + r.estimate.get_str());
    }
  }
  return r;
}

}  // namespace rees::multiplicity
