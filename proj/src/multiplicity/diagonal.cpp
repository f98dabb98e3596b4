#include "rees/multiplicity/diagonal.hpp"

#include "rees/core/errors.hpp"
#include "rees/core/parallel.hpp"
#include "rees/density/sampler.hpp"
#include "rees/hilbert/lengths.hpp"

namespace rees::multiplicity {

namespace {

DiagonalVersion read_version(std::vector<Integer> sequence, int stated, int example, int min_run) {
  DiagonalVersion v;
  v.sequence = std::move(sequence);
  v.stated_dimension = stated;
  v.example_dimension = example;
  v.differences = stabilize(v.sequence, 0, min_run);
  if (v.differences.status == StabilizationStatus::Stabilized) {
    v.multiplicity = v.differences.value;
    v.detected_dimension = v.differences.dimension;
    v.status = "stabilized";
  } else {
    v.status = "undetermined";
  }
  return v;
}

}  // namespace

DiagonalReport diagonal_multiplicity(const core::TermModule& m, long c, core::PowerCache& cache,
                                     const DiagonalOptions& options) {
  density::require_full_rank(m);
  const long d_m = m.max_generator_degree();
  if (c <= d_m) {
    throw InputError("diagonal multiplicity needs c > d_M = " + std::to_string(d_m) +
                     ", got c = " + std::to_string(c));
  }
  if (options.n_max < 1) throw InputError("n_max must be positive");

  DiagonalReport r;
  r.c = c;
  r.n_max = options.n_max;
  std::vector<core::ModulePtr> powers;
  for (int n = 0; n <= options.n_max; ++n) powers.push_back(cache.power(m, n));

  std::vector<Integer> h(powers.size()), h_bar(powers.size());
  core::parallel_for(powers.size(), [&](std::size_t n) {
    const long degree = c * static_cast<long>(n);
    h[n] = hilbert::length_component(*powers[n], degree);
    h_bar[n] = hilbert::cumulative_length(*powers[n], degree);
  });

  const int d = m.dimension();
  const int e = m.ambient().rank();
  r.a_version = read_version(std::move(h), d + e - 2, d + e - 1, options.min_run);
  r.s_version = read_version(std::move(h_bar), d + e - 1, d + e, options.min_run);
  for (const auto* v : {&r.a_version, &r.s_version}) {
    if (!v->multiplicity) r.diagnostics.push_back(v->differences.diagnostic);
  }
  return r;
}

}  // namespace rees::multiplicity
