#include "rees/dependence/dependence.hpp"

#include <algorithm>
#include <future>

#include "rees/density/sampler.hpp"
#include "rees/multiplicity/bigraded_fit.hpp"
#include "rees/multiplicity/diagonal.hpp"
#include "rees/multiplicity/epsilon.hpp"

namespace rees::dependence {

CheckedPair validate_pair(const core::TermModule& n, const core::TermModule& m) {
  if (!n.same_ambient(m)) throw InputError("N and M live in different free modules");
  if (n.level() != 1 || m.level() != 1) throw InputError("N and M must both be level-1 modules");
  if (n.is_zero() || m.is_zero()) throw InputError("N and M must be nonzero");
  for (const auto& g : n.generators()) {
    if (!m.contains(g)) {
      throw NotSubmoduleError("N is not a submodule of M: generator " +
                              core::to_string(g.monomial) + " * e" + core::to_string(g.basis) +
                              " is not in M");
    }
  }
  const int e = m.ambient().rank();
  if (n.rank() != e || m.rank() != e) {
    throw RankMismatchError("rank mismatch: rank N = " + std::to_string(n.rank()) +
                            ", rank M = " + std::to_string(m.rank()) +
                            ", rank F = " + std::to_string(e));
  }
  return CheckedPair{n, m, std::max(n.max_generator_degree(), m.max_generator_degree())};
}

std::optional<int> direct_reduction_search(const CheckedPair& pair, int n_max,
                                           core::PowerCache& cache) {
  for (int n0 = 0; n0 <= n_max; ++n0) {
    const auto next = cache.power(pair.sup, n0 + 1);
    if (*next == core::product(pair.sub, *cache.power(pair.sup, n0))) return n0;
  }
  return std::nullopt;
}

bool certificate_stable(const CheckedPair& pair, int n0, int n_max, core::PowerCache& cache) {
  for (int n = n0; n <= n_max; ++n) {
    if (!(*cache.power(pair.sup, n + 1) == core::product(pair.sub, *cache.power(pair.sup, n)))) {
      return false;
    }
  }
  return true;
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Reduction: return "reduction";
    case Verdict::NotReduction: return "not-reduction";
    case Verdict::Undetermined: return "undetermined";
  }
  return "unknown";
}

namespace {

void settle(CriterionEvidence& c, bool sub_ok, bool sup_ok, const std::string& why) {
  c.usable = sub_ok && sup_ok;
  if (c.usable) {
    c.match = c.sub_values == c.sup_values;
  } else {
    c.note = why;
  }
}

CriterionEvidence epsilon_criterion(const multiplicity::EpsilonReport& sub,
                                    const multiplicity::EpsilonReport& sup, bool stand_in) {
  CriterionEvidence c;
  c.id = stand_in ? "4-truncation" : "3-epsilon";
  c.description = stand_in
                      ? "stand-in: epsilon of the degree-c truncations N_c A and M_c A"
                      : "epsilon multiplicity, exact from stabilized differences of t_n";
  c.decisive = true;
  c.stand_in = stand_in;
  if (sub.exact) c.sub_values = {*sub.exact};
  if (sup.exact) c.sup_values = {*sup.exact};
  settle(c, sub.exact.has_value(), sup.exact.has_value(),
         "t_n did not stabilize within n_max");
  return c;
}

CriterionEvidence diagonal_criterion(const std::string& id, const std::string& description,
                                     const multiplicity::DiagonalVersion& sub,
                                     const multiplicity::DiagonalVersion& sup) {
  CriterionEvidence c;
  c.id = id;
  c.description = description;
  c.decisive = true;
  if (sub.multiplicity) c.sub_values = {Rational(sub.detected_dimension), Rational(*sub.multiplicity)};
  if (sup.multiplicity) c.sup_values = {Rational(sup.detected_dimension), Rational(*sup.multiplicity)};
  settle(c, sub.multiplicity.has_value(), sup.multiplicity.has_value(),
         "difference table did not stabilize within n_max");
  if (c.usable) c.note = "values are [detected dimension, multiplicity]";
  return c;
}

CriterionEvidence mixed_criterion(const multiplicity::BigradedFit& sub,
                                  const multiplicity::BigradedFit& sup) {
  CriterionEvidence c;
  c.id = "6-mixed";
  c.description = "mixed multiplicities e_0..e_d from cumulative-length fits";
  c.decisive = false;  // validated interpolation, not a difference table
  bool sub_ok = false, sup_ok = false;
  if (sub.success) {
    const auto mixed = multiplicity::mixed_multiplicities(sub);
    c.sub_values = mixed.e;
    sub_ok = mixed.integral;
  }
  if (sup.success) {
    const auto mixed = multiplicity::mixed_multiplicities(sup);
    c.sup_values = mixed.e;
    sup_ok = mixed.integral;
  }
  settle(c, sub_ok, sup_ok, "bigraded fit failed or produced non-integral values");
  return c;
}

}  // namespace

DependenceVerdict check_dependence(const core::TermModule& n, const core::TermModule& m,
                                   core::PowerCache& cache, const DependenceOptions& options) {
  const CheckedPair pair = validate_pair(n, m);
  if (options.n_max < 4) throw InputError("dependence check needs n_max >= 4");
  DependenceVerdict v;
  v.d_nm = pair.d_nm;
  v.c = options.c.value_or(pair.d_nm + 1);
  if (v.c <= pair.d_nm) {
    throw InputError("c must exceed d_{N,M} = " + std::to_string(pair.d_nm));
  }
  v.n_max = options.n_max;

  multiplicity::EpsilonOptions eps;
  eps.n_max = options.n_max;
  eps.cross_check = false;
  eps.min_run = options.min_run;
  multiplicity::DiagonalOptions diag;
  diag.n_max = options.n_max;
  diag.min_run = options.min_run;
  multiplicity::BigradedFitOptions fit;
  fit.c = v.c;
  fit.data = multiplicity::FitData::Cumulative;

  const auto truncated_sub = core::truncation(pair.sub, v.c);
  const auto truncated_sup = core::truncation(pair.sup, v.c);

  auto certificate = std::async(std::launch::async, [&] {
    return direct_reduction_search(pair, options.n_max, cache);
  });
  auto eps_sub = std::async(std::launch::async, [&] {
    return multiplicity::epsilon_multiplicity(pair.sub, cache, eps);
  });
  auto eps_sup = std::async(std::launch::async, [&] {
    return multiplicity::epsilon_multiplicity(pair.sup, cache, eps);
  });
  auto diag_sub = std::async(std::launch::async, [&] {
    return multiplicity::diagonal_multiplicity(pair.sub, v.c, cache, diag);
  });
  auto diag_sup = std::async(std::launch::async, [&] {
    return multiplicity::diagonal_multiplicity(pair.sup, v.c, cache, diag);
  });
  auto fit_sub = std::async(std::launch::async, [&] {
    return multiplicity::fit_bigraded_polynomial(pair.sub, cache, fit);
  });
  auto fit_sup = std::async(std::launch::async, [&] {
    return multiplicity::fit_bigraded_polynomial(pair.sup, cache, fit);
  });
  auto trunc_sub = std::async(std::launch::async, [&] {
    return multiplicity::epsilon_multiplicity(truncated_sub, cache, eps);
  });
  auto trunc_sup = std::async(std::launch::async, [&] {
    return multiplicity::epsilon_multiplicity(truncated_sup, cache, eps);
  });

  v.certificate = certificate.get();
  const auto es = eps_sub.get();
  const auto em = eps_sup.get();
  const auto ds = diag_sub.get();
  const auto dm = diag_sup.get();
  const auto fs = fit_sub.get();
  const auto fm = fit_sup.get();
  const auto ts = trunc_sub.get();
  const auto tm = trunc_sup.get();

  v.criteria.push_back(epsilon_criterion(es, em, false));
  v.criteria.push_back(diagonal_criterion(
      "3-diagonal-A", "multiplicity of the diagonal subalgebra of A[Mt] at (c,1)", ds.a_version,
      dm.a_version));
  v.criteria.push_back(epsilon_criterion(ts, tm, true));
  v.criteria.push_back(diagonal_criterion(
      "5-diagonal-S", "multiplicity of the diagonal subalgebra over S = A[y] at (c,1)",
      ds.s_version, dm.s_version));
  v.criteria.push_back(mixed_criterion(fs, fm));

  std::vector<Integer> gap;
  for (std::size_t i = 0; i < em.totals.size(); ++i) gap.push_back(em.totals[i] - es.totals[i]);
  const auto growth = multiplicity::stabilize(gap, 1, options.min_run);
  if (growth.status != multiplicity::StabilizationStatus::Undetermined) {
    const int top = m.dimension() + m.ambient().rank() - 1;
    v.epsilon_gap_growth = growth.status == multiplicity::StabilizationStatus::Stabilized &&
                           growth.order == top && growth.value > 0;
  }

  std::optional<bool> first;
  bool any_decisive_mismatch = false;
  bool any_mismatch = false;
  for (const auto& c : v.criteria) {
    if (!c.usable) {
      v.diagnostics.push_back(c.id + " unusable: " + c.note);
      continue;
    }
    if (!first) first = *c.match;
    if (*c.match != *first) v.consistent = false;
    if (!*c.match) {
      any_mismatch = true;
      if (c.decisive) any_decisive_mismatch = true;
    }
  }

  if (v.certificate) {
    v.certificate_stable = certificate_stable(pair, *v.certificate, options.n_max, cache);
    if (!*v.certificate_stable) throw InternalError("reduction certificate is not stable");
    if (any_mismatch) {
      throw InternalError("reduction certificate found but a criterion pair differs");
    }
    v.verdict = Verdict::Reduction;
  } else if (any_decisive_mismatch) {
    v.verdict = Verdict::NotReduction;
  } else {
    v.verdict = Verdict::Undetermined;
    v.diagnostics.push_back("no certificate up to n_max = " + std::to_string(options.n_max) +
                            " and no exact criterion disagreement");
  }
  return v;
}

}  // namespace rees::dependence
