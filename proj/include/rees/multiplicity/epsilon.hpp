#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rees/core/power_cache.hpp"
#include "rees/multiplicity/finite_differences.hpp"

namespace rees::multiplicity {

struct EpsilonOptions {
  int n_max = 40;
  bool cross_check = true;   // trapezoid of the epsilon density at n_max
  Rational tolerance{1, 20};
  int min_run = 4;
  int max_period = 3;
};

struct EpsilonReport {
  int dimension = 0;
  int rank = 0;
  std::vector<int> ns;          // 1..n_max
  std::vector<Integer> totals;  // t_n = length of sat(M^n)/M^n
  Rational estimate;            // (d+e-1)! t_n / n^(d+e-1) at n_max
  Rational estimate_half;       // same at n_max/2
  Rational diagnostic;          // |estimate - estimate_half|

  // Exact value from the (d+e-1)-th differences of t_n, when they settle,
  // possibly with a period when t_n is a quasi-polynomial.
  Stabilization differences;
  std::optional<Rational> exact;
  std::string status;  // "exact" or "undetermined"

  std::optional<Rational> integral;  // trapezoid of the epsilon density row
  std::optional<bool> integral_agrees;
  std::vector<std::string> diagnostics;

  Rational value() const { return exact ? *exact : estimate; }
};

std::vector<Integer> quotient_totals(const core::TermModule& m, int n_max,
                                     core::PowerCache& cache);

EpsilonReport epsilon_multiplicity(const core::TermModule& m, core::PowerCache& cache,
                                   const EpsilonOptions& options = {});

}  // namespace rees::multiplicity
