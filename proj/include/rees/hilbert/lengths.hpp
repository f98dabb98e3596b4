#pragma once

#include <map>
#include <optional>
#include <string>

#include "rees/core/rational.hpp"
#include "rees/core/term_module.hpp"

namespace rees::hilbert {

// Degree -> length of the graded piece.
struct LengthTable {
  std::string module_id;
  std::map<long, Integer> lengths;

  Integer at(long degree) const;
  Integer total() const;
};

// dim_k (M)_m: sum over symmetric components e^a of #I_a in degree m - deg e^a.
Integer length_component(const core::TermModule& m, long degree);

// sum_{j <= m} length_component(M, j), which is the length of the degree-m
// piece of M (x) k[y] over A[y].
Integer cumulative_length(const core::TermModule& m, long degree);

struct QuotientCensus {
  Integer total;
  LengthTable by_degree;
  // Largest degree carrying a quotient term; nullopt when M is saturated.
  std::optional<long> max_degree;
  std::optional<long> min_degree;
};

// Census of saturate(M)/M, aggregated by degree.
QuotientCensus quotient_total_length(const core::TermModule& m);
QuotientCensus quotient_total_length(const core::TermModule& m, const core::TermModule& saturation);

// Least m* such that saturate(M) and M agree in every degree >= m*.
long saturation_agreement_degree(const core::TermModule& m);

}  // namespace rees::hilbert
