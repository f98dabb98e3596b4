#include "rees/hilbert/lengths.hpp"

#include "rees/hilbert/ideal_counter.hpp"

namespace rees::hilbert {

Integer LengthTable::at(long degree) const {
  auto it = lengths.find(degree);
  return it == lengths.end() ? Integer(0) : it->second;
}

Integer LengthTable::total() const {
  Integer sum = 0;
  for (const auto& [degree, value] : lengths) sum += value;
  return sum;
}

Integer length_component(const core::TermModule& m, long degree) {
  auto& counter = IdealCounter::shared();
  Integer total = 0;
  for (const auto& [basis, ideal] : m.components()) {
    total += counter.count(ideal, degree - m.ambient().basis_degree(basis));
  }
  return total;
}

Integer cumulative_length(const core::TermModule& m, long degree) {
  auto& counter = IdealCounter::shared();
  Integer total = 0;
  for (const auto& [basis, ideal] : m.components()) {
    total += counter.count_up_to(ideal, degree - m.ambient().basis_degree(basis));
  }
  return total;
}

QuotientCensus quotient_total_length(const core::TermModule& m) {
  return quotient_total_length(m, core::saturate(m));
}

QuotientCensus quotient_total_length(const core::TermModule& m,
                                     const core::TermModule& saturation) {
  QuotientCensus census;
  census.by_degree.module_id = std::to_string(m.content_hash());
  for (const auto& t : core::quotient_monomials(m, saturation)) {
    const long degree = t.degree(m.ambient());
    census.by_degree.lengths[degree] += 1;
  }
  census.total = census.by_degree.total();
  if (!census.by_degree.lengths.empty()) {
    census.min_degree = census.by_degree.lengths.begin()->first;
    census.max_degree = census.by_degree.lengths.rbegin()->first;
  }
  return census;
}

long saturation_agreement_degree(const core::TermModule& m) {
  auto census = quotient_total_length(m);
  if (census.max_degree) return *census.max_degree + 1;
  return -static_cast<long>(m.ambient().support_offset()) * m.level();
}

}  // namespace rees::hilbert
