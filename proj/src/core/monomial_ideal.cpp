#include "rees/core/monomial_ideal.hpp"

#include <algorithm>

namespace rees::core {

std::vector<Exponents> minimalize_monomials(std::vector<Exponents> generators) {
  std::sort(generators.begin(), generators.end(), grlex_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<Exponents> kept;
  kept.reserve(generators.size());
  // In grlex order a divisor always precedes its multiples.
  for (auto& g : generators) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Exponents& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal MonomialIdeal::from_generators(int nvars, std::vector<Exponents> generators) {
  MonomialIdeal ideal(nvars);
  ideal.generators_ = minimalize_monomials(std::move(generators));
  return ideal;
}

MonomialIdeal MonomialIdeal::unit(int nvars) {
  MonomialIdeal ideal(nvars);
  ideal.generators_.push_back(Exponents(static_cast<std::size_t>(nvars), 0));
  return ideal;
}

bool MonomialIdeal::is_unit() const {
  return generators_.size() == 1 && total_degree(generators_.front()) == 0;
}

bool MonomialIdeal::contains(std::span<const int> monomial) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Exponents& g) { return divides(g, monomial); });
}

MonomialIdeal MonomialIdeal::product(const MonomialIdeal& other) const {
  std::vector<Exponents> gens;
  gens.reserve(generators_.size() * other.generators_.size());
  for (const auto& a : generators_) {
    for (const auto& b : other.generators_) gens.push_back(add(a, b));
  }
  return from_generators(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  std::vector<Exponents> gens;
  gens.reserve(generators_.size() * other.generators_.size());
  for (const auto& a : generators_) {
    for (const auto& b : other.generators_) gens.push_back(lcm(a, b));
  }
  return from_generators(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon_variable_saturation(int var) const {
  std::vector<Exponents> gens = generators_;
  for (auto& g : gens) g[static_cast<std::size_t>(var)] = 0;
  return from_generators(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::saturate() const {
  if (is_zero()) return *this;
  MonomialIdeal result = colon_variable_saturation(0);
  for (int v = 1; v < nvars_ && !result.is_zero(); ++v) {
    result = result.intersect(colon_variable_saturation(v));
  }
  return result;
}

}  // namespace rees::core
