#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rees/core/exponents.hpp"
#include "rees/core/monomial_ideal.hpp"
#include "rees/core/ring.hpp"

namespace rees::core {

// A term x^alpha * e^a of Sym^n F with n = |a|.
struct Term {
  Exponents monomial;
  Exponents basis;

  int level() const { return total_degree(basis); }
  long degree(const GradedFreeModule& ambient) const;

  bool operator==(const Term&) const = default;
  auto operator<=>(const Term&) const = default;
};

// The coefficient ideal of one symmetric-basis component e^a.
struct ComponentIdeal {
  Exponents basis;
  MonomialIdeal ideal;
};

// Submodule of Sym^level F generated by terms. Stored per symmetric-basis
// component as a minimal monomial ideal; components with the zero ideal are
// not stored at all.
class TermModule {
 public:
  TermModule(AmbientPtr ambient, int level);

  // Level 0, generated by 1.
  static TermModule unit(AmbientPtr ambient);
  // The whole of Sym^level F.
  static TermModule free_power(AmbientPtr ambient, int level);
  static TermModule from_components(AmbientPtr ambient, int level,
                                    std::map<Exponents, MonomialIdeal> components);

  const GradedFreeModule& ambient() const { return *ambient_; }
  const AmbientPtr& ambient_ptr() const { return ambient_; }
  int level() const { return level_; }
  int dimension() const { return ambient_->dimension(); }

  const std::map<Exponents, MonomialIdeal>& components() const { return components_; }
  std::vector<ComponentIdeal> component_ideals() const;
  // Zero ideal (nullptr) when the component carries no generator.
  const MonomialIdeal* component(const Exponents& basis) const;

  std::vector<Term> generators() const;
  std::size_t generator_count() const;
  bool is_zero() const { return components_.empty(); }
  int rank() const { return static_cast<int>(components_.size()); }

  bool contains(const Term& t) const;

  // Distinct generator degrees, ascending. Empty for the zero module.
  std::vector<long> generator_degrees() const;
  long min_generator_degree() const;
  long max_generator_degree() const;
  bool nonnegatively_graded() const;

  // Stable textual form; equal modules have equal canonical strings.
  std::string canonical_string() const;
  std::uint64_t content_hash() const;

  bool same_ambient(const TermModule& other) const;
  bool operator==(const TermModule& other) const;

 private:
  AmbientPtr ambient_;
  int level_;
  std::map<Exponents, MonomialIdeal> components_;
};

// Generated module of a list of terms sharing ambient and level.
TermModule minimalize(AmbientPtr ambient, int level, std::span<const Term> generators);

TermModule product(const TermModule& p, const TermModule& q);
TermModule power(const TermModule& m, int n);
bool membership(const Term& t, const TermModule& m);
TermModule colon_variable_saturation(const TermModule& m, int var);
TermModule intersect(const TermModule& p, const TermModule& q);
TermModule saturate(const TermModule& m);
int rank(const TermModule& m);

// Module generated by the homogeneous degree-c piece of m.
TermModule truncation(const TermModule& m, long c);

// Terms of `saturation` not in `m`, found by breadth-first search from the
// generators of `saturation`. Sorted by degree, then basis, then monomial.
// Throws InternalError when more than `cap` terms are visited.
std::vector<Term> quotient_monomials(const TermModule& m, const TermModule& saturation,
                                     std::size_t cap = 50'000'000);

}  // namespace rees::core
