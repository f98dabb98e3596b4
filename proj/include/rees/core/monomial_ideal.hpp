#pragma once

#include <span>
#include <vector>

#include "rees/core/exponents.hpp"

namespace rees::core {

// Monomial ideal in a fixed number of variables, stored by its minimal
// generators in lexicographic order. The empty generator list is the zero
// ideal; the single zero vector is the unit ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int nvars = 0) : nvars_(nvars) {}

  static MonomialIdeal from_generators(int nvars, std::vector<Exponents> generators);
  static MonomialIdeal unit(int nvars);

  int nvars() const { return nvars_; }
  const std::vector<Exponents>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;

  bool contains(std::span<const int> monomial) const;

  MonomialIdeal product(const MonomialIdeal& other) const;
  MonomialIdeal intersect(const MonomialIdeal& other) const;
  // (I : x_var^infinity)
  MonomialIdeal colon_variable_saturation(int var) const;
  // (I : m^infinity) as the intersection of the per-variable saturations.
  MonomialIdeal saturate() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  int nvars_;
  std::vector<Exponents> generators_;
};

// Drops every generator divisible by another one and sorts the rest
// lexicographically. Duplicates collapse.
std::vector<Exponents> minimalize_monomials(std::vector<Exponents> generators);

}  // namespace rees::core
