#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rees/core/exponents.hpp"

namespace rees::core {

// Polynomial ring k[x_1..x_d], standard graded. The field never enters any
// computation: every length is a monomial count.
class RingSpec {
 public:
  explicit RingSpec(std::vector<std::string> variables);

  int dimension() const { return static_cast<int>(variables_.size()); }
  const std::vector<std::string>& variables() const { return variables_; }

  bool operator==(const RingSpec&) const = default;

 private:
  std::vector<std::string> variables_;
};

// F = A(-f_1) + ... + A(-f_e), i.e. basis vector e_i sits in degree f_i.
// Shifts may be negative.
class GradedFreeModule {
 public:
  GradedFreeModule(RingSpec ring, std::vector<int> shifts);

  const RingSpec& ring() const { return ring_; }
  int dimension() const { return ring_.dimension(); }
  int rank() const { return static_cast<int>(shifts_.size()); }
  std::span<const int> shifts() const { return shifts_; }

  // c0 = max(0, -min f_i); F^n vanishes below degree -c0*n.
  int support_offset() const;

  // Degree of the symmetric basis element e^a.
  long basis_degree(std::span<const int> basis) const;

  bool operator==(const GradedFreeModule&) const = default;

 private:
  RingSpec ring_;
  std::vector<int> shifts_;
};

using AmbientPtr = std::shared_ptr<const GradedFreeModule>;

AmbientPtr make_ambient(std::vector<std::string> variables, std::vector<int> shifts);

}  // namespace rees::core
