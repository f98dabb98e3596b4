#pragma once

#include <string>
#include <vector>

#include "rees/core/rational.hpp"

namespace rees::multiplicity {

enum class StabilizationStatus { Stabilized, Zero, Undetermined };

std::string to_string(StabilizationStatus status);

// Outcome of reading a sequence as an eventual (quasi-)polynomial in n.
struct Stabilization {
  StabilizationStatus status = StabilizationStatus::Undetermined;
  int period = 1;      // differences are taken with step `period`
  int order = -1;      // least k whose k-th differences are constant on a tail
  Integer value = 0;   // that constant, k! period^k times the leading coefficient
  int dimension = 0;   // k + 1
  long n0 = -1;        // first n of the constant tail of k-th differences
  std::string diagnostic;

  // k! times the leading coefficient.
  Rational top_difference() const;
};

// values[i] is the term at n = first_n + i. A tail counts as constant when it
// has at least min_run entries.
Stabilization stabilize(const std::vector<Integer>& values, long first_n = 0, int min_run = 4);

// Tries periods 1..max_period; with period p every residue class mod p must
// settle at the same order and the same constant.
Stabilization stabilize_quasi(const std::vector<Integer>& values, long first_n = 0,
                              int max_period = 3, int min_run = 4);

// k-th forward differences.
std::vector<Integer> differences(const std::vector<Integer>& values, int order);

}  // namespace rees::multiplicity
