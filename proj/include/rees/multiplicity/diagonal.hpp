#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rees/core/power_cache.hpp"
#include "rees/multiplicity/finite_differences.hpp"

namespace rees::multiplicity {

// Multiplicity of one diagonal subalgebra, read off a difference table.
struct DiagonalVersion {
  std::vector<Integer> sequence;  // values at n = 0..n_max
  Stabilization differences;
  std::optional<Integer> multiplicity;  // the constant top difference
  int detected_dimension = 0;
  // Two conflicting predictions: the Krull dimension quoted in the
  // literature for this algebra and the one the standard worked example
  // exhibits. Both are reported; neither is enforced.
  int stated_dimension = 0;
  int example_dimension = 0;
  std::string status;  // "stabilized" or "undetermined"
};

struct DiagonalReport {
  long c = 0;
  int n_max = 0;
  DiagonalVersion a_version;  // h(n) = length of (M^n)_{cn}
  DiagonalVersion s_version;  // cumulative lengths, i.e. over A[y]
  std::vector<std::string> diagnostics;
};

struct DiagonalOptions {
  int n_max = 16;
  int min_run = 4;
};

// Requires c > d_M.
DiagonalReport diagonal_multiplicity(const core::TermModule& m, long c, core::PowerCache& cache,
                                     const DiagonalOptions& options = {});

}  // namespace rees::multiplicity
