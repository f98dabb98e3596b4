#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rees/core/polynomial.hpp"
#include "rees/density/grid.hpp"

namespace rees::density {

struct Chamber {
  std::optional<long> lower;  // nullopt: -infinity
  std::optional<long> upper;  // nullopt: +infinity
  bool lower_closed = false;
  bool upper_closed = false;
  bool zero = false;  // the chamber below d_1, where the adic density vanishes

  std::optional<core::Polynomial> polynomial;
  Rational max_residual = 0;
  std::size_t interior_points = 0;
  std::string status = "unfitted";

  bool interior(const Rational& x) const;
  std::string interval_string() const;
};

struct ChamberDecomposition {
  std::vector<long> breakpoints;  // d_1 < ... < d_l
  std::vector<Chamber> chambers;
  std::vector<std::string> diagnostics;
  // Filled by fit_piecewise.
  std::optional<bool> continuous_at_interior_breakpoints;
  std::optional<bool> top_degree_is_d_minus_1;

  bool all_fitted() const;
  const Chamber& top() const { return chambers.back(); }
};

// Breakpoints are the distinct minimal-generator degrees of M; chambers are
// (-inf,d1), then (d1,d2], [d_j,d_{j+1}] for 2 <= j < l, and [d_l,inf).
// With a single degree the top chamber is [d1,inf).
ChamberDecomposition detect_chambers(const core::TermModule& m);

// Interpolates a degree-(d-1) polynomial through d extrapolated interior
// points of each chamber and validates it on every other interior point and
// on the held-out extrapolation. Chambers that fail are reported, not fitted.
ChamberDecomposition fit_piecewise(const DensityGrid& grid, ChamberDecomposition chambers,
                                   const Rational& tolerance);

}  // namespace rees::density
