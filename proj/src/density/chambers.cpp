#include "rees/density/chambers.hpp"

#include <algorithm>

#include "rees/core/errors.hpp"

namespace rees::density {

bool Chamber::interior(const Rational& x) const {
  if (lower && !(x > *lower)) return false;
  if (upper && !(x < *upper)) return false;
  return true;
}

std::string Chamber::interval_string() const {
  std::string s = lower ? (lower_closed ? "[" : "(") + std::to_string(*lower) : "(-inf";
  s += ", ";
  s += upper ? std::to_string(*upper) + (upper_closed ? "]" : ")") : "inf)";
  return s;
}

bool ChamberDecomposition::all_fitted() const {
  return std::all_of(chambers.begin(), chambers.end(),
                     [](const Chamber& c) { return c.status == "fitted"; });
}

ChamberDecomposition detect_chambers(const core::TermModule& m) {
  if (m.is_zero()) throw InputError("the zero module has no chambers");
  ChamberDecomposition out;
  out.breakpoints = m.generator_degrees();
  const auto& d = out.breakpoints;

  Chamber below;
  below.upper = d.front();
  below.zero = true;
  out.chambers.push_back(below);

  for (std::size_t j = 0; j + 1 < d.size(); ++j) {
    Chamber c;
    c.lower = d[j];
    c.upper = d[j + 1];
    c.lower_closed = j > 0;
    c.upper_closed = true;
    out.chambers.push_back(c);
  }
  Chamber top;
  top.lower = d.back();
  top.lower_closed = true;
  out.chambers.push_back(top);
  return out;
}

namespace {

Rational relative_excess(const Rational& fitted, const Rational& target) {
  const Rational scale = std::max(Rational(1), abs(target));
  return abs(fitted - target) / scale;
}

// d indices spread evenly over [0, count).
std::vector<std::size_t> spread(std::size_t count, int d) {
  std::vector<std::size_t> picks;
  if (d == 1) return {count / 2};
  for (int k = 0; k < d; ++k) {
    picks.push_back(k * (count - 1) / static_cast<std::size_t>(d - 1));
  }
  return picks;
}

}  // namespace

ChamberDecomposition fit_piecewise(const DensityGrid& grid, ChamberDecomposition chambers,
                                   const Rational& tolerance) {
  const int d = grid.dimension;
  for (Chamber& chamber : chambers.chambers) {
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < grid.x.size(); ++i) {
      if (chamber.interior(grid.x[i])) inside.push_back(i);
    }
    chamber.interior_points = inside.size();

    core::Polynomial p;
    if (chamber.zero && grid.kind == DensityKind::Adic) {
      if (inside.empty()) {
        chamber.status = "no-grid-points";
        continue;
      }
    } else {
      if (inside.size() < static_cast<std::size_t>(d)) {
        chamber.status = "insufficient-points";
        chambers.diagnostics.push_back("chamber " + chamber.interval_string() + " has " +
                                       std::to_string(inside.size()) +
                                       " interior grid points, need " + std::to_string(d));
        continue;
      }
      std::vector<Rational> xs, ys;
      for (std::size_t k : spread(inside.size(), d)) {
        xs.push_back(grid.x[inside[k]]);
        ys.push_back(grid.extrapolated[inside[k]]);
      }
      p = core::Polynomial::interpolate(xs, ys);
    }

    Rational worst = 0;
    for (std::size_t i : inside) {
      const Rational v = p(grid.x[i]);
      worst = std::max({worst, relative_excess(v, grid.extrapolated[i]),
                        relative_excess(v, grid.heldout[i])});
    }
    chamber.max_residual = worst;
    chamber.polynomial = p;
    if (worst <= tolerance) {
      chamber.status = "fitted";
    } else {
      chamber.status = "residual-exceeds-tolerance";
      chambers.diagnostics.push_back("chamber " + chamber.interval_string() +
                                     ": relative residual " + worst.get_str() +
                                     " exceeds tolerance " + tolerance.get_str());
    }
  }

  // Continuity at d_2..d_l, where two polynomial chambers meet. Exact equality.
  bool continuous = true;
  bool checked = true;
  for (std::size_t j = 1; j + 1 < chambers.chambers.size(); ++j) {
    const Chamber& left = chambers.chambers[j];
    const Chamber& right = chambers.chambers[j + 1];
    if (!left.polynomial || !right.polynomial || left.status != "fitted" ||
        right.status != "fitted") {
      checked = false;
      continue;
    }
    const Rational at = *right.lower;
    if ((*left.polynomial)(at) != (*right.polynomial)(at)) {
      continuous = false;
      chambers.diagnostics.push_back("discontinuity at x = " + at.get_str());
    }
  }
  if (checked) chambers.continuous_at_interior_breakpoints = continuous;

  const Chamber& top = chambers.top();
  if (top.polynomial && top.status == "fitted") {
    chambers.top_degree_is_d_minus_1 = top.polynomial->degree() == d - 1;
  }
  return chambers;
}

}  // namespace rees::density
