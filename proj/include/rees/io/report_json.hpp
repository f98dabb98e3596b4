#pragma once

#include <string>

#include <json.hpp>

#include "rees/density/chambers.hpp"
#include "rees/density/grid.hpp"
#include "rees/dependence/dependence.hpp"
#include "rees/multiplicity/bigraded_fit.hpp"
#include "rees/multiplicity/diagonal.hpp"
#include "rees/multiplicity/epsilon.hpp"

namespace rees::io {

// {"exact": "p/q", "float": 0.5}
nlohmann::json rational_json(const Rational& q);

nlohmann::json to_json(const density::DensityGrid& grid, const std::string& module_name);
nlohmann::json to_json(const density::ChamberDecomposition& chambers);
nlohmann::json to_json(const multiplicity::Stabilization& s);
nlohmann::json to_json(const multiplicity::EpsilonReport& r);
nlohmann::json to_json(const multiplicity::DiagonalReport& r);
nlohmann::json to_json(const multiplicity::BigradedFit& fit);
nlohmann::json to_json(const multiplicity::MixedMultiplicities& mixed);
nlohmann::json to_json(const dependence::DependenceVerdict& v);

// Header row, then one row per x ascending. Columns: x, x_float, one exact
// column per sampled n ascending, extrapolated (+float), diagnostic (+float).
std::string to_csv(const density::DensityGrid& grid);

// Human-readable summary of a verdict.
std::string verdict_table(const dependence::DependenceVerdict& v);

}  // namespace rees::io
