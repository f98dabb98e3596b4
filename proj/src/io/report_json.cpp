#include "rees/io/report_json.hpp"

#include <iomanip>
#include <sstream>

#include "rees/io/module_document.hpp"

namespace rees::io {

using nlohmann::json;

namespace {

json rationals(const std::vector<Rational>& qs) {
  json out = json::array();
  for (const auto& q : qs) out.push_back(rational_json(q));
  return out;
}

json integers(const std::vector<Integer>& zs) {
  json out = json::array();
  for (const auto& z : zs) out.push_back(z.get_str());
  return out;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string float_text(const Rational& q) {
  std::ostringstream s;
  s << std::setprecision(12) << q.get_d();
  return s.str();
}

}  // namespace

json rational_json(const Rational& q) {
  return {{"exact", to_fraction_string(q)}, {"float", q.get_d()}};
}

json to_json(const density::DensityGrid& grid, const std::string& module_name) {
  json samples = json::array();
  for (std::size_t xi = 0; xi < grid.x.size(); ++xi) {
    json row = {{"x", rational_json(grid.x[xi])}};
    json values = json::object();
    for (std::size_t k = 0; k < grid.sampled.size(); ++k) {
      values[std::to_string(grid.sampled[k])] = rational_json(grid.values[xi][k]);
    }
    row["values"] = values;
    row["extrapolated"] = rational_json(grid.extrapolated[xi]);
    row["diagnostic"] = rational_json(grid.diagnostic[xi]);
    row["heldout"] = rational_json(grid.heldout[xi]);
    samples.push_back(row);
  }
  return {{"schema_version", kSchemaVersion},
          {"type", "density_grid"},
          {"module", module_name},
          {"kind", density::to_string(grid.kind)},
          {"extrapolation", density::to_string(grid.method)},
          {"dimension", grid.dimension},
          {"rank", grid.rank},
          {"ladder", grid.ladder},
          {"sampled", grid.sampled},
          {"samples", samples}};
}

json to_json(const density::ChamberDecomposition& chambers) {
  json list = json::array();
  for (const auto& c : chambers.chambers) {
    json entry = {{"interval", c.interval_string()},
                  {"zero_chamber", c.zero},
                  {"status", c.status},
                  {"interior_points", c.interior_points},
                  {"max_residual", rational_json(c.max_residual)}};
    if (c.polynomial) {
      entry["polynomial"] = c.polynomial->to_string();
      json coefficients = json::array();
      for (const auto& q : c.polynomial->coefficients()) coefficients.push_back(to_fraction_string(q));
      entry["coefficients"] = coefficients;
    }
    list.push_back(entry);
  }
  return {{"breakpoints", chambers.breakpoints},
          {"chambers", list},
          {"continuous_at_interior_breakpoints", optional_json(chambers.continuous_at_interior_breakpoints)},
          {"top_degree_is_d_minus_1", optional_json(chambers.top_degree_is_d_minus_1)},
          {"diagnostics", chambers.diagnostics}};
}

json to_json(const multiplicity::Stabilization& s) {
  return {{"status", multiplicity::to_string(s.status)},
          {"period", s.period},
          {"order", s.order},
          {"value", s.value.get_str()},
          {"dimension", s.dimension},
          {"n0", s.n0},
          {"diagnostic", s.diagnostic}};
}

json to_json(const multiplicity::EpsilonReport& r) {
  json out = {{"schema_version", kSchemaVersion},
              {"kind", "epsilon"},
              {"status", r.status},
              {"exact", r.exact ? json(to_fraction_string(*r.exact)) : json(nullptr)},
              {"estimate", rational_json(r.estimate)},
              {"estimate_half", rational_json(r.estimate_half)},
              {"diagnostic", rational_json(r.diagnostic)},
              {"ladder", r.ns},
              {"totals", integers(r.totals)},
              {"differences", to_json(r.differences)},
              {"diagnostics", r.diagnostics}};
  if (r.integral) {
    out["trapezoid_integral"] = rational_json(*r.integral);
    out["trapezoid_agrees"] = *r.integral_agrees;
  }
  return out;
}

namespace {

json version_json(const multiplicity::DiagonalVersion& v) {
  return {{"status", v.status},
          {"multiplicity", v.multiplicity ? json(to_fraction_string(Rational(*v.multiplicity))) : json(nullptr)},
          {"detected_dimension", v.detected_dimension},
          {"stated_dimension", v.stated_dimension},
          {"example_dimension", v.example_dimension},
          {"sequence", integers(v.sequence)},
          {"differences", to_json(v.differences)}};
}

}  // namespace

json to_json(const multiplicity::DiagonalReport& r) {
  return {{"schema_version", kSchemaVersion},
          {"kind", "diagonal"},
          {"c", r.c},
          {"n_max", r.n_max},
          {"a_version", version_json(r.a_version)},
          {"s_version", version_json(r.s_version)},
          {"diagnostics", r.diagnostics}};
}

json to_json(const multiplicity::BigradedFit& fit) {
  json classes = json::array();
  for (const auto& p : fit.class_polynomials) classes.push_back(p.to_string());
  return {{"data", multiplicity::to_string(fit.data)},
          {"c", fit.c},
          {"status", fit.status},
          {"degree_bound", fit.degree_bound},
          {"period", fit.period},
          {"margin", fit.margin},
          {"polynomial", fit.polynomial.to_string()},
          {"leading_form", fit.leading_form().to_string()},
          {"class_polynomials", classes},
          {"leading_forms_agree", optional_json(fit.leading_forms_agree)},
          {"diagnostics", fit.diagnostics}};
}

json to_json(const multiplicity::MixedMultiplicities& mixed) {
  return {{"schema_version", kSchemaVersion},
          {"kind", "mixed"},
          {"data", multiplicity::to_string(mixed.data)},
          {"e", rationals(mixed.e)},
          {"integral", mixed.integral},
          {"form_shape_ok", mixed.form_shape_ok},
          {"nonnegative", mixed.nonnegative},
          {"density_polynomial", mixed.density_polynomial.to_string()},
          {"diagnostics", mixed.diagnostics}};
}

json to_json(const dependence::DependenceVerdict& v) {
  json criteria = json::array();
  for (const auto& c : v.criteria) {
    criteria.push_back({{"id", c.id},
                        {"description", c.description},
                        {"sub", rationals(c.sub_values)},
                        {"sup", rationals(c.sup_values)},
                        {"usable", c.usable},
                        {"match", optional_json(c.match)},
                        {"decisive", c.decisive},
                        {"stand_in", c.stand_in},
                        {"note", c.note}});
  }
  return {{"schema_version", kSchemaVersion},
          {"type", "dependence_verdict"},
          {"verdict", dependence::to_string(v.verdict)},
          {"certificate", optional_json(v.certificate)},
          {"certificate_stable", optional_json(v.certificate_stable)},
          {"c", v.c},
          {"d_nm", v.d_nm},
          {"n_max", v.n_max},
          {"criteria", criteria},
          {"consistent", v.consistent},
          {"epsilon_gap_growth_heuristic", optional_json(v.epsilon_gap_growth)},
          {"diagnostics", v.diagnostics}};
}

std::string to_csv(const density::DensityGrid& grid) {
  std::ostringstream out;
  out << "x,x_float";
  for (int n : grid.sampled) out << ",n" << n;
  out << ",extrapolated,extrapolated_float,diagnostic,diagnostic_float\n";
  for (std::size_t xi = 0; xi < grid.x.size(); ++xi) {
    out << to_fraction_string(grid.x[xi]) << ',' << float_text(grid.x[xi]);
    for (const auto& v : grid.values[xi]) out << ',' << to_fraction_string(v);
    out << ',' << to_fraction_string(grid.extrapolated[xi]) << ',' << float_text(grid.extrapolated[xi])
        << ',' << to_fraction_string(grid.diagnostic[xi]) << ',' << float_text(grid.diagnostic[xi])
        << '\n';
  }
  return out.str();
}

std::string verdict_table(const dependence::DependenceVerdict& v) {
  std::ostringstream out;
  out << "verdict: " << dependence::to_string(v.verdict) << '\n';
  out << "certificate n0: " << (v.certificate ? std::to_string(*v.certificate) : "none") << '\n';
  out << "c = " << v.c << ", d_NM = " << v.d_nm << ", n_max = " << v.n_max << '\n';
  out << std::left << std::setw(16) << "criterion" << std::setw(24) << "N" << std::setw(24) << "M"
      << "match\n";
  const auto list = [](const std::vector<Rational>& qs) {
    if (qs.empty()) return std::string("-");
    std::string s;
    for (std::size_t i = 0; i < qs.size(); ++i) s += (i ? " " : "") + qs[i].get_str();
    return s;
  };
  for (const auto& c : v.criteria) {
    out << std::setw(16) << c.id << std::setw(24) << list(c.sub_values) << std::setw(24)
        << list(c.sup_values) << (c.match ? (*c.match ? "yes" : "NO") : "unusable")
        << (c.stand_in ? " (stand-in)" : "") << '\n';
  }
  out << "criteria consistent: " << (v.consistent ? "yes" : "no") << '\n';
  for (const auto& d : v.diagnostics) out << "note: " << d << '\n';
  return out.str();
}

}  // namespace rees::io
