// reesdens: densities, multiplicities and integral dependence of term modules.
//
// Exit status: 0 success (a not-reduction verdict included), 1 unexpected
// failure, 2 input error, 3 undetermined result, 4 internal invariant violation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "rees/core/errors.hpp"
#include "rees/density/chambers.hpp"
#include "rees/density/sampler.hpp"
#include "rees/io/corpus.hpp"
#include "rees/io/file_power_store.hpp"
#include "rees/io/report_json.hpp"
#include "rees/io/run_config.hpp"

namespace {

using namespace rees;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitUndetermined = 3;
constexpr int kExitInternal = 4;

struct Options {
  io::RunConfig config;
  std::string module;
  std::string sub;
  std::string sup;
  std::string kinds = "adic";
  std::string ladder;
  std::string grid;
  std::string tol = "1/20";
  std::string cache_dir;
  bool no_cache = false;
  bool chambers = false;
  bool epsilon = false;
  bool diagonal = false;
  bool mixed = false;
  std::string show;
  std::string export_dir;
};

fs::path default_cache_dir() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "reesdens";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "reesdens";
  return fs::path(".reesdens-cache");
}

void finish_config(Options& o) {
  if (!o.ladder.empty()) o.config.ladder = io::parse_ladder(o.ladder);
  if (!o.grid.empty()) o.config.grid = io::parse_grid(o.grid);
  o.config.tolerance = parse_fraction(o.tol);
  o.config.use_cache = !o.no_cache;
  if (o.config.use_cache) {
    o.config.cache_dir = o.cache_dir.empty() ? default_cache_dir() : fs::path(o.cache_dir);
  }
  o.config.validate();
}

std::unique_ptr<core::PowerCache> make_cache(const io::RunConfig& config) {
  std::shared_ptr<core::PowerStore> store;
  if (config.use_cache && config.cache_dir) store = std::make_shared<io::FilePowerStore>(*config.cache_dir);
  return std::make_unique<core::PowerCache>(store);
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

// With several kinds, "out.csv" becomes "out_adic.csv" and so on.
fs::path output_path(const std::string& requested, const std::string& label, const std::string& kind,
                     const std::string& extension, bool several) {
  if (requested.empty()) return label + "_" + kind + extension;
  fs::path p(requested);
  if (!several) return p;
  return p.parent_path() / (p.stem().string() + "_" + kind + p.extension().string());
}

std::vector<int> ladder_for(const io::RunConfig& config, bool richardson) {
  if (!config.ladder.empty()) return config.ladder;
  std::vector<int> ladder = density::default_ladder();
  if (config.n_max > 0) {
    std::erase_if(ladder, [&](int n) { return n >= config.n_max; });
    ladder.push_back(config.n_max);
  }
  if (richardson && ladder.back() % 4 != 0) {
    throw InputError("Richardson extrapolation needs n_max divisible by 4");
  }
  return ladder;
}

int cmd_density(Options& o) {
  finish_config(o);
  const auto m = io::resolve_module(o.module);
  const std::string label = io::module_label(o.module);
  auto cache = make_cache(o.config);
  const auto method = o.config.richardson ? density::Extrapolation::Richardson : density::Extrapolation::Raw;
  const auto ladder = ladder_for(o.config, o.config.richardson);
  const auto grid = o.config.grid.value_or(density::default_grid(m));

  std::vector<density::DensityKind> kinds;
  for (const auto& k : io::split(o.kinds, ',')) kinds.push_back(density::parse_density_kind(k));
  const bool several = kinds.size() > 1;

  density::DensitySampler sampler(m, *cache);
  bool fits_ok = true;
  for (const auto kind : kinds) {
    const auto sampled = sampler.sample(kind, grid, ladder, method);
    const auto kind_name = density::to_string(kind);
    auto json = io::to_json(sampled, label);
    if (o.chambers && kind == density::DensityKind::Adic) {
      const auto chambers = density::fit_piecewise(sampled, density::detect_chambers(m), o.config.tolerance);
      json["chambers"] = io::to_json(chambers);
      fits_ok = fits_ok && chambers.all_fitted();
      for (const auto& c : chambers.chambers) {
        std::cout << "  chamber " << c.interval_string() << ": "
                  << (c.polynomial ? c.polynomial->to_string() : std::string("-")) << " [" << c.status << "]\n";
      }
    }
    const auto csv_path = output_path(o.config.csv_out, label, kind_name, ".csv", several);
    const auto json_path = output_path(o.config.json_out, label, kind_name, ".json", several);
    write_file(csv_path, io::to_csv(sampled));
    write_file(json_path, json.dump(2) + "\n");
    Rational worst = 0;
    for (const auto& d : sampled.diagnostic) worst = std::max(worst, d);
    std::cout << kind_name << ": " << sampled.x.size() << " grid points, n_max = " << sampled.n_max()
              << ", max diagnostic " << worst.get_d() << " -> " << csv_path.string() << ", "
              << json_path.string() << '\n';
  }
  return fits_ok ? kExitOk : kExitUndetermined;
}

int cmd_multiplicity(Options& o) {
  finish_config(o);
  const auto m = io::resolve_module(o.module);
  auto cache = make_cache(o.config);
  if (!o.epsilon && !o.diagonal && !o.mixed) o.epsilon = o.diagonal = o.mixed = true;
  const long c = o.config.c.value_or(m.max_generator_degree() + 1);

  nlohmann::json report = {{"schema_version", io::kSchemaVersion},
                           {"type", "multiplicity_report"},
                           {"module", io::module_label(o.module)}};
  bool determined = true;
  if (o.epsilon) {
    multiplicity::EpsilonOptions eps;
    eps.n_max = o.config.n_max > 0 ? o.config.n_max : 40;
    eps.tolerance = o.config.tolerance;
    const auto r = multiplicity::epsilon_multiplicity(m, *cache, eps);
    report["epsilon"] = io::to_json(r);
    determined = determined && r.exact.has_value();
    std::cerr << "epsilon: estimate " << r.estimate.get_d() << " (diagnostic " << r.diagnostic.get_d()
              << "), exact " << (r.exact ? r.exact->get_str() : std::string("undetermined")) << '\n';
  }
  if (o.diagonal) {
    multiplicity::DiagonalOptions diag;
    if (o.config.n_max > 0) diag.n_max = o.config.n_max;
    const auto r = multiplicity::diagonal_multiplicity(m, c, *cache, diag);
    report["diagonal"] = io::to_json(r);
    determined = determined && r.a_version.multiplicity && r.s_version.multiplicity;
    std::cerr << "diagonal (c = " << c << "): A-version "
              << (r.a_version.multiplicity ? r.a_version.multiplicity->get_str() : "undetermined")
              << ", S-version "
              << (r.s_version.multiplicity ? r.s_version.multiplicity->get_str() : "undetermined") << '\n';
  }
  if (o.mixed) {
    multiplicity::BigradedFitOptions fit_options;
    fit_options.c = c;
    const auto fit = multiplicity::fit_bigraded_polynomial(m, *cache, fit_options);
    nlohmann::json mixed = {{"fit", io::to_json(fit)}};
    if (fit.success) {
      const auto e = multiplicity::mixed_multiplicities(fit);
      mixed.update(io::to_json(e));
      determined = determined && e.integral;
      std::cerr << "mixed: P = " << fit.polynomial.to_string() << ", e = [";
      for (std::size_t i = 0; i < e.e.size(); ++i) std::cerr << (i ? ", " : "") << e.e[i].get_str();
      std::cerr << "]\n";
    } else {
      determined = false;
      std::cerr << "mixed: " << fit.status << '\n';
    }
    report["mixed"] = mixed;
  }
  const std::string text = report.dump(2) + "\n";
  if (o.config.json_out.empty()) {
    std::cout << text;
  } else {
    write_file(o.config.json_out, text);
  }
  return determined ? kExitOk : kExitUndetermined;
}

int cmd_check(Options& o) {
  finish_config(o);
  const auto n = io::resolve_module(o.sub);
  const auto m = io::resolve_module(o.sup);
  auto cache = make_cache(o.config);
  dependence::DependenceOptions options;
  options.c = o.config.c;
  if (o.config.n_max > 0) options.n_max = o.config.n_max;
  const auto verdict = dependence::check_dependence(n, m, *cache, options);
  std::cout << io::verdict_table(verdict);
  auto json = io::to_json(verdict);
  json["sub"] = io::module_label(o.sub);
  json["sup"] = io::module_label(o.sup);
  if (!o.config.json_out.empty()) write_file(o.config.json_out, json.dump(2) + "\n");
  return verdict.verdict == dependence::Verdict::Undetermined ? kExitUndetermined : kExitOk;
}

int cmd_corpus(Options& o) {
  if (!o.show.empty()) {
    for (const auto& e : io::corpus()) {
      if (e.name == o.show) {
        std::cout << io::to_json(e.document).dump(2) << '\n';
        return kExitOk;
      }
    }
    throw InputError("unknown corpus module '" + o.show + "'");
  }
  if (!o.export_dir.empty()) {
    fs::create_directories(o.export_dir);
    for (const auto& e : io::corpus()) {
      write_file(fs::path(o.export_dir) / (e.name + ".json"), io::to_json(e.document).dump(2) + "\n");
    }
  }
  for (const auto& e : io::corpus()) std::cout << e.name << "\t" << e.description << '\n';
  return kExitOk;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--nmax", o.config.n_max, "largest power n");
  cmd->add_option("--tol", o.tol, "relative tolerance, fraction or decimal");
  cmd->add_option("--cache-dir", o.cache_dir, "directory for persisted powers");
  cmd->add_flag("--no-cache", o.no_cache, "do not read or write persisted powers");
  cmd->add_option("--json-out", o.config.json_out, "JSON output path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Densities, multiplicities and integral dependence of term modules"};
  app.require_subcommand(1);
  Options o;

  auto* density_cmd = app.add_subcommand("density", "sample density functions on an x-grid");
  density_cmd->add_option("--module", o.module, "module JSON file or corpus:NAME")->required();
  density_cmd->add_option("--kind", o.kinds, "comma list of adic, saturated, epsilon, cumulative");
  density_cmd->add_option("--ladder", o.ladder, "comma list of n values, increasing");
  density_cmd->add_option("--grid", o.grid, "LOWER:UPPER:STEP");
  density_cmd->add_option("--csv-out", o.config.csv_out, "CSV output path");
  density_cmd->add_flag("--richardson", o.config.richardson, "one Richardson step on n_max/2");
  density_cmd->add_flag("--chambers", o.chambers, "fit chamber polynomials to the adic density");
  add_common(density_cmd, o);

  auto* mult_cmd = app.add_subcommand("multiplicity", "epsilon, diagonal and mixed multiplicities");
  mult_cmd->add_option("--module", o.module, "module JSON file or corpus:NAME")->required();
  mult_cmd->add_flag("--epsilon", o.epsilon, "epsilon multiplicity");
  mult_cmd->add_flag("--diagonal", o.diagonal, "diagonal subalgebra multiplicities");
  mult_cmd->add_flag("--mixed", o.mixed, "bigraded fit and mixed multiplicities");
  mult_cmd->add_option("--c", o.config.c, "diagonal slope, must exceed d_M");
  add_common(mult_cmd, o);

  auto* check_cmd = app.add_subcommand("check", "decide whether N is a reduction of M");
  check_cmd->add_option("--sub", o.sub, "N: module JSON file or corpus:NAME")->required();
  check_cmd->add_option("--sup", o.sup, "M: module JSON file or corpus:NAME")->required();
  check_cmd->add_option("--c", o.config.c, "diagonal slope, must exceed d_{N,M}");
  add_common(check_cmd, o);

  auto* corpus_cmd = app.add_subcommand("corpus", "list the bundled example modules");
  corpus_cmd->add_option("--show", o.show, "print the document of one module");
  corpus_cmd->add_option("--export", o.export_dir, "write every document into a directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (density_cmd->parsed()) return cmd_density(o);
    if (mult_cmd->parsed()) return cmd_multiplicity(o);
    if (check_cmd->parsed()) return cmd_check(o);
    return cmd_corpus(o);
  } catch (const rees::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const rees::InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
