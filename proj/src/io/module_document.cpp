#include "rees/io/module_document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "rees/core/errors.hpp"

namespace rees::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& field, const std::string& what) {
  throw InputError(source + ": field '" + field + "': " + what);
}

const json& require(const json& parent, const std::string& key, const std::string& path,
                    const std::string& source) {
  if (!parent.is_object()) fail(source, path, "expected an object");
  auto it = parent.find(key);
  if (it == parent.end()) fail(source, path.empty() ? key : path + "." + key, "missing");
  return *it;
}

int as_int(const json& value, const std::string& field, const std::string& source) {
  if (!value.is_number_integer()) fail(source, field, "expected an integer");
  const auto v = value.get<long long>();
  if (v < -1'000'000 || v > 1'000'000) fail(source, field, "integer out of range");
  return static_cast<int>(v);
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

}  // namespace

ModuleDocument parse_module_document(const std::string& text, const std::string& source) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": line " + std::to_string(line_of(text, e.byte)) +
                     ": malformed JSON (" + e.what() + ")");
  }
  if (!root.is_object()) fail(source, "<root>", "expected an object");

  if (auto it = root.find("schema_version"); it != root.end()) {
    if (as_int(*it, "schema_version", source) != kSchemaVersion) {
      fail(source, "schema_version", "unsupported version, expected " + std::to_string(kSchemaVersion));
    }
  }

  ModuleDocument doc;
  if (auto it = root.find("name"); it != root.end()) {
    if (!it->is_string()) fail(source, "name", "expected a string");
    doc.name = it->get<std::string>();
  }

  const json& vars = require(require(root, "ring", "", source), "variables", "ring", source);
  if (!vars.is_array()) fail(source, "ring.variables", "expected an array of names");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string()) fail(source, "ring.variables[" + std::to_string(i) + "]", "expected a string");
    doc.variables.push_back(vars[i].get<std::string>());
  }

  const json& shifts = require(require(root, "free_module", "", source), "shifts", "free_module", source);
  if (!shifts.is_array() || shifts.empty()) fail(source, "free_module.shifts", "expected a nonempty array");
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    doc.shifts.push_back(as_int(shifts[i], "free_module.shifts[" + std::to_string(i) + "]", source));
  }

  const json& gens = require(root, "generators", "", source);
  if (!gens.is_array()) fail(source, "generators", "expected an array");
  if (gens.empty()) fail(source, "generators", "at least one generator is required");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string path = "generators[" + std::to_string(i) + "]";
    const json& exps = require(gens[i], "exponents", path, source);
    if (!exps.is_array()) fail(source, path + ".exponents", "expected an array");
    ModuleDocument::Generator g;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      const int a = as_int(exps[k], path + ".exponents[" + std::to_string(k) + "]", source);
      if (a < 0) fail(source, path + ".exponents[" + std::to_string(k) + "]", "negative exponent");
      g.exponents.push_back(a);
    }
    g.basis = as_int(require(gens[i], "basis", path, source), path + ".basis", source);
    doc.generators.push_back(std::move(g));
  }
  return doc;
}

core::TermModule to_module(const ModuleDocument& doc, const std::string& source) {
  core::AmbientPtr ambient;
  try {
    ambient = core::make_ambient(doc.variables, doc.shifts);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
  const int d = ambient->dimension();
  const int e = ambient->rank();
  std::vector<core::Term> terms;
  for (std::size_t i = 0; i < doc.generators.size(); ++i) {
    const auto& g = doc.generators[i];
    const std::string path = "generators[" + std::to_string(i) + "]";
    if (static_cast<int>(g.exponents.size()) != d) {
      fail(source, path + ".exponents", "expected " + std::to_string(d) + " entries, got " +
                                            std::to_string(g.exponents.size()));
    }
    if (g.basis < 0 || g.basis >= e) {
      fail(source, path + ".basis", "index " + std::to_string(g.basis) + " outside 0.." + std::to_string(e - 1));
    }
    core::Term t{g.exponents, core::unit_vector(e, g.basis)};
    if (t.degree(*ambient) < 0) {
      fail(source, path, "generator degree " + std::to_string(t.degree(*ambient)) + " is negative");
    }
    terms.push_back(std::move(t));
  }
  auto m = core::minimalize(ambient, 1, terms);
  if (m.rank() != e) {
    throw InputError(source + ": module rank " + std::to_string(m.rank()) +
                     " differs from free-module rank " + std::to_string(e) +
                     "; embeddings into free modules of larger rank (versal embeddings) are not "
                     "supported, every basis vector must carry a generator");
  }
  return m;
}

core::TermModule parse_module_text(const std::string& text, const std::string& source) {
  return to_module(parse_module_document(text, source), source);
}

core::TermModule parse_module(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_module_text(buffer.str(), path.string());
}

ModuleDocument to_document(const core::TermModule& m, const std::string& name) {
  if (m.level() != 1) throw InputError("only level-1 modules have a document form");
  ModuleDocument doc;
  doc.name = name;
  doc.variables = m.ambient().ring().variables();
  doc.shifts.assign(m.ambient().shifts().begin(), m.ambient().shifts().end());
  for (const auto& t : m.generators()) {
    const auto it = std::find(t.basis.begin(), t.basis.end(), 1);
    doc.generators.push_back({t.monomial, static_cast<int>(it - t.basis.begin())});
  }
  return doc;
}

json to_json(const ModuleDocument& doc) {
  json gens = json::array();
  for (const auto& g : doc.generators) gens.push_back({{"exponents", g.exponents}, {"basis", g.basis}});
  json root = {{"schema_version", kSchemaVersion},
               {"ring", {{"variables", doc.variables}}},
               {"free_module", {{"shifts", doc.shifts}}},
               {"generators", gens}};
  if (!doc.name.empty()) root["name"] = doc.name;
  return root;
}

std::string serialize_module(const core::TermModule& m, const std::string& name) {
  return to_json(to_document(m, name)).dump(2) + "\n";
}

}  // namespace rees::io
