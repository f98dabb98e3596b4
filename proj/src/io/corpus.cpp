#include "rees/io/corpus.hpp"

#include <filesystem>

#include "rees/core/errors.hpp"

namespace rees::io {

namespace {

using G = ModuleDocument::Generator;

CorpusEntry entry(std::string name, std::string description, std::vector<std::string> vars,
                  std::vector<int> shifts, std::vector<G> gens) {
  ModuleDocument doc;
  doc.name = name;
  doc.variables = std::move(vars);
  doc.shifts = std::move(shifts);
  doc.generators = std::move(gens);
  return {std::move(name), std::move(description), std::move(doc)};
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      entry("maximal", "(x, y) in k[x,y]", {"x", "y"}, {0}, {{{1, 0}, 0}, {{0, 1}, 0}}),
      entry("rees_m2", "(x^2, xy, y^2) in k[x,y]", {"x", "y"}, {0},
            {{{2, 0}, 0}, {{1, 1}, 0}, {{0, 2}, 0}}),
      entry("rees_reduction", "(x^2, y^2), a reduction of (x^2, xy, y^2)", {"x", "y"}, {0},
            {{{2, 0}, 0}, {{0, 2}, 0}}),
      entry("xsq_xy", "(x^2, xy) in k[x,y], saturation (x)", {"x", "y"}, {0},
            {{{2, 0}, 0}, {{1, 1}, 0}}),
      entry("xsq_ycube", "(x^2, y^3) in k[x,y], two chambers", {"x", "y"}, {0},
            {{{2, 0}, 0}, {{0, 3}, 0}}),
      entry("shifted_example", "(x^2, xy) in A(2), i.e. shift -2", {"x", "y"}, {-2},
            {{{2, 0}, 0}, {{1, 1}, 0}}),
      entry("rank2_diag", "x e1 + y e2 in A^2", {"x", "y"}, {0, 0}, {{{1, 0}, 0}, {{0, 1}, 1}}),
      entry("rank2_mixed", "x e1, y e1, y^2 e2 in A^2", {"x", "y"}, {0, 0},
            {{{1, 0}, 0}, {{0, 1}, 0}, {{0, 2}, 1}}),
      entry("three_vars", "(xy, yz, zx) in k[x,y,z]", {"x", "y", "z"}, {0},
            {{{1, 1, 0}, 0}, {{0, 1, 1}, 0}, {{1, 0, 1}, 0}}),
      entry("rank2_shifted", "x e1, y e2 in A + A(-1)", {"x", "y"}, {0, 1},
            {{{1, 0}, 0}, {{0, 1}, 1}}),
  };
  return entries;
}

core::TermModule corpus_module(const std::string& name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return to_module(e.document, "corpus:" + name);
  }
  std::string known;
  for (const auto& e : corpus()) known += (known.empty() ? "" : ", ") + e.name;
  throw InputError("unknown corpus module '" + name + "' (known: " + known + ")");
}

core::TermModule resolve_module(const std::string& spec) {
  static const std::string prefix = "corpus:";
  if (spec.rfind(prefix, 0) == 0) return corpus_module(spec.substr(prefix.size()));
  return parse_module(spec);
}

std::string module_label(const std::string& spec) {
  static const std::string prefix = "corpus:";
  if (spec.rfind(prefix, 0) == 0) return spec.substr(prefix.size());
  return std::filesystem::path(spec).stem().string();
}

}  // namespace rees::io
