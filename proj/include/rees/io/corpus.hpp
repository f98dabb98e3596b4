#pragma once

#include <string>
#include <vector>

#include "rees/io/module_document.hpp"

namespace rees::io {

struct CorpusEntry {
  std::string name;
  std::string description;
  ModuleDocument document;
};

// Bundled example modules, in a fixed order.
const std::vector<CorpusEntry>& corpus();

core::TermModule corpus_module(const std::string& name);

// "corpus:NAME" selects a bundled module, anything else is a file path.
core::TermModule resolve_module(const std::string& spec);
std::string module_label(const std::string& spec);

}  // namespace rees::io
