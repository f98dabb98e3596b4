#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "rees/core/term_module.hpp"

namespace rees::io {

inline constexpr int kSchemaVersion = 1;

// JSON input format:
//   {"schema_version": 1, "name": "...",
//    "ring": {"variables": ["x", "y"]},
//    "free_module": {"shifts": [0]},
//    "generators": [{"exponents": [2, 0], "basis": 0}, ...]}
struct ModuleDocument {
  struct Generator {
    core::Exponents exponents;
    int basis = 0;
  };
  std::string name;
  std::vector<std::string> variables;
  std::vector<int> shifts;
  std::vector<Generator> generators;
};

ModuleDocument parse_module_document(const std::string& text, const std::string& source = "<input>");
// Level-1 module; rejects negative-degree generators and rank M != rank F.
core::TermModule to_module(const ModuleDocument& doc, const std::string& source = "<input>");

core::TermModule parse_module_text(const std::string& text, const std::string& source = "<input>");
core::TermModule parse_module(const std::filesystem::path& path);

ModuleDocument to_document(const core::TermModule& m, const std::string& name = "");
nlohmann::json to_json(const ModuleDocument& doc);
std::string serialize_module(const core::TermModule& m, const std::string& name = "");

}  // namespace rees::io
