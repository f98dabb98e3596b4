#include "rees/io/file_power_store.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "rees/core/errors.hpp"
#include "rees/io/module_document.hpp"

namespace rees::io {

using nlohmann::json;

FilePowerStore::FilePowerStore(std::filesystem::path directory) : directory_(std::move(directory)) {
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (ec) throw InputError("cannot create cache directory " + directory_.string() + ": " + ec.message());
}

std::filesystem::path FilePowerStore::path_for(const core::TermModule& base, int n) const {
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << base.content_hash() << std::dec << '_'
       << n << ".json";
  return directory_ / name.str();
}

std::optional<core::TermModule> FilePowerStore::load(const core::TermModule& base, int n) {
  std::ifstream in(path_for(base, n));
  if (!in) return std::nullopt;
  try {
    const json doc = json::parse(in);
    if (doc.at("schema_version").get<int>() != kSchemaVersion) return std::nullopt;
    if (doc.at("base").get<std::string>() != base.canonical_string()) return std::nullopt;
    if (doc.at("n").get<int>() != n) return std::nullopt;
    std::map<core::Exponents, core::MonomialIdeal> components;
    const int d = base.dimension();
    for (const auto& c : doc.at("components")) {
      components.emplace(c.at("basis").get<core::Exponents>(),
                         core::MonomialIdeal::from_generators(
                             d, c.at("generators").get<std::vector<core::Exponents>>()));
    }
    auto power = core::TermModule::from_components(base.ambient_ptr(), n, std::move(components));
    if (power.canonical_string() != doc.at("power").get<std::string>()) return std::nullopt;
    return power;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void FilePowerStore::save(const core::TermModule& base, int n, const core::TermModule& power) {
  json components = json::array();
  for (const auto& [basis, ideal] : power.components()) {
    components.push_back({{"basis", basis}, {"generators", ideal.generators()}});
  }
  const json doc = {{"schema_version", kSchemaVersion},
                    {"base", base.canonical_string()},
                    {"n", n},
                    {"power", power.canonical_string()},
                    {"components", components}};
  const auto target = path_for(base, n);
  std::lock_guard lock(write_mutex_);
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;  // caching is best effort
    out << doc.dump() << '\n';
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
}

}  // namespace rees::io
