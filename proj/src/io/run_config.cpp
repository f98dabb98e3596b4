#include "rees/io/run_config.hpp"

#include <charconv>

#include "rees/core/errors.hpp"

namespace rees::io {

std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(separator, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<int> parse_ladder(const std::string& text) {
  std::vector<int> ladder;
  for (const auto& part : split(text, ',')) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw InputError("--ladder: '" + part + "' is not an integer");
    }
    ladder.push_back(value);
  }
  return ladder;
}

density::GridSpec parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw InputError("--grid expects LOWER:UPPER:STEP, got '" + text + "'");
  density::GridSpec g{parse_fraction(parts[0]), parse_fraction(parts[1]), parse_fraction(parts[2])};
  g.validate();
  return g;
}

void RunConfig::validate() const {
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (ladder[i] < 1) throw InputError("ladder entries must be positive");
    if (i && ladder[i] <= ladder[i - 1]) throw InputError("ladder must be strictly increasing");
  }
  if (grid) grid->validate();
  if (tolerance <= 0) throw InputError("tolerance must be positive");
  if (n_max < 0) throw InputError("n_max must be positive");
}

}  // namespace rees::io
