#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rees/density/grid.hpp"

namespace rees::io {

struct RunConfig {
  std::vector<int> ladder;               // empty: command default
  std::optional<density::GridSpec> grid;  // nullopt: module default
  std::optional<long> c;
  int n_max = 0;                          // 0: command default
  Rational tolerance{1, 20};
  bool richardson = false;
  std::string json_out;
  std::string csv_out;
  std::optional<std::filesystem::path> cache_dir;
  bool use_cache = true;

  // Ladder strictly increasing and positive, step > 0, tolerance > 0.
  void validate() const;
};

// "8,16,24"
std::vector<int> parse_ladder(const std::string& text);
// "LOWER:UPPER:STEP" with fractions allowed, e.g. "-1:4:1/8"
density::GridSpec parse_grid(const std::string& text);
std::vector<std::string> split(const std::string& text, char separator);

}  // namespace rees::io
