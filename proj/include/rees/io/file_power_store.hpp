#pragma once

#include <filesystem>
#include <mutex>

#include "rees/core/power_cache.hpp"

namespace rees::io {

// Stores M^n as <hash of M>_<n>.json under a directory. Each file repeats the
// canonical string of M, so a hash collision reads as a miss.
class FilePowerStore : public core::PowerStore {
 public:
  explicit FilePowerStore(std::filesystem::path directory);

  std::optional<core::TermModule> load(const core::TermModule& base, int n) override;
  void save(const core::TermModule& base, int n, const core::TermModule& power) override;

  std::filesystem::path path_for(const core::TermModule& base, int n) const;

 private:
  std::filesystem::path directory_;
  std::mutex write_mutex_;
};

}  // namespace rees::io
