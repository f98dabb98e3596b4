#pragma once

#include <atomic>
#include <cstdint>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "rees/core/term_module.hpp"

namespace rees::core {

using ModulePtr = std::shared_ptr<const TermModule>;

// Persistence backend for powers, keyed by the base module's canonical
// string and the exponent.
class PowerStore {
 public:
  virtual ~PowerStore() = default;
  virtual std::optional<TermModule> load(const TermModule& base, int n) = 0;
  virtual void save(const TermModule& base, int n, const TermModule& power) = 0;
};

// Shared memo of M^n. Concurrent requests for the same power wait on a single
// computation; M^n is built as M * M^(n-1).
class PowerCache {
 public:
  explicit PowerCache(std::shared_ptr<PowerStore> store = nullptr);

  PowerCache(const PowerCache&) = delete;
  PowerCache& operator=(const PowerCache&) = delete;

  ModulePtr power(const TermModule& base, int n);

  // Number of products actually carried out (store hits do not count).
  std::uint64_t products_computed() const { return products_.load(); }
  std::uint64_t store_hits() const { return store_hits_.load(); }

 private:
  using Key = std::pair<std::string, int>;

  ModulePtr compute(const TermModule& base, int n);

  std::shared_ptr<PowerStore> store_;
  std::mutex mutex_;
  std::map<Key, std::shared_future<ModulePtr>> entries_;
  std::atomic<std::uint64_t> products_{0};
  std::atomic<std::uint64_t> store_hits_{0};
};

TermModule power(const TermModule& m, int n, PowerCache& cache);

}  // namespace rees::core
