#include "rees/core/power_cache.hpp"

#include "rees/core/errors.hpp"

namespace rees::core {

PowerCache::PowerCache(std::shared_ptr<PowerStore> store) : store_(std::move(store)) {}

ModulePtr PowerCache::power(const TermModule& base, int n) {
  if (n < 0) throw InputError("power exponent must be nonnegative");
  if (base.level() != 1) throw InputError("powers are taken of level-1 modules");
  Key key{base.canonical_string(), n};

  std::promise<ModulePtr> promise;
  std::shared_future<ModulePtr> future;
  bool owner = false;
  {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it != entries_.end()) {
      future = it->second;
    } else {
      future = promise.get_future().share();
      entries_.emplace(key, future);
      owner = true;
    }
  }
  if (!owner) return future.get();

  try {
    promise.set_value(compute(base, n));
  } catch (...) {
    promise.set_exception(std::current_exception());
    std::lock_guard lock(mutex_);
    entries_.erase(key);
  }
  return future.get();
}

ModulePtr PowerCache::compute(const TermModule& base, int n) {
  if (n == 0) return std::make_shared<const TermModule>(TermModule::unit(base.ambient_ptr()));
  if (n == 1) return std::make_shared<const TermModule>(base);
  if (store_) {
    if (auto loaded = store_->load(base, n)) {
      ++store_hits_;
      return std::make_shared<const TermModule>(std::move(*loaded));
    }
  }
  ModulePtr previous = power(base, n - 1);
  auto result = std::make_shared<const TermModule>(product(base, *previous));
  ++products_;
  if (store_) store_->save(base, n, *result);
  return result;
}

TermModule power(const TermModule& m, int n, PowerCache& cache) { return *cache.power(m, n); }

}  // namespace rees::core
