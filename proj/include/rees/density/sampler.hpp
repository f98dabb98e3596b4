#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "rees/core/power_cache.hpp"
#include "rees/density/grid.hpp"

namespace rees::density {

// Samples normalized graded-piece lengths of M^n and its saturation.
// Powers and saturations are prepared one n at a time; the (n, x) cells are
// then filled in parallel.
class DensitySampler {
 public:
  // Requires a level-1 module of full rank (rank M = rank F).
  DensitySampler(core::TermModule module, core::PowerCache& cache);

  const core::TermModule& module() const { return module_; }

  DensityGrid sample(DensityKind kind, const GridSpec& grid, std::vector<int> ladder,
                     Extrapolation method = Extrapolation::Raw);

  const core::TermModule& power(int n);
  const core::TermModule& saturated_power(int n);

  // Unnormalized length behind a sample at degree m.
  Integer length(DensityKind kind, int n, long m);

 private:
  core::TermModule module_;
  core::PowerCache& cache_;
  std::mutex mutex_;
  std::map<int, core::ModulePtr> powers_;
  std::map<int, std::shared_ptr<const core::TermModule>> saturations_;
};

void require_full_rank(const core::TermModule& m);

DensityGrid sample_adic(const core::TermModule& m, const GridSpec& grid, std::vector<int> ladder,
                        core::PowerCache& cache, Extrapolation method = Extrapolation::Raw);
DensityGrid sample_saturated(const core::TermModule& m, const GridSpec& grid,
                             std::vector<int> ladder, core::PowerCache& cache,
                             Extrapolation method = Extrapolation::Raw);
DensityGrid sample_epsilon(const core::TermModule& m, const GridSpec& grid,
                           std::vector<int> ladder, core::PowerCache& cache,
                           Extrapolation method = Extrapolation::Raw);
DensityGrid sample_cumulative(const core::TermModule& m, const GridSpec& grid,
                              std::vector<int> ladder, core::PowerCache& cache,
                              Extrapolation method = Extrapolation::Raw);

}  // namespace rees::density
