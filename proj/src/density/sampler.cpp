#include "rees/density/sampler.hpp"

#include <algorithm>

#include "rees/core/errors.hpp"
#include "rees/core/parallel.hpp"
#include "rees/hilbert/lengths.hpp"

namespace rees::density {

void require_full_rank(const core::TermModule& m) {
  if (m.level() != 1) throw InputError("expected a level-1 module");
  if (m.rank() != m.ambient().rank()) {
    throw InputError("module rank " + std::to_string(m.rank()) + " differs from free-module rank " +
                     std::to_string(m.ambient().rank()) +
                     "; embeddings into free modules of larger rank (versal embeddings) are not "
                     "supported, re-embed M into a free module of rank equal to rank M");
  }
}

DensitySampler::DensitySampler(core::TermModule module, core::PowerCache& cache)
    : module_(std::move(module)), cache_(cache) {
  require_full_rank(module_);
}

const core::TermModule& DensitySampler::power(int n) {
  std::lock_guard lock(mutex_);
  auto it = powers_.find(n);
  if (it == powers_.end()) it = powers_.emplace(n, cache_.power(module_, n)).first;
  return *it->second;
}

const core::TermModule& DensitySampler::saturated_power(int n) {
  const core::TermModule& p = power(n);
  std::lock_guard lock(mutex_);
  auto it = saturations_.find(n);
  if (it == saturations_.end()) {
    it = saturations_.emplace(n, std::make_shared<const core::TermModule>(core::saturate(p))).first;
  }
  return *it->second;
}

Integer DensitySampler::length(DensityKind kind, int n, long m) {
  switch (kind) {
    case DensityKind::Adic:
      return hilbert::length_component(power(n), m);
    case DensityKind::Saturated:
      return hilbert::length_component(saturated_power(n), m);
    case DensityKind::Epsilon:
      return hilbert::length_component(saturated_power(n), m) -
             hilbert::length_component(power(n), m);
    case DensityKind::Cumulative:
      return hilbert::cumulative_length(power(n), m);
  }
  throw InternalError("unhandled density kind");
}

DensityGrid DensitySampler::sample(DensityKind kind, const GridSpec& spec, std::vector<int> ladder,
                                   Extrapolation method) {
  if (ladder.empty()) throw InputError("n ladder is empty");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (ladder[i] < 1) throw InputError("n ladder entries must be positive");
    if (i && ladder[i] <= ladder[i - 1]) throw InputError("n ladder must be strictly increasing");
  }
  const int n_max = ladder.back();
  if (n_max < 2) throw InputError("n_max must be at least 2");
  if (method == Extrapolation::Richardson && n_max % 4 != 0) {
    throw InputError("Richardson extrapolation needs n_max divisible by 4");
  }

  DensityGrid grid;
  grid.kind = kind;
  grid.method = method;
  grid.dimension = module_.dimension();
  grid.rank = module_.ambient().rank();
  grid.x = spec.points();
  grid.ladder = ladder;
  grid.sampled = ladder;
  grid.sampled.push_back(n_max / 2);
  if (method == Extrapolation::Richardson) grid.sampled.push_back(n_max / 4);
  std::sort(grid.sampled.begin(), grid.sampled.end());
  grid.sampled.erase(std::unique(grid.sampled.begin(), grid.sampled.end()), grid.sampled.end());

  for (int n : grid.sampled) {
    power(n);
    if (kind == DensityKind::Saturated || kind == DensityKind::Epsilon) saturated_power(n);
  }

  const std::size_t columns = grid.sampled.size();
  grid.values.assign(grid.x.size(), std::vector<Rational>(columns));
  core::parallel_for(grid.x.size() * columns, [&](std::size_t cell) {
    const std::size_t xi = cell / columns;
    const std::size_t k = cell % columns;
    const int n = grid.sampled[k];
    const long m = floor_div(grid.x[xi] * n).get_si();
    grid.values[xi][k] =
        Rational(length(kind, n, m)) * normalization(kind, grid.dimension, grid.rank, n);
  });

  const int half = n_max / 2;
  for (std::size_t xi = 0; xi < grid.x.size(); ++xi) {
    const Rational& top = grid.value(n_max, xi);
    const Rational& mid = grid.value(half, xi);
    grid.diagnostic.push_back(abs(top - mid));
    if (method == Extrapolation::Richardson) {
      grid.extrapolated.push_back(2 * top - mid);
      grid.heldout.push_back(2 * mid - grid.value(n_max / 4, xi));
    } else {
      grid.extrapolated.push_back(top);
      grid.heldout.push_back(mid);
    }
  }
  return grid;
}

namespace {

DensityGrid run(DensityKind kind, const core::TermModule& m, const GridSpec& grid,
                std::vector<int> ladder, core::PowerCache& cache, Extrapolation method) {
  DensitySampler sampler(m, cache);
  return sampler.sample(kind, grid, std::move(ladder), method);
}

}  // namespace

DensityGrid sample_adic(const core::TermModule& m, const GridSpec& grid, std::vector<int> ladder,
                        core::PowerCache& cache, Extrapolation method) {
  return run(DensityKind::Adic, m, grid, std::move(ladder), cache, method);
}

DensityGrid sample_saturated(const core::TermModule& m, const GridSpec& grid,
                             std::vector<int> ladder, core::PowerCache& cache,
                             Extrapolation method) {
  return run(DensityKind::Saturated, m, grid, std::move(ladder), cache, method);
}

DensityGrid sample_epsilon(const core::TermModule& m, const GridSpec& grid,
                           std::vector<int> ladder, core::PowerCache& cache,
                           Extrapolation method) {
  return run(DensityKind::Epsilon, m, grid, std::move(ladder), cache, method);
}

DensityGrid sample_cumulative(const core::TermModule& m, const GridSpec& grid,
                              std::vector<int> ladder, core::PowerCache& cache,
                              Extrapolation method) {
  return run(DensityKind::Cumulative, m, grid, std::move(ladder), cache, method);
}

}  // namespace rees::density
