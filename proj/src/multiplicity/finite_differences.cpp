#include "rees/multiplicity/finite_differences.hpp"

#include <algorithm>
#include <optional>

#include "rees/core/errors.hpp"

namespace rees::multiplicity {

std::string to_string(StabilizationStatus status) {
  switch (status) {
    case StabilizationStatus::Stabilized: return "stabilized";
    case StabilizationStatus::Zero: return "zero";
    case StabilizationStatus::Undetermined: return "undetermined";
  }
  return "unknown";
}

std::vector<Integer> differences(const std::vector<Integer>& values, int order) {
  if (order < 0) throw InputError("difference order must be nonnegative");
  std::vector<Integer> d = values;
  for (int k = 0; k < order && !d.empty(); ++k) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
    d.pop_back();
  }
  return d;
}

Stabilization stabilize(const std::vector<Integer>& values, long first_n, int min_run) {
  if (min_run < 2) throw InputError("min_run must be at least 2");
  Stabilization out;
  std::vector<Integer> d = values;
  for (int k = 0; static_cast<int>(d.size()) >= min_run; ++k) {
    std::size_t start = d.size() - 1;
    while (start > 0 && d[start - 1] == d.back()) --start;
    if (static_cast<int>(d.size() - start) >= min_run) {
      out.order = k;
      out.value = d.back();
      out.dimension = k + 1;
      out.n0 = first_n + static_cast<long>(start);
      out.status = (k == 0 && d.back() == 0) ? StabilizationStatus::Zero
                                             : StabilizationStatus::Stabilized;
      return out;
    }
    for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
    d.pop_back();
  }
  out.diagnostic = "no difference order is constant on a tail of " + std::to_string(min_run) +
                   " terms within " + std::to_string(values.size()) + " values; extend n_max";
  return out;
}

Rational Stabilization::top_difference() const {
  if (order < 0) return 0;
  return make_rational(value, ipow(period, static_cast<unsigned long>(order)));
}

Stabilization stabilize_quasi(const std::vector<Integer>& values, long first_n, int max_period,
                              int min_run) {
  Stabilization plain = stabilize(values, first_n, min_run);
  if (plain.status != StabilizationStatus::Undetermined) return plain;
  for (int p = 2; p <= max_period; ++p) {
    std::optional<Stabilization> common;
    bool agree = true;
    for (int r = 0; r < p && agree; ++r) {
      std::vector<Integer> sub;
      for (std::size_t i = static_cast<std::size_t>(r); i < values.size(); i += static_cast<std::size_t>(p)) {
        sub.push_back(values[i]);
      }
      Stabilization s = stabilize(sub, 0, min_run);
      if (s.status == StabilizationStatus::Undetermined) {
        agree = false;
        break;
      }
      const long n0 = first_n + r + static_cast<long>(p) * s.n0;
      if (!common) {
        common = s;
        common->n0 = n0;
      } else if (s.order != common->order || s.value != common->value) {
        agree = false;
      } else {
        common->n0 = std::max(common->n0, n0);
      }
    }
    if (agree && common) {
      common->period = p;
      return *common;
    }
  }
  plain.diagnostic += "; no period up to " + std::to_string(max_period) + " helps either";
  return plain;
}

}  // namespace rees::multiplicity
