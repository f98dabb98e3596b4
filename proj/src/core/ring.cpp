#include "rees/core/ring.hpp"

#include <algorithm>
#include <set>

#include "rees/core/errors.hpp"

namespace rees::core {

RingSpec::RingSpec(std::vector<std::string> variables) : variables_(std::move(variables)) {
  if (variables_.size() < 2) {
    throw InputError("ring must have at least 2 variables (Krull dimension d >= 2), got " +
                     std::to_string(variables_.size()));
  }
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw InputError("variable names must be nonempty");
    if (!seen.insert(v).second) throw InputError("duplicate variable name '" + v + "'");
  }
}

GradedFreeModule::GradedFreeModule(RingSpec ring, std::vector<int> shifts)
    : ring_(std::move(ring)), shifts_(std::move(shifts)) {
  if (shifts_.empty()) throw InputError("free module must have rank >= 1");
}

int GradedFreeModule::support_offset() const {
  const int lowest = *std::min_element(shifts_.begin(), shifts_.end());
  return std::max(0, -lowest);
}

long GradedFreeModule::basis_degree(std::span<const int> basis) const {
  long deg = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) deg += static_cast<long>(basis[i]) * shifts_[i];
  return deg;
}

AmbientPtr make_ambient(std::vector<std::string> variables, std::vector<int> shifts) {
  return std::make_shared<const GradedFreeModule>(RingSpec(std::move(variables)),
                                                  std::move(shifts));
}

}  // namespace rees::core
