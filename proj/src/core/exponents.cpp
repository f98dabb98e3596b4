#include "rees/core/exponents.hpp"

#include <algorithm>
#include <numeric>

namespace rees::core {

int total_degree(std::span<const int> a) { return std::accumulate(a.begin(), a.end(), 0); }

bool divides(std::span<const int> a, std::span<const int> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents add(std::span<const int> a, std::span<const int> b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponents lcm(std::span<const int> a, std::span<const int> b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents unit_vector(int size, int index) {
  Exponents r(static_cast<std::size_t>(size), 0);
  r[static_cast<std::size_t>(index)] = 1;
  return r;
}

bool grlex_less(const Exponents& a, const Exponents& b) {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

std::string to_string(std::span<const int> a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

std::size_t ExponentsHash::operator()(const Exponents& a) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : a) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace rees::core
