#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rees::core {

// Exponent vector of a monomial x^a (or of a symmetric-basis product e^a).
using Exponents = std::vector<int>;

int total_degree(std::span<const int> a);
bool divides(std::span<const int> a, std::span<const int> b);
Exponents add(std::span<const int> a, std::span<const int> b);
Exponents lcm(std::span<const int> a, std::span<const int> b);
Exponents unit_vector(int size, int index);

// Graded-lexicographic comparison (total degree first, then lex).
bool grlex_less(const Exponents& a, const Exponents& b);

std::string to_string(std::span<const int> a);

struct ExponentsHash {
  std::size_t operator()(const Exponents& a) const noexcept;
};

std::uint64_t fnv1a(std::string_view bytes);

}  // namespace rees::core
