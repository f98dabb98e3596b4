#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace oracle {

using rees::core::GradedFreeModule;

std::vector<Exponents> monomials_of_degree(int nvars, int degree) {
  std::vector<Exponents> out;
  if (degree < 0) return out;
  Exponents current(static_cast<std::size_t>(nvars), 0);
  std::function<void(int, int)> rec = [&](int index, int remaining) {
    if (index == nvars - 1) {
      current[static_cast<std::size_t>(index)] = remaining;
      out.push_back(current);
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      current[static_cast<std::size_t>(index)] = a;
      rec(index + 1, remaining - a);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  rec(0, degree);
  return out;
}

bool divides_term(const Term& g, const Term& t) {
  if (g.basis != t.basis) return false;
  for (std::size_t i = 0; i < g.monomial.size(); ++i) {
    if (g.monomial[i] > t.monomial[i]) return false;
  }
  return true;
}

bool in_span(const std::vector<Term>& generators, const Term& t) {
  return std::any_of(generators.begin(), generators.end(),
                     [&](const Term& g) { return divides_term(g, t); });
}

std::vector<Term> power_generators(const std::vector<Term>& generators, int n, int rank) {
  const int d = generators.empty() ? 0 : static_cast<int>(generators.front().monomial.size());
  std::vector<Term> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      Term t{Exponents(static_cast<std::size_t>(d), 0), Exponents(static_cast<std::size_t>(rank), 0)};
      for (std::size_t i : pick) {
        for (int k = 0; k < d; ++k) t.monomial[k] += generators[i].monomial[k];
        for (int k = 0; k < rank; ++k) t.basis[k] += generators[i].basis[k];
      }
      out.push_back(t);
      return;
    }
    for (std::size_t i = from; i < generators.size(); ++i) {
      pick.push_back(i);
      rec(i, left - 1);
      pick.pop_back();
    }
  };
  rec(0, n);
  return out;
}

std::vector<Term> minimal_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  std::vector<Term> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < terms.size() && !redundant; ++j) {
      redundant = j != i && divides_term(terms[j], terms[i]);
    }
    if (!redundant) out.push_back(terms[i]);
  }
  return out;
}

namespace {

std::vector<Exponents> compositions(int parts, int total) { return monomials_of_degree(parts, total); }

long basis_degree(const GradedFreeModule& ambient, const Exponents& basis) {
  long deg = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) deg += static_cast<long>(basis[i]) * ambient.shifts()[i];
  return deg;
}

}  // namespace

Integer brute_length(const std::vector<Term>& generators, const GradedFreeModule& ambient, int level,
                     long m) {
  Integer count = 0;
  for (const auto& basis : compositions(ambient.rank(), level)) {
    const long t = m - basis_degree(ambient, basis);
    if (t < 0) continue;
    for (const auto& mono : monomials_of_degree(ambient.dimension(), static_cast<int>(t))) {
      if (in_span(generators, Term{mono, basis})) ++count;
    }
  }
  return count;
}

Integer inclusion_exclusion_count(const std::vector<Exponents>& generators, int nvars, long t) {
  const std::size_t k = generators.size();
  Integer total = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    Exponents l(static_cast<std::size_t>(nvars), 0);
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      ++bits;
      for (int v = 0; v < nvars; ++v) l[v] = std::max(l[v], generators[i][v]);
    }
    long deg = 0;
    for (int a : l) deg += a;
    const long rest = t - deg;
    if (rest < 0) continue;
    // Monomials of degree rest in nvars variables.
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(rest + nvars - 1),
                 static_cast<unsigned long>(nvars - 1));
    total += (bits % 2 == 1) ? c : Integer(-c);
  }
  return total;
}

namespace {

// t lies in (M : m^k) iff every x_i t lies in (M : m^(k-1)); terms already in
// M lie in every colon.
bool in_colon(const std::vector<Term>& generators, const Term& t, int k, int nvars,
              std::map<std::pair<Term, int>, bool>& memo) {
  if (in_span(generators, t)) return true;
  if (k == 0) return false;
  const auto key = std::make_pair(t, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool inside = true;
  for (int v = 0; v < nvars && inside; ++v) {
    Term u = t;
    ++u.monomial[v];
    inside = in_colon(generators, u, k - 1, nvars, memo);
  }
  memo.emplace(key, inside);
  return inside;
}

}  // namespace

bool in_saturation(const std::vector<Term>& generators, const Term& t, int nvars) {
  // Any monomial of degree sum(E_i) is divisible by some x_i^(E_i), where E_i
  // is the largest x_i-exponent among the generators, so k = sum(E_i) suffices.
  int k = 0;
  for (int v = 0; v < nvars; ++v) {
    int top = 0;
    for (const auto& g : generators) top = std::max(top, g.monomial[v]);
    k += top;
  }
  std::map<std::pair<Term, int>, bool> memo;
  return in_colon(generators, t, k, nvars, memo);
}

std::vector<Term> terms_up_to(int nvars, int rank, int level, int max_monomial_degree) {
  std::vector<Term> out;
  for (const auto& basis : compositions(rank, level)) {
    for (int deg = 0; deg <= max_monomial_degree; ++deg) {
      for (const auto& mono : monomials_of_degree(nvars, deg)) out.push_back(Term{mono, basis});
    }
  }
  return out;
}

RandomModule random_module(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick_d(2, 3), pick_e(1, 2), pick_shift(-1, 1), pick_count(1, 4);
  const int d = pick_d(rng);
  const int e = pick_e(rng);
  std::vector<int> shifts;
  for (int i = 0; i < e; ++i) shifts.push_back(e == 1 ? 0 : pick_shift(rng));
  std::vector<std::string> names;
  for (int i = 0; i < d; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  RandomModule r{rees::core::make_ambient(names, shifts), {}};
  for (int b = 0; b < e; ++b) {
    const int count = pick_count(rng);
    // Term degree |alpha| + shift stays within [0, 4].
    std::uniform_int_distribution<int> pick_deg(std::max(0, -shifts[b]), 4 - shifts[b]);
    for (int g = 0; g < count; ++g) {
      const auto choices = monomials_of_degree(d, pick_deg(rng));
      std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
      Exponents basis(static_cast<std::size_t>(e), 0);
      basis[static_cast<std::size_t>(b)] = 1;
      r.generators.push_back(Term{choices[pick(rng)], basis});
    }
  }
  return r;
}

rees::core::TermModule to_module(const RandomModule& r) {
  return rees::core::minimalize(r.ambient, 1, r.generators);
}

}  // namespace oracle
