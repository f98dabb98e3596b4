#include "rees/core/term_module.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

#include "rees/core/errors.hpp"

namespace rees::core {

namespace {

void check_shape(const GradedFreeModule& ambient, const Term& t) {
  if (static_cast<int>(t.monomial.size()) != ambient.dimension() ||
      static_cast<int>(t.basis.size()) != ambient.rank()) {
    throw InputError("term " + to_string(t.monomial) + "*e^" + to_string(t.basis) +
                     " does not match the ambient free module (d=" +
                     std::to_string(ambient.dimension()) +
                     ", e=" + std::to_string(ambient.rank()) + ")");
  }
  for (int v : t.monomial) {
    if (v < 0) throw InputError("negative exponent in term monomial " + to_string(t.monomial));
  }
  for (int v : t.basis) {
    if (v < 0) throw InputError("negative exponent in term basis " + to_string(t.basis));
  }
}

void require_same_ambient(const TermModule& p, const TermModule& q, const char* op) {
  if (!p.same_ambient(q)) throw InputError(std::string(op) + ": modules live in different free modules");
}

void require_same_level(const TermModule& p, const TermModule& q, const char* op) {
  require_same_ambient(p, q, op);
  if (p.level() != q.level()) {
    throw InputError(std::string(op) + ": level mismatch (" + std::to_string(p.level()) + " vs " +
                     std::to_string(q.level()) + ")");
  }
}

void compositions(int parts, int total, Exponents& current, int index,
                  std::vector<Exponents>& out) {
  if (index == parts - 1) {
    current[static_cast<std::size_t>(index)] = total;
    out.push_back(current);
    return;
  }
  for (int k = total; k >= 0; --k) {
    current[static_cast<std::size_t>(index)] = k;
    compositions(parts, total - k, current, index + 1, out);
  }
}

std::vector<Exponents> all_exponents(int parts, int total) {
  std::vector<Exponents> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  Exponents current(static_cast<std::size_t>(parts), 0);
  compositions(parts, total, current, 0, out);
  return out;
}

}  // namespace

long Term::degree(const GradedFreeModule& ambient) const {
  return total_degree(monomial) + ambient.basis_degree(basis);
}

TermModule::TermModule(AmbientPtr ambient, int level) : ambient_(std::move(ambient)), level_(level) {
  if (!ambient_) throw InputError("term module needs an ambient free module");
  if (level_ < 0) throw InputError("term module level must be nonnegative");
}

TermModule TermModule::unit(AmbientPtr ambient) {
  TermModule m(std::move(ambient), 0);
  m.components_.emplace(Exponents(static_cast<std::size_t>(m.ambient_->rank()), 0),
                        MonomialIdeal::unit(m.dimension()));
  return m;
}

TermModule TermModule::free_power(AmbientPtr ambient, int level) {
  TermModule m(std::move(ambient), level);
  for (auto& a : all_exponents(m.ambient_->rank(), level)) {
    m.components_.emplace(std::move(a), MonomialIdeal::unit(m.dimension()));
  }
  return m;
}

TermModule TermModule::from_components(AmbientPtr ambient, int level,
                                       std::map<Exponents, MonomialIdeal> components) {
  TermModule m(std::move(ambient), level);
  for (auto& [basis, ideal] : components) {
    if (static_cast<int>(basis.size()) != m.ambient_->rank() || total_degree(basis) != level) {
      throw InputError("component basis " + to_string(basis) + " is not at level " +
                       std::to_string(level));
    }
    if (ideal.nvars() != m.dimension()) throw InputError("component ideal has wrong variable count");
    if (!ideal.is_zero()) m.components_.emplace(basis, std::move(ideal));
  }
  return m;
}

std::vector<ComponentIdeal> TermModule::component_ideals() const {
  std::vector<ComponentIdeal> out;
  out.reserve(components_.size());
  for (const auto& [basis, ideal] : components_) out.push_back({basis, ideal});
  return out;
}

const MonomialIdeal* TermModule::component(const Exponents& basis) const {
  auto it = components_.find(basis);
  return it == components_.end() ? nullptr : &it->second;
}

std::vector<Term> TermModule::generators() const {
  std::vector<Term> out;
  for (const auto& [basis, ideal] : components_) {
    for (const auto& g : ideal.generators()) out.push_back({g, basis});
  }
  return out;
}

std::size_t TermModule::generator_count() const {
  std::size_t n = 0;
  for (const auto& [basis, ideal] : components_) n += ideal.size();
  return n;
}

bool TermModule::contains(const Term& t) const {
  const MonomialIdeal* ideal = component(t.basis);
  return ideal && ideal->contains(t.monomial);
}

std::vector<long> TermModule::generator_degrees() const {
  std::vector<long> degrees;
  for (const auto& [basis, ideal] : components_) {
    const long shift = ambient_->basis_degree(basis);
    for (const auto& g : ideal.generators()) degrees.push_back(total_degree(g) + shift);
  }
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  return degrees;
}

long TermModule::min_generator_degree() const {
  auto degrees = generator_degrees();
  if (degrees.empty()) throw InputError("zero module has no generator degrees");
  return degrees.front();
}

long TermModule::max_generator_degree() const {
  auto degrees = generator_degrees();
  if (degrees.empty()) throw InputError("zero module has no generator degrees");
  return degrees.back();
}

bool TermModule::nonnegatively_graded() const {
  auto degrees = generator_degrees();
  return degrees.empty() || degrees.front() >= 0;
}

std::string TermModule::canonical_string() const {
  std::string s = "v=";
  for (const auto& v : ambient_->ring().variables()) s += v + ",";
  s += ";s=";
  for (int f : ambient_->shifts()) s += std::to_string(f) + ",";
  s += ";l=" + std::to_string(level_) + ";";
  for (const auto& [basis, ideal] : components_) {
    s += to_string(basis) + ":";
    for (const auto& g : ideal.generators()) s += to_string(g);
    s += ";";
  }
  return s;
}

std::uint64_t TermModule::content_hash() const { return fnv1a(canonical_string()); }

bool TermModule::same_ambient(const TermModule& other) const {
  return ambient_ == other.ambient_ || *ambient_ == *other.ambient_;
}

bool TermModule::operator==(const TermModule& other) const {
  return level_ == other.level_ && same_ambient(other) && components_ == other.components_;
}

TermModule minimalize(AmbientPtr ambient, int level, std::span<const Term> generators) {
  std::map<Exponents, std::vector<Exponents>> grouped;
  for (const auto& t : generators) {
    check_shape(*ambient, t);
    if (t.level() != level) {
      throw InputError("mixed levels: term at level " + std::to_string(t.level()) +
                       " in a level-" + std::to_string(level) + " generating set");
    }
    grouped[t.basis].push_back(t.monomial);
  }
  std::map<Exponents, MonomialIdeal> components;
  const int d = ambient->dimension();
  for (auto& [basis, gens] : grouped) {
    components.emplace(basis, MonomialIdeal::from_generators(d, std::move(gens)));
  }
  return TermModule::from_components(std::move(ambient), level, std::move(components));
}

TermModule product(const TermModule& p, const TermModule& q) {
  require_same_ambient(p, q, "product");
  std::map<Exponents, std::vector<Exponents>> grouped;
  for (const auto& [ap, ip] : p.components()) {
    for (const auto& [aq, iq] : q.components()) {
      auto& bucket = grouped[add(ap, aq)];
      for (const auto& gp : ip.generators()) {
        for (const auto& gq : iq.generators()) bucket.push_back(add(gp, gq));
      }
    }
  }
  std::map<Exponents, MonomialIdeal> components;
  for (auto& [basis, gens] : grouped) {
    components.emplace(basis, MonomialIdeal::from_generators(p.dimension(), std::move(gens)));
  }
  return TermModule::from_components(p.ambient_ptr(), p.level() + q.level(), std::move(components));
}

TermModule power(const TermModule& m, int n) {
  if (n < 0) throw InputError("power exponent must be nonnegative");
  TermModule result = TermModule::unit(m.ambient_ptr());
  for (int k = 0; k < n; ++k) result = product(m, result);
  return result;
}

bool membership(const Term& t, const TermModule& m) {
  check_shape(m.ambient(), t);
  if (t.level() != m.level()) {
    throw InputError("membership: term level " + std::to_string(t.level()) +
                     " differs from module level " + std::to_string(m.level()));
  }
  return m.contains(t);
}

TermModule colon_variable_saturation(const TermModule& m, int var) {
  if (var < 0 || var >= m.dimension()) throw InputError("variable index out of range");
  std::map<Exponents, MonomialIdeal> components;
  for (const auto& [basis, ideal] : m.components()) {
    components.emplace(basis, ideal.colon_variable_saturation(var));
  }
  return TermModule::from_components(m.ambient_ptr(), m.level(), std::move(components));
}

TermModule intersect(const TermModule& p, const TermModule& q) {
  require_same_level(p, q, "intersect");
  std::map<Exponents, MonomialIdeal> components;
  for (const auto& [basis, ip] : p.components()) {
    if (const MonomialIdeal* iq = q.component(basis)) components.emplace(basis, ip.intersect(*iq));
  }
  return TermModule::from_components(p.ambient_ptr(), p.level(), std::move(components));
}

TermModule saturate(const TermModule& m) {
  TermModule result = colon_variable_saturation(m, 0);
  for (int v = 1; v < m.dimension(); ++v) result = intersect(result, colon_variable_saturation(m, v));
  return result;
}

int rank(const TermModule& m) { return m.rank(); }

TermModule truncation(const TermModule& m, long c) {
  std::map<Exponents, std::vector<Exponents>> grouped;
  const int d = m.dimension();
  for (const auto& [basis, ideal] : m.components()) {
    const long t = c - m.ambient().basis_degree(basis);
    if (t < 0) continue;
    for (auto& mono : all_exponents(d, static_cast<int>(t))) {
      if (ideal.contains(mono)) grouped[basis].push_back(std::move(mono));
    }
  }
  std::map<Exponents, MonomialIdeal> components;
  for (auto& [basis, gens] : grouped) {
    components.emplace(basis, MonomialIdeal::from_generators(d, std::move(gens)));
  }
  return TermModule::from_components(m.ambient_ptr(), m.level(), std::move(components));
}

std::vector<Term> quotient_monomials(const TermModule& m, const TermModule& saturation,
                                     std::size_t cap) {
  require_same_level(m, saturation, "quotient_monomials");
  std::vector<Term> out;
  std::size_t visited_total = 0;
  const int d = m.dimension();
  for (const auto& [basis, sat_ideal] : saturation.components()) {
    const MonomialIdeal* ideal = m.component(basis);
    if (!ideal) {
      throw InternalError("saturation carries component " + to_string(basis) +
                          " absent from the module; the quotient would be infinite");
    }
    std::unordered_set<Exponents, ExponentsHash> visited;
    std::deque<Exponents> queue;
    for (const auto& g : sat_ideal.generators()) {
      if (!ideal->contains(g) && visited.insert(g).second) queue.push_back(g);
    }
    while (!queue.empty()) {
      Exponents u = std::move(queue.front());
      queue.pop_front();
      if (++visited_total > cap) {
        throw InternalError("quotient enumeration exceeded " + std::to_string(cap) +
                            " terms; saturation quotient is not finite");
      }
      for (int v = 0; v < d; ++v) {
        Exponents w = u;
        ++w[static_cast<std::size_t>(v)];
        if (!ideal->contains(w) && !visited.count(w)) {
          visited.insert(w);
          queue.push_back(std::move(w));
        }
      }
      out.push_back({std::move(u), basis});
    }
  }
  const auto& ambient = m.ambient();
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    const long da = a.degree(ambient);
    const long db = b.degree(ambient);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

}  // namespace rees::core
