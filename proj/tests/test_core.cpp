#include <catch_amalgamated.hpp>

#include <thread>

#include "oracles.hpp"
#include "rees/core/errors.hpp"
#include "rees/core/monomial_ideal.hpp"
#include "rees/core/polynomial.hpp"
#include "rees/core/power_cache.hpp"
#include "test_helpers.hpp"

using namespace rees;
using namespace rees::core;
using testing::ideal2;
using testing::module;
using testing::q;

TEST_CASE("rational helpers") {
  CHECK(factorial(5) == 120);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(monomial_count(2, 5) == 6);
  CHECK(monomial_count(3, 2) == 6);
  CHECK(monomial_count(2, -1) == 0);
  CHECK(monomial_count(0, 0) == 1);
  CHECK(to_fraction_string(q(3)) == "3/1");
  CHECK(to_fraction_string(q(-2, 4)) == "-1/2");
  CHECK(parse_fraction("1/8") == q(1, 8));
  CHECK(parse_fraction("-0.25") == q(-1, 4));
  CHECK(parse_fraction("2") == q(2));
  CHECK_THROWS_AS(parse_fraction("abc"), InputError);
  CHECK(floor_div(q(-1, 2)) == -1);
  CHECK(make_rational(4, 8) == q(1, 2));
  CHECK(make_rational(4, 8).get_den() == 2);
}

TEST_CASE("ring and free module validation") {
  CHECK_THROWS_AS(RingSpec({"x"}), InputError);
  CHECK_THROWS_AS(RingSpec({"x", "x"}), InputError);
  CHECK_THROWS_AS(make_ambient({"x", "y"}, {}), InputError);
  auto f = make_ambient({"x", "y"}, {-2, 1});
  CHECK(f->support_offset() == 2);
  CHECK(f->basis_degree(std::vector<int>{1, 2}) == 0);
}

TEST_CASE("monomial ideal operations") {
  auto i = MonomialIdeal::from_generators(2, {{2, 0}, {1, 1}, {3, 0}, {1, 1}});
  CHECK(i.generators() == std::vector<Exponents>{{1, 1}, {2, 0}});
  CHECK(i.contains(std::vector<int>{2, 3}));
  CHECK_FALSE(i.contains(std::vector<int>{0, 5}));
  CHECK(i.saturate() == MonomialIdeal::from_generators(2, {{1, 0}}));
  auto j = MonomialIdeal::from_generators(2, {{0, 2}});
  CHECK(i.intersect(j) == MonomialIdeal::from_generators(2, {{1, 2}, {2, 2}}));
  CHECK(i.product(j) == MonomialIdeal::from_generators(2, {{2, 2}, {1, 3}}));
  CHECK(MonomialIdeal::from_generators(2, {{1, 0}, {0, 1}}).saturate().is_unit());
  CHECK(MonomialIdeal(2).is_zero());
}

TEST_CASE("term module construction and queries") {
  auto m = ideal2({{2, 0}, {1, 1}});
  CHECK(m.generator_count() == 2);
  CHECK(m.min_generator_degree() == 2);
  CHECK(m.max_generator_degree() == 2);
  CHECK(m.generator_degrees() == std::vector<long>{2});
  auto shifted = module({"x", "y"}, {-2}, {{{2, 0}, 0}, {{1, 1}, 0}});
  CHECK(shifted.max_generator_degree() == 0);
  CHECK(shifted.ambient().support_offset() == 2);
  CHECK_THROWS_AS(m.min_generator_degree() + TermModule(m.ambient_ptr(), 1).min_generator_degree(),
                  InputError);
  auto mixed = module({"x", "y"}, {0, 1}, {{{1, 0}, 0}, {{0, 1}, 1}});
  CHECK(mixed.generator_degrees() == std::vector<long>{1, 2});
  CHECK(mixed.rank() == 2);
}

TEST_CASE("products, powers and saturation on examples") {
  auto m = ideal2({{2, 0}, {1, 1}});
  auto m2 = power(m, 2);
  CHECK(m2.component(Exponents{2})->generators() == std::vector<Exponents>{{2, 2}, {3, 1}, {4, 0}});
  auto sat = saturate(m2);
  CHECK(sat.component(Exponents{2})->generators() == std::vector<Exponents>{{2, 0}});
  CHECK(power(m, 0).level() == 0);

  // The shifted example: saturation reaches degree -1.
  auto shifted = module({"x", "y"}, {-2}, {{{2, 0}, 0}, {{1, 1}, 0}});
  auto ssat = saturate(shifted);
  CHECK(ssat.component(Exponents{1})->generators() == std::vector<Exponents>{{1, 0}});
}

TEST_CASE("quotient monomials") {
  auto m2 = power(ideal2({{1, 0}, {0, 1}}), 2);
  auto quotient = quotient_monomials(m2, saturate(m2));
  CHECK(quotient.size() == 3);
  auto m = power(ideal2({{2, 0}, {1, 1}}), 3);
  CHECK(quotient_monomials(m, saturate(m)).size() == 6);
  CHECK(quotient_monomials(saturate(m), saturate(m)).empty());
}

TEST_CASE("truncation") {
  auto m = ideal2({{1, 0}, {0, 1}});
  auto t = truncation(m, 2);
  CHECK(t.generator_count() == 3);
  CHECK(t.min_generator_degree() == 2);
}

TEST_CASE("membership enforces levels and shapes") {
  auto m = ideal2({{2, 0}, {1, 1}});
  CHECK(membership(Term{{3, 1}, {1}}, m));
  CHECK_FALSE(membership(Term{{0, 3}, {1}}, m));
  CHECK_THROWS_AS(membership(Term{{3, 1}, {2}}, m), InputError);
  auto other = module({"x", "y"}, {1}, {{{1, 0}, 0}});
  CHECK_THROWS_AS(product(m, other), InputError);
}

TEST_CASE("products and powers agree with pairwise enumeration on random modules") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto r = oracle::random_module(rng);
    const auto m = oracle::to_module(r);
    for (int n = 1; n <= 3; ++n) {
      auto expected = oracle::minimal_terms(oracle::power_generators(r.generators, n, r.ambient->rank()));
      auto got = power(m, n).generators();
      std::sort(got.begin(), got.end());
      CHECK(got == expected);
    }
  }
}

TEST_CASE("saturation agrees with the iterated colon oracle on random modules") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = oracle::random_module(rng);
    const auto m = oracle::to_module(r);
    const auto sat = saturate(m);
    for (const auto& t : oracle::terms_up_to(r.ambient->dimension(), r.ambient->rank(), 1, 5)) {
      CHECK(sat.contains(t) == oracle::in_saturation(r.generators, t, r.ambient->dimension()));
    }
  }
}

TEST_CASE("power cache computes each power once under concurrency") {
  PowerCache cache;
  auto m = ideal2({{2, 0}, {1, 1}, {0, 3}});
  std::vector<std::thread> threads;
  std::vector<ModulePtr> results(8);
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&, i] { results[i] = cache.power(m, 6); });
  }
  for (auto& t : threads) t.join();
  for (const auto& r : results) CHECK(*r == power(m, 6));
  CHECK(cache.products_computed() == 5);
  cache.power(m, 4);
  CHECK(cache.products_computed() == 5);
}

TEST_CASE("canonical strings identify equal modules") {
  auto a = ideal2({{2, 0}, {1, 1}, {3, 0}});
  auto b = ideal2({{1, 1}, {2, 0}});
  CHECK(a == b);
  CHECK(a.canonical_string() == b.canonical_string());
  CHECK(a.content_hash() == b.content_hash());
  CHECK_FALSE(a.canonical_string() == ideal2({{2, 0}}).canonical_string());
}

TEST_CASE("polynomials") {
  std::vector<Rational> xs{q(0), q(1), q(2)};
  std::vector<Rational> ys{q(1), q(2), q(5)};
  auto p = Polynomial::interpolate(xs, ys);
  CHECK(p == Polynomial({q(1), q(0), q(1)}));
  CHECK(p.to_string() == "x^2 + 1");
  CHECK(Polynomial({q(-12), q(6)}).to_string() == "6*x - 12");
  BivariatePolynomial b({{{1, 0}, q(1)}, {{0, 1}, q(-1)}, {{0, 0}, q(1)}});
  CHECK(b.to_string() == "X - Y + 1");
  CHECK(b.along_ray(q(3)) == Polynomial({q(1), q(2)}));
  CHECK(b.homogeneous_part(1).to_string() == "X - Y");
  CHECK_FALSE(solve_linear({{q(1), q(2)}, {q(2), q(4)}}, {q(1), q(2)}).has_value());
}
