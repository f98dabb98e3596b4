#include <catch_amalgamated.hpp>

#include "rees/core/errors.hpp"
#include "rees/density/chambers.hpp"
#include "rees/density/sampler.hpp"
#include "rees/io/corpus.hpp"
#include "rees/multiplicity/bigraded_fit.hpp"
#include "rees/multiplicity/diagonal.hpp"
#include "rees/multiplicity/epsilon.hpp"
#include "test_helpers.hpp"

using namespace rees;
using namespace rees::multiplicity;
using testing::ideal2;
using testing::module;
using testing::q;

namespace {

std::vector<Integer> ints(std::initializer_list<long> values) {
  std::vector<Integer> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

core::BivariatePolynomial bivariate(std::map<std::pair<int, int>, Rational> terms) {
  return core::BivariatePolynomial(std::move(terms));
}

}  // namespace

TEST_CASE("stabilized differences") {
  auto s = stabilize(ints({1, 3, 5, 7, 9, 11, 13}));
  CHECK(s.status == StabilizationStatus::Stabilized);
  CHECK(s.order == 1);
  CHECK(s.value == 2);
  CHECK(s.dimension == 2);
  CHECK(s.n0 == 0);

  auto late = stabilize(ints({5, 0, 2, 4, 6, 8, 10}), 1);
  CHECK(late.order == 1);
  CHECK(late.n0 == 2);

  CHECK(stabilize(ints({0, 0, 0, 0, 0})).status == StabilizationStatus::Zero);
  CHECK(stabilize(ints({1, 2, 4, 8, 16, 32, 64})).status == StabilizationStatus::Undetermined);

  auto quasi = stabilize_quasi(ints({0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6}));
  CHECK(quasi.status == StabilizationStatus::Stabilized);
  CHECK(quasi.period == 2);
  CHECK(quasi.top_difference() == q(1, 2));
  CHECK(differences(ints({1, 4, 9, 16}), 2) == ints({2, 2}));
}

TEST_CASE("epsilon multiplicity examples") {
  core::PowerCache cache;
  EpsilonOptions options;
  options.n_max = 16;

  auto r = epsilon_multiplicity(ideal2({{2, 0}, {1, 1}}), cache, options);
  for (int n = 1; n <= 16; ++n) CHECK(r.totals[n - 1] == n * (n + 1) / 2);
  CHECK(r.exact == std::optional<Rational>(q(1)));
  CHECK(r.estimate == q(2 * 136, 256));
  REQUIRE(r.integral.has_value());
  CHECK(*r.integral == r.estimate);
  CHECK(r.integral_agrees == std::optional<bool>(true));

  CHECK(epsilon_multiplicity(ideal2({{1, 0}, {0, 1}}), cache, options).exact == std::optional<Rational>(q(1)));
  CHECK(epsilon_multiplicity(ideal2({{2, 0}, {1, 1}, {0, 2}}), cache, options).exact ==
        std::optional<Rational>(q(4)));
  auto saturated = epsilon_multiplicity(ideal2({{1, 0}}), cache, options);
  CHECK(saturated.exact == std::optional<Rational>(q(0)));
  CHECK(saturated.estimate == 0);
}

TEST_CASE("epsilon equals the trapezoid of its density on the corpus") {
  for (const auto& entry : io::corpus()) {
    INFO(entry.name);
    core::PowerCache cache;
    EpsilonOptions options;
    options.n_max = 12;
    auto r = epsilon_multiplicity(io::corpus_module(entry.name), cache, options);
    REQUIRE(r.integral.has_value());
    CHECK(*r.integral == r.estimate);
  }
}

TEST_CASE("diagonal multiplicities") {
  core::PowerCache cache;
  auto m = ideal2({{1, 0}, {0, 1}});
  auto r = diagonal_multiplicity(m, 2, cache);
  for (int n = 0; n <= r.n_max; ++n) {
    CHECK(r.a_version.sequence[n] == 2 * n + 1);
    // (2n+1)(2n+2)/2 - n(n+1)/2
    CHECK(r.s_version.sequence[n] == (2 * n + 1) * (2 * n + 2) / 2 - n * (n + 1) / 2);
  }
  CHECK(r.a_version.multiplicity == std::optional<Integer>(2));
  CHECK(r.a_version.detected_dimension == 2);
  CHECK(r.a_version.stated_dimension == 1);
  CHECK(r.a_version.example_dimension == 2);
  CHECK(r.s_version.multiplicity == std::optional<Integer>(3));
  CHECK(r.s_version.detected_dimension == 3);

  CHECK(diagonal_multiplicity(ideal2({{2, 0}, {1, 1}, {0, 2}}), 3, cache).a_version.multiplicity ==
        std::optional<Integer>(3));
  CHECK(diagonal_multiplicity(ideal2({{2, 0}, {1, 1}}), 3, cache).a_version.multiplicity ==
        std::optional<Integer>(2));
  CHECK_THROWS_AS(diagonal_multiplicity(m, 1, cache), InputError);

  DiagonalOptions tiny;
  tiny.n_max = 3;
  auto undetermined = diagonal_multiplicity(ideal2({{2, 0}, {0, 3}}), 4, cache, tiny);
  CHECK(undetermined.s_version.status == "undetermined");
  CHECK_FALSE(undetermined.s_version.multiplicity.has_value());
}

TEST_CASE("bigraded fits of desk examples") {
  core::PowerCache cache;
  BigradedFitOptions options;
  options.c = 2;
  auto fit = fit_bigraded_polynomial(ideal2({{1, 0}, {0, 1}}), cache, options);
  REQUIRE(fit.success);
  CHECK(fit.polynomial == bivariate({{{1, 0}, q(1)}, {{0, 0}, q(1)}}));
  CHECK(fit.period == 1);

  auto unit = core::TermModule::free_power(core::make_ambient({"x", "y"}, {0}), 1);
  options.c = 1;
  auto unit_fit = fit_bigraded_polynomial(unit, cache, options);
  REQUIRE(unit_fit.success);
  CHECK(unit_fit.polynomial == bivariate({{{1, 0}, q(1)}, {{0, 0}, q(1)}}));
  auto unit_mixed = mixed_multiplicities(unit_fit);
  CHECK(unit_mixed.e == std::vector<Rational>{q(0), q(1)});

  options.c = 3;
  auto xy = fit_bigraded_polynomial(ideal2({{2, 0}, {1, 1}}), cache, options);
  REQUIRE(xy.success);
  CHECK(xy.polynomial.to_string() == "X - Y + 1");
  auto mixed = mixed_multiplicities(xy);
  CHECK(mixed.e == std::vector<Rational>{q(-1), q(1)});
  CHECK(mixed.integral);
  CHECK_FALSE(mixed.nonnegative);
  CHECK(mixed.form_shape_ok);

  options.c = 1;
  CHECK_THROWS_AS(fit_bigraded_polynomial(ideal2({{2, 0}, {1, 1}}), cache, options), InputError);
}

TEST_CASE("mixed multiplicities of the maximal ideal") {
  core::PowerCache cache;
  BigradedFitOptions options;
  options.c = 2;
  auto mixed = mixed_multiplicities(fit_bigraded_polynomial(ideal2({{1, 0}, {0, 1}}), cache, options));
  CHECK(mixed.e == std::vector<Rational>{q(0), q(1)});
  CHECK(mixed.density_polynomial == core::Polynomial({q(0), q(2)}));
}

TEST_CASE("fit, diagonal and density agree on the corpus") {
  for (const auto& entry : io::corpus()) {
    INFO(entry.name);
    core::PowerCache cache;
    const auto m = io::corpus_module(entry.name);
    const long c = m.max_generator_degree() + 1;
    BigradedFitOptions options;
    options.c = c;
    const auto fit = fit_bigraded_polynomial(m, cache, options);
    REQUIRE(fit.success);
    REQUIRE(fit.leading_forms_agree == std::optional<bool>(true));
    const auto mixed = mixed_multiplicities(fit);
    CHECK(mixed.integral);
    CHECK(mixed.form_shape_ok);

    // Diagonal multiplicity from the difference table equals the one read off
    // the fitted polynomial along m = c n.
    const auto diag = diagonal_multiplicity(m, c, cache);
    REQUIRE(diag.a_version.multiplicity.has_value());
    const auto ray = fit.polynomial.along_ray(q(c));
    CHECK(ray.degree() + 1 == diag.a_version.detected_dimension);
    CHECK(ray.coefficient(ray.degree()) * Rational(factorial(ray.degree())) ==
          Rational(*diag.a_version.multiplicity));

    // The top chamber of the adic density is (d+e-1)! times the leading form.
    const auto grid = density::GridSpec{q(m.max_generator_degree()), q(m.max_generator_degree() + 2), q(1, 8)};
    const auto adic = density::sample_adic(m, grid, {24, 48}, cache, density::Extrapolation::Richardson);
    for (std::size_t i = 1; i < adic.x.size(); ++i) {
      CHECK(abs(mixed.density_polynomial(adic.x[i]) - adic.extrapolated[i]) <=
            q(1, 50) * std::max(q(1), adic.extrapolated[i]));
    }
  }
}

TEST_CASE("multiplicities are invariant under permuting variables and basis vectors") {
  core::PowerCache cache;
  auto a = module({"x", "y"}, {0, 1}, {{{1, 0}, 0}, {{0, 1}, 0}, {{0, 2}, 1}});
  auto b = module({"x", "y"}, {1, 0}, {{{0, 1}, 1}, {{1, 0}, 1}, {{2, 0}, 0}});
  EpsilonOptions eps;
  eps.n_max = 12;
  CHECK(epsilon_multiplicity(a, cache, eps).exact == epsilon_multiplicity(b, cache, eps).exact);
  const long c = a.max_generator_degree() + 1;
  CHECK(diagonal_multiplicity(a, c, cache).a_version.multiplicity ==
        diagonal_multiplicity(b, c, cache).a_version.multiplicity);
  CHECK(diagonal_multiplicity(a, c, cache).s_version.multiplicity ==
        diagonal_multiplicity(b, c, cache).s_version.multiplicity);
  BigradedFitOptions options;
  options.c = c;
  CHECK(mixed_multiplicities(fit_bigraded_polynomial(a, cache, options)).e ==
        mixed_multiplicities(fit_bigraded_polynomial(b, cache, options)).e);
}
