#include <catch_amalgamated.hpp>

#include "rees/dependence/dependence.hpp"
#include "rees/density/sampler.hpp"
#include "rees/io/corpus.hpp"
#include "test_helpers.hpp"

using namespace rees;
using namespace rees::dependence;
using testing::ideal2;
using testing::module;
using testing::q;

TEST_CASE("validate_pair") {
  auto pair = validate_pair(ideal2({{2, 0}, {0, 2}}), ideal2({{2, 0}, {1, 1}, {0, 2}}));
  CHECK(pair.d_nm == 2);
  CHECK_THROWS_AS(validate_pair(ideal2({{1, 0}}), ideal2({{0, 1}})), NotSubmoduleError);
  auto sub = module({"x", "y"}, {0, 0}, {{{1, 0}, 0}});
  auto sup = module({"x", "y"}, {0, 0}, {{{1, 0}, 0}, {{0, 1}, 1}});
  CHECK_THROWS_AS(validate_pair(sub, sup), RankMismatchError);
  CHECK_THROWS_AS(validate_pair(ideal2({{1, 0}}), module({"x", "y"}, {1}, {{{1, 0}, 0}})), InputError);
}

TEST_CASE("direct reduction search") {
  core::PowerCache cache;
  auto m = ideal2({{2, 0}, {1, 1}, {0, 2}});
  auto found = direct_reduction_search(validate_pair(ideal2({{2, 0}, {0, 2}}), m), 12, cache);
  CHECK(found == std::optional<int>(1));
  CHECK(direct_reduction_search(validate_pair(m, m), 12, cache) == std::optional<int>(0));
  CHECK_FALSE(direct_reduction_search(validate_pair(ideal2({{2, 0}, {1, 1}}), m), 12, cache).has_value());
}

TEST_CASE("verdict for the Rees reduction") {
  core::PowerCache cache;
  auto v = check_dependence(ideal2({{2, 0}, {0, 2}}), ideal2({{2, 0}, {1, 1}, {0, 2}}), cache);
  CHECK(v.verdict == Verdict::Reduction);
  CHECK(v.certificate == std::optional<int>(1));
  CHECK(v.certificate_stable == std::optional<bool>(true));
  CHECK(v.c == 3);
  CHECK(v.consistent);
  for (const auto& c : v.criteria) {
    INFO(c.id);
    CHECK(c.usable);
    CHECK(c.match == std::optional<bool>(true));
  }
}

TEST_CASE("verdict for a non-reduction") {
  core::PowerCache cache;
  auto v = check_dependence(ideal2({{2, 0}, {1, 1}}), ideal2({{2, 0}, {1, 1}, {0, 2}}), cache);
  CHECK(v.verdict == Verdict::NotReduction);
  CHECK_FALSE(v.certificate.has_value());
  const auto& eps = v.criteria.front();
  CHECK(eps.id == "3-epsilon");
  CHECK(eps.sub_values == std::vector<Rational>{q(1)});
  CHECK(eps.sup_values == std::vector<Rational>{q(4)});
  CHECK(eps.match == std::optional<bool>(false));
  CHECK(v.epsilon_gap_growth == std::optional<bool>(true));
}

TEST_CASE("explicit c must exceed d_NM") {
  core::PowerCache cache;
  DependenceOptions options;
  options.c = 2;
  CHECK_THROWS_AS(check_dependence(ideal2({{2, 0}, {0, 2}}), ideal2({{2, 0}, {1, 1}, {0, 2}}), cache, options),
                  InputError);
  options.c = 4;
  auto v = check_dependence(ideal2({{2, 0}, {0, 2}}), ideal2({{2, 0}, {1, 1}, {0, 2}}), cache, options);
  CHECK(v.verdict == Verdict::Reduction);
}

TEST_CASE("every corpus module is a reduction of itself") {
  for (const auto& entry : io::corpus()) {
    INFO(entry.name);
    core::PowerCache cache;
    const auto m = io::corpus_module(entry.name);
    auto v = check_dependence(m, m, cache);
    CHECK(v.verdict == Verdict::Reduction);
    CHECK(v.certificate == std::optional<int>(0));
    CHECK(v.consistent);
  }
}

TEST_CASE("a certificate forces equal density grids") {
  core::PowerCache cache;
  auto n = ideal2({{2, 0}, {0, 2}});
  auto m = ideal2({{2, 0}, {1, 1}, {0, 2}});
  REQUIRE(direct_reduction_search(validate_pair(n, m), 12, cache).has_value());
  const density::GridSpec grid{q(0), q(4), q(1, 8)};
  for (auto kind : {density::DensityKind::Adic, density::DensityKind::Saturated}) {
    density::DensitySampler a(n, cache), b(m, cache);
    auto gn = a.sample(kind, grid, {16, 32}, density::Extrapolation::Richardson);
    auto gm = b.sample(kind, grid, {16, 32}, density::Extrapolation::Richardson);
    for (std::size_t i = 0; i < gn.x.size(); ++i) {
      // The adic density may jump at d_1 and the two limits differ exactly
      // there: (x^2,y^2)^n has n+1 monomials of degree 2n, m^(2n) has 2n+1.
      if (kind == density::DensityKind::Adic && gn.x[i] == 2) {
        CHECK(gn.extrapolated[i] == 2);
        CHECK(gm.extrapolated[i] == 4);
        continue;
      }
      CHECK(abs(gn.extrapolated[i] - gm.extrapolated[i]) <= q(1, 10) * std::max(q(1), gm.extrapolated[i]));
    }
  }
}

TEST_CASE("certificate stability on a rank two pair") {
  core::PowerCache cache;
  auto m = module({"x", "y"}, {0, 0}, {{{1, 0}, 0}, {{0, 1}, 0}, {{0, 1}, 1}, {{1, 0}, 1}});
  auto n = module({"x", "y"}, {0, 0}, {{{1, 0}, 0}, {{0, 1}, 0}, {{0, 1}, 1}});
  auto pair = validate_pair(n, m);
  auto found = direct_reduction_search(pair, 8, cache);
  if (found) CHECK(certificate_stable(pair, *found, 8, cache));
  auto v = check_dependence(n, m, cache);
  CHECK(v.verdict != Verdict::Undetermined);
}
