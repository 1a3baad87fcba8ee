#include "flowvol/lidskii.hpp"

#include "flowvol/kostant.hpp"

#include <doctest.h>

using namespace flowvol;

namespace {
Composition comp(std::vector<std::int64_t> parts) { return Composition(std::move(parts)); }
} // namespace

TEST_SUITE("lidskii") {
  TEST_CASE("dominance") {
    CHECK(dominates(comp({2, 0, 1}), comp({1, 1, 1})));
    CHECK(dominates(comp({1, 2}), comp({1, 2})));
    CHECK_FALSE(dominates(comp({0, 3}), comp({1, 2})));
    CHECK_THROWS(dominates(comp({1}), comp({1, 0})));
  }

  TEST_CASE("dominant compositions") {
    const auto two = dominant_compositions(2, 3, comp({1, 1, 0}));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == comp({2, 0, 0}));
    CHECK(two[1] == comp({1, 1, 0}));
    CHECK(dominant_compositions(0, 2, comp({0, 0})) == std::vector<Composition>{comp({0, 0})});
    CHECK(dominant_compositions(1, 2, comp({1, 1})).empty());
    // Catalan many compositions of n dominate (1^n).
    CHECK(dominant_compositions(5, 5, comp({1, 1, 1, 1, 1})).size() == 42);
  }

  TEST_CASE("volumes") {
    CHECK(volume(build_ps(3), NetFlow::with_implied_sink({2, 5, 9})) == 24);
    CHECK(volume(build_ps(4), NetFlow::with_implied_sink({1, 1, 1, 1})) == 16);
    CHECK(volume(build_car(3), NetFlow::with_implied_sink({1, 1, 5})) == 3);
    // independent of the last non-sink entry
    CHECK(volume(build_car(3), NetFlow::with_implied_sink({1, 1, 0})) == 3);
  }

  TEST_CASE("unit flow volumes") {
    CHECK(volume_unit_flow(build_ps(3)) == 1);
    CHECK(volume_unit_flow(build_ps(2)) == 1);
    CHECK(volume_unit_flow(build_car(3)) == 1);
    for (int n = 2; n <= 5; ++n) {
      const auto g = build_ps(n);
      std::vector<Integer> unit(static_cast<std::size_t>(n), 0);
      unit[0] = 1;
      CHECK(volume_unit_flow(g) == volume(g, NetFlow::with_implied_sink(unit)));
    }
  }

  TEST_CASE("Ehrhart-like values") {
    CHECK(ehrhart_like(build_ps(2), 1) == 1);
    CHECK(ehrhart_like(build_ps(3), 2) == 7);
    CHECK(ehrhart_like(build_car(3), 1) == 2);
    CHECK(ehrhart_like(build_car(4), 1) == 7);
  }

  TEST_CASE("expansion evaluates like the direct volume") {
    const auto g = build_car(4);
    const auto terms = lidskii_expansion(g);
    const NetFlow a = NetFlow::with_implied_sink({2, 1, 3, 1});
    CHECK(evaluate_expansion(terms, a) == volume(g, a));
  }

  TEST_CASE("polynomial fit") {
    const auto poly = ehrhart_fit(build_car(3), 6);
    for (int k = 1; k <= 7; ++k) {
      Rational expected(k * (3 * k + 1), 2);
      expected.canonicalize();
      CHECK(poly(Rational(k)) == expected);
    }
    CHECK(ehrhart_fit(build_ps(2), 5)(Rational(1)) == 1);
    CHECK_THROWS_AS(ehrhart_fit(build_ps(3), 2), std::invalid_argument);
  }

  TEST_CASE("interpolation is exact") {
    const auto p = interpolate({1, 2, 3}, {1, 4, 9});
    CHECK(p.degree() == 2);
    CHECK(p(Rational(5)) == 25);
  }
}
