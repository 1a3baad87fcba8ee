#include "flowvol/ct_engine.hpp"

#include "flowvol/closed_forms.hpp"
#include "flowvol/kostant.hpp"

#include <doctest.h>

#include <random>

using namespace flowvol;

namespace {

CTExpression random_expression(std::mt19937 &rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  CTExpression e;
  e.nvars = pick(1, 4);
  for (int i = 0; i < e.nvars; ++i) {
    e.monomial.push_back(pick(-2, 1));
  }
  const int pows = pick(0, 3);
  for (int p = 0; p < pows; ++p) {
    e.pow_factors.push_back({pick(1, e.nvars), pick(1, 2)});
  }
  if (e.nvars > 1) {
    const int diffs = pick(0, 3);
    for (int d = 0; d < diffs; ++d) {
      const int low = pick(1, e.nvars - 1);
      e.diff_factors.push_back({low, pick(low + 1, e.nvars)});
    }
  }
  return e;
}

// CT x^{-a} prod_{(i,j)} (1 - x_i/x_j)^{-1} with the sink variable set to 1.
CTExpression kostant_expression(const DirectedStepGraph &g, const NetFlow &a) {
  CTExpression e;
  e.nvars = g.vertex_count() - 1;
  for (int i = 0; i < e.nvars; ++i) {
    e.monomial.push_back(-to_int64(a[static_cast<std::size_t>(i)]));
  }
  for (const Edge &edge : g.edges()) {
    if (edge.head == g.vertex_count()) {
      e.pow_factors.push_back({edge.tail, 1});
    } else {
      e.monomial[static_cast<std::size_t>(edge.head - 1)] += 1;
      e.diff_factors.push_back({edge.tail, edge.head});
    }
  }
  return e;
}

} // namespace

TEST_SUITE("ct-engine") {
  TEST_CASE("hand examples") {
    CHECK(evaluate(ps_ct_expression(2, 1)) == 1);
    CHECK(evaluate(car_ct_expression(2, 1)) == 2);
    CHECK_THROWS_AS(CTExpression::parse("m:"), std::invalid_argument);
    CHECK(evaluate(ps_ct_expression(3, 2)) == 7);
    CHECK(evaluate(ps_ct_expression(2, 3)) == 3);
    CHECK(evaluate(car_ct_expression(3, 1)) == 7);
  }

  TEST_CASE("family builders") {
    const CTExpression ps = ps_ct_expression(2, 1);
    CHECK(ps.monomial == std::vector<std::int64_t>{0, 0});
    CHECK(ps.pow_factors == std::vector<PowFactor>{{1, 1}, {2, 1}});
    CHECK(ps.diff_factors == std::vector<DiffFactor>{{1, 2}});
    const CTExpression car = car_ct_expression(2, 1);
    CHECK(car.monomial == std::vector<std::int64_t>{-1, 0});
    CHECK(car.diff_factors == std::vector<DiffFactor>{{1, 2}});
  }

  TEST_CASE("series oracle") {
    CHECK(evaluate_series_oracle(ps_ct_expression(2, 1), 6) == 1);
    CHECK(evaluate_series_oracle(car_ct_expression(3, 1), 8) == 7);
  }

  TEST_CASE("text form round trip") {
    const CTExpression e = CTExpression::parse("m:-1,0,2; p:1^2,3^1; d:1-3,2-3");
    CHECK(e.nvars == 3);
    CHECK(CTExpression::parse(e.to_string()) == e);
    CHECK_THROWS_AS(CTExpression::parse("m:0,0; d:2-1"), std::invalid_argument);
    CHECK_THROWS_AS(CTExpression::parse("m:0; p:2^1"), std::invalid_argument);
    CHECK_THROWS_AS(CTExpression::parse("p:1^1"), std::invalid_argument);
    CHECK_THROWS_AS(CTExpression::parse("m:0; p:1^0"), std::invalid_argument);
  }

  TEST_CASE("evaluators agree on random expressions") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
      const CTExpression e = random_expression(rng);
      CAPTURE(e.to_string());
      CHECK(evaluate(e) == evaluate_series_auto(e));
    }
  }

  TEST_CASE("closed forms through constant terms") {
    for (int n = 2; n <= 5; ++n) {
      for (int k = 1; k <= 3; ++k) {
        CHECK(evaluate(ps_ct_expression(n, k)) == ehrhart_ps_closed(n, k));
        if (n >= 3) {
          CHECK(evaluate(car_ct_expression(n - 1, k)) == ehrhart_car_closed(n, k));
        }
      }
    }
  }

  TEST_CASE("Kostant values as constant terms") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const int v = std::uniform_int_distribution<int>(2, 4)(rng);
      std::vector<Edge> edges;
      for (int i = 1; i < v; ++i) {
        for (int j = i + 1; j <= v; ++j) {
          if (std::uniform_int_distribution<int>(0, 2)(rng) > 0) {
            edges.push_back({i, j});
          }
        }
      }
      const DirectedStepGraph g(v, edges);
      std::vector<Integer> leading;
      for (int i = 0; i + 1 < v; ++i) {
        leading.emplace_back(std::uniform_int_distribution<int>(-1, 3)(rng));
      }
      const NetFlow a = NetFlow::with_implied_sink(leading);
      const CTExpression e = kostant_expression(g, a);
      CAPTURE(e.to_string());
      CHECK(kpf(g, a) == evaluate(e));
      CHECK(kpf(g, a) == evaluate_series_auto(e));
    }
  }
}
