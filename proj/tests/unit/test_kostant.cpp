#include "flowvol/kostant.hpp"

#include <doctest.h>

#include <random>

using namespace flowvol;

TEST_SUITE("kostant") {
  const DirectedStepGraph path(3, {{1, 2}, {2, 3}});
  const DirectedStepGraph triangle(3, {{1, 2}, {1, 3}, {2, 3}});

  TEST_CASE("small values") {
    CHECK(kpf(path, NetFlow({1, -1, 0})) == 1);
    CHECK(kpf(triangle, NetFlow({1, 1, -2})) == 2);
    CHECK(kpf(build_car(5), NetFlow({0, 0, 0, 0, 0, 0})) == 1);
    CHECK(kpf(triangle, NetFlow({-1, 0, 1})) == 0);
  }

  TEST_CASE("flow listing order") {
    CHECK(list_flows(path, NetFlow({1, -1, 0}), 10) == std::vector<FlowAssignment>{{1, 0}});
    CHECK(list_flows(triangle, NetFlow({1, 1, -2}), 10) ==
          std::vector<FlowAssignment>{{0, 1, 1}, {1, 0, 2}});
    CHECK(list_flows(build_ps(3), NetFlow({0, 0, 0, 0}), 10) ==
          std::vector<FlowAssignment>{{0, 0, 0, 0, 0}});
    CHECK(list_flows(triangle, NetFlow({1, 1, -2}), 1).size() == 1);
  }

  TEST_CASE("parallel edges count as distinct") {
    const DirectedStepGraph doubled(2, {{1, 2}, {1, 2}});
    CHECK(kpf(doubled, NetFlow({3, -3})) == 4);
    CHECK(list_flows(doubled, NetFlow({3, -3}), 10).size() == 4);
  }

  TEST_CASE("kpf agrees with listing on random graphs") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 300; ++trial) {
      const int v = std::uniform_int_distribution<int>(2, 5)(rng);
      const int m = std::uniform_int_distribution<int>(1, 8)(rng);
      std::vector<Edge> edges;
      for (int e = 0; e < m; ++e) {
        const int i = std::uniform_int_distribution<int>(1, v - 1)(rng);
        const int j = std::uniform_int_distribution<int>(i + 1, v)(rng);
        edges.push_back({i, j});
      }
      const DirectedStepGraph g(v, edges);
      std::vector<Integer> leading;
      for (int i = 0; i + 1 < v; ++i) {
        leading.emplace_back(std::uniform_int_distribution<int>(-3, 3)(rng));
      }
      const NetFlow a = NetFlow::with_implied_sink(leading);
      const auto flows = list_flows(g, a, 1000000);
      CAPTURE(g.to_string());
      CAPTURE(a.to_string());
      CHECK(kpf(g, a) == static_cast<unsigned long>(flows.size()));
      for (const auto &b : flows) {
        CHECK(is_flow(g, a, b));
      }
    }
  }

  TEST_CASE("flow length must match the graph") {
    CHECK_THROWS_AS(kpf(triangle, NetFlow({1, -1})), std::invalid_argument);
  }
}
