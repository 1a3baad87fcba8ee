#include "flowvol/graph.hpp"

#include <doctest.h>

using namespace flowvol;

TEST_SUITE("graph") {
  TEST_CASE("Pitman-Stanley family") {
    const auto ps4 = build_ps(3);
    CHECK(ps4.vertex_count() == 4);
    CHECK(ps4.edges() == std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(build_ps(2).edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(build_ps(5).edge_count() == 9);
  }

  TEST_CASE("caracol family") {
    CHECK(build_car(4).edges() ==
          std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(build_car(3).edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(build_car(6).edge_count() == 14);
    CHECK_THROWS_AS(build_car(2), std::invalid_argument);
  }

  TEST_CASE("augmentation") {
    CHECK(augment(build_ps(3), 2).edge_count() == 13);
    CHECK(augment(build_car(3), 3).edge_count() == 17);
    const auto g = build_ps(4);
    CHECK(augment(g, 1).edge_count() == g.edge_count() + static_cast<std::size_t>(g.vertex_count()));
    CHECK(augment(g, 1).outdeg(1) == g.vertex_count());
  }

  TEST_CASE("graph validation") {
    CHECK_THROWS_AS(DirectedStepGraph(3, {{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(DirectedStepGraph(3, {{1, 4}}), std::invalid_argument);
    CHECK_FALSE(DirectedStepGraph(3, {{1, 2}}).is_connected());
  }

  TEST_CASE("net flows") {
    CHECK_THROWS_AS(NetFlow({1, 1}), std::invalid_argument);
    const NetFlow a = NetFlow::with_implied_sink({2, 5, 9});
    CHECK(a.values() == std::vector<Integer>{2, 5, 9, -16});
  }

  TEST_CASE("is_flow checks conservation") {
    const DirectedStepGraph tri(3, {{1, 2}, {1, 3}, {2, 3}});
    const NetFlow a({1, 1, -2});
    CHECK(is_flow(tri, a, {0, 1, 1}));
    CHECK(is_flow(tri, a, {1, 0, 2}));
    CHECK_FALSE(is_flow(tri, a, {1, 1, 1}));
    CHECK_FALSE(is_flow(tri, a, {-1, 2, 0}));
  }

  TEST_CASE("text grammar") {
    CHECK(parse_graph_spec("ps:4") == build_ps(3));
    CHECK(parse_graph_spec("car:5") == build_car(4));
    CHECK(parse_graph_spec("aug:2:ps:4") == augment(build_ps(3), 2));
    const auto g = parse_graph_spec("3:1-2,2-3,1-3");
    CHECK(g.to_string() == "3:1-2,1-3,2-3");
    CHECK(parse_graph_spec(g.to_string()) == g);
    CHECK_THROWS_AS(parse_graph_spec("3:1-2"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("3:1-x"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("hex:4"), ParseError);
    CHECK(parse_flow("1,1", g).values() == std::vector<Integer>{1, 1, -2});
    CHECK(parse_flow("1,-1,0", g).values() == std::vector<Integer>{1, -1, 0});
    CHECK_THROWS(parse_flow("1,1,1", g));
    CHECK_THROWS(parse_flow("1", g));
  }
}
