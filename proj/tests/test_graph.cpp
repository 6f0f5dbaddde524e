#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chordbond/edge_list.hpp"
#include "chordbond/families.hpp"
#include "support/oracles.hpp"

using namespace chordbond;

namespace {

void check_symmetric_irreflexive(const Graph& g) {
  for (VertexId v = 0; v < g.order(); ++v) {
    REQUIRE_FALSE(g.adjacent(v, v));
    for (VertexId w : g.neighbors(v)) REQUIRE(g.adjacent(w, v));
  }
}

}  // namespace

TEST_CASE("build_graph", "[graph]") {
  SECTION("path P_4") {
    const std::pair<VertexId, VertexId> e[] = {{0, 1}, {1, 2}, {2, 3}};
    Graph g = build_graph(4, e);
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g == path(4));
  }
  SECTION("isolated vertices") {
    Graph g(3, {});
    CHECK(g.order() == 3);
    CHECK(g.size() == 0);
  }
  SECTION("self-loop rejected") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InvalidArgument);
    CHECK_THROWS_WITH(Graph(2, {{0, 0}}), Catch::Matchers::ContainsSubstring("(0,0)"));
  }
  SECTION("out-of-range endpoint rejected") {
    CHECK_THROWS_WITH(Graph(2, {{0, 5}}), Catch::Matchers::ContainsSubstring("(0,5)"));
  }
  SECTION("duplicates and reversed pairs collapse") {
    Graph g(3, {{0, 1}, {1, 0}, {0, 1}, {2, 1}});
    CHECK(g.size() == 2);
    check_symmetric_irreflexive(g);
  }
}

TEST_CASE("remove_edges", "[graph]") {
  const EdgeSet one{Edge(0, 1)};
  CHECK(remove_edges(clique(3), one) == Graph(3, {{0, 2}, {1, 2}}));
  CHECK(remove_edges(path(4), EdgeSet{}) == path(4));

  const EdgeSet two{Edge(0, 1), Edge(2, 3)};
  Graph g = remove_edges(cycle(4), two);
  CHECK(g == Graph(4, {{1, 2}, {0, 3}}));
  CHECK(connected_components(g).size() == 2);

  SECTION("input untouched") {
    Graph k = clique(3);
    (void)remove_edges(k, one);
    CHECK(k.size() == 3);
  }
  SECTION("missing edge named") {
    const EdgeSet missing{Edge(0, 2)};
    CHECK_THROWS_WITH(remove_edges(path(4), missing), Catch::Matchers::ContainsSubstring("(0,2)"));
  }
}

TEST_CASE("distance", "[graph]") {
  CHECK(distance(path(4), 0, 3) == 3);
  CHECK(distance(cycle(5), 2, 2) == 0);
  Graph two_p2(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(distance(two_p2, 0, 3).has_value());
  CHECK_THROWS_AS(distance(path(3), 0, 7), InvalidArgument);

  SECTION("d(u,v) = 1 exactly on edges") {
    Graph g = random_chordal(10, 0.4, Seed{3});
    for (VertexId u = 0; u < 10; ++u) {
      for (VertexId v = 0; v < 10; ++v) CHECK((distance(g, u, v) == std::size_t{1}) == g.adjacent(u, v));
    }
  }
}

TEST_CASE("distance obeys the triangle inequality", "[graph][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(4 + trial % 9, 0.45, rng);
    if (!is_connected(g)) continue;
    const auto ref = oracle::distances(g);
    for (VertexId a = 0; a < g.order(); ++a) {
      for (VertexId b = 0; b < g.order(); ++b) {
        REQUIRE(*distance(g, a, b) == ref[a][b]);
        for (VertexId c = 0; c < g.order(); ++c) REQUIRE(*distance(g, a, c) <= *distance(g, a, b) + *distance(g, b, c));
      }
    }
  }
}

TEST_CASE("connected_components", "[graph]") {
  CHECK(connected_components(path(4)) == std::vector<VertexList>{{0, 1, 2, 3}});
  CHECK(connected_components(Graph(4, {{0, 3}, {1, 2}})) == std::vector<VertexList>{{0, 3}, {1, 2}});
  CHECK(connected_components(Graph(3, {})) == std::vector<VertexList>{{0}, {1}, {2}});
  CHECK(connected_components(Graph()).empty());
}

TEST_CASE("induced_subgraph", "[graph]") {
  const VertexList three{0, 2, 3};
  auto sub = induced_subgraph(clique(4), three);
  CHECK(sub.graph == clique(3));
  CHECK(sub.to_parent == three);
  CHECK(sub.to_local[2] == VertexId{1});
  CHECK_FALSE(sub.to_local[1].has_value());

  const VertexList apart{0, 2};
  CHECK(induced_subgraph(path(4), apart).graph.size() == 0);
  CHECK(induced_subgraph(path(4), VertexList{}).graph.order() == 0);

  const VertexList bad{9};
  CHECK_THROWS_AS(induced_subgraph(path(4), bad), InvalidArgument);

  SECTION("whole vertex set gives the same graph") {
    Graph g = random_chordal(12, 0.5, Seed{8});
    VertexList all(12);
    std::iota(all.begin(), all.end(), 0);
    CHECK(induced_subgraph(g, all).graph == g);
  }
}

TEST_CASE("degree_stats", "[graph]") {
  auto k4 = degree_stats(clique(4));
  CHECK(k4.min_degree == 3);
  CHECK(k4.max_degree == 3);
  auto s = degree_stats(star(4));
  CHECK(s.min_degree == 1);
  CHECK(s.max_degree == 3);
  CHECK(s.degrees == std::vector<std::size_t>{3, 1, 1, 1});
  auto p = degree_stats(path(4));
  CHECK(p.min_degree == 1);
  CHECK(p.max_degree == 2);
  auto e = degree_stats(Graph());
  CHECK(e.max_degree == 0);
  CHECK(e.degrees.empty());
}

TEST_CASE("is_independent_set", "[graph]") {
  CHECK(is_independent_set(path(4), VertexList{0, 2}));
  CHECK_FALSE(is_independent_set(path(4), VertexList{0, 1}));
  CHECK(is_independent_set(path(4), VertexList{}));
}

TEST_CASE("large graphs work without masks", "[graph]") {
  Graph g = path(200);
  CHECK_FALSE(g.has_masks());
  CHECK(g.adjacent(150, 151));
  CHECK(distance(g, 0, 199) == 199);
  CHECK_THROWS_AS(g.require_masks("test"), LimitExceeded);
}

TEST_CASE("edge-list writer layout", "[edge_list]") {
  CHECK(to_edge_list(cycle(4)) == "4 4\n0 1\n0 3\n1 2\n2 3\n");
  CHECK(to_edge_list(Graph(3, {})) == "3 0\n");
}

TEST_CASE("edge-list reader", "[edge_list]") {
  CHECK(parse_edge_list("# comment\n4 3\n0 1\n# inline\n1 2\n3 2\n") == path(4));
  CHECK(parse_edge_list("2 1\r\n0 1\r\n") == path(2));

  auto fails_at = [](const std::string& text, std::size_t line) {
    try {
      (void)parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line == line;
    }
    return false;
  };
  CHECK(fails_at("", 0));
  CHECK(fails_at("3 1\n0 0\n", 2));
  CHECK(fails_at("3 1\n0 7\n", 2));
  CHECK(fails_at("3 2\n0 1\n1 0\n", 3));
  CHECK(fails_at("3 2\n0 1\n", 2));
  CHECK(fails_at("3 1\n0 1\n1 2\n", 3));
  CHECK(fails_at("3 1\n0 x\n", 2));
  CHECK(fails_at("3 1\n0 -1\n", 2));
  CHECK(fails_at("3 1\n0 1 2\n", 2));
}

TEST_CASE("edge-list round trip", "[edge_list][property]") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    Graph g = random_chordal(3 + s % 15, 0.3, Seed{s});
    std::string text = to_edge_list(g);
    REQUIRE(parse_edge_list(text) == g);
    REQUIRE(to_edge_list(parse_edge_list(text)) == text);
  }
}
