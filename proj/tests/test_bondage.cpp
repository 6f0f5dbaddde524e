#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chordbond/bondage.hpp"
#include "chordbond/families.hpp"
#include "support/oracles.hpp"

using namespace chordbond;

TEST_CASE("fink_bound", "[bondage]") {
  auto p4 = fink_bound(path(4));
  REQUIRE(p4);
  CHECK(p4->bound == 2);
  CHECK(distance(path(4), p4->u, p4->v) <= std::size_t{2});

  for (std::size_t n = 2; n <= 6; ++n) {
    Graph g = corona(clique(n), clique(1));
    REQUIRE(oracle::fink(g) == n);
    CHECK(fink_bound(g)->bound == n);
  }
  CHECK_FALSE(fink_bound(Graph(2, {})));
  CHECK_FALSE(fink_bound(Graph(1, {})));
}

TEST_CASE("hartnell_rall_bound", "[bondage]") {
  CHECK(hartnell_rall_bound(clique(3))->bound == 2);
  auto p4 = hartnell_rall_bound(path(4));
  CHECK(p4->bound == 2);
  CHECK(p4->edge == Edge(0, 1));
  CHECK(hartnell_rall_bound(clique(4))->bound == 3);
  CHECK_FALSE(hartnell_rall_bound(Graph(3, {})));
}

TEST_CASE("pair and edge bounds match brute force", "[bondage][property]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = oracle::random_graph(2 + trial % 10, 0.3, rng);
    auto f = fink_bound(g);
    auto h = hartnell_rall_bound(g);
    REQUIRE(f.has_value() == oracle::fink(g).has_value());
    if (f) REQUIRE(f->bound == *oracle::fink(g));
    REQUIRE(h.has_value() == oracle::hartnell_rall(g).has_value());
    if (h) REQUIRE(h->bound == *oracle::hartnell_rall(g));
  }
}

TEST_CASE("chordal_upper_bound", "[bondage]") {
  CHECK(chordal_upper_bound(clique(5)) == 3);
  CHECK(chordal_upper_bound(clique(2)) == 1);
  for (std::size_t n = 2; n <= 5; ++n) CHECK(chordal_upper_bound(corona(clique(n), clique(1))) == n);
  CHECK(chordal_upper_bound(random_tree(9, Seed{1})) == 2);

  try {
    (void)chordal_upper_bound(cycle(4));
    FAIL("C_4 accepted");
  } catch (const NotChordal& e) {
    CHECK(is_hole(cycle(4), e.hole));
  }
  CHECK_THROWS_AS(chordal_upper_bound(Graph(4, {{0, 1}, {2, 3}})), PreconditionFailed);
  CHECK_THROWS_AS(chordal_upper_bound(Graph(1, {})), PreconditionFailed);
}

TEST_CASE("clique_bondage_witness", "[bondage]") {
  CHECK(clique_bondage_witness(4) == EdgeSet{Edge(0, 1), Edge(2, 3)});
  CHECK(clique_bondage_witness(2) == EdgeSet{Edge(0, 1)});
  CHECK(clique_bondage_witness(5).size() == 3);
  CHECK_THROWS_AS(clique_bondage_witness(1), InvalidArgument);
  for (std::size_t n = 2; n <= 10; ++n) {
    auto w = clique_bondage_witness(n);
    CHECK(w.size() == ceil_half(n));
    CHECK(gamma(remove_edges(clique(n), w)).gamma == 2);
  }
}

TEST_CASE("upper_bound_report", "[bondage]") {
  auto k4 = upper_bound_report(clique(4));
  CHECK(k4.fink->bound == 5);
  CHECK(k4.hartnell_rall->bound == 3);
  CHECK(k4.chordal == std::size_t{2});
  CHECK(k4.overall == std::size_t{2});
  CHECK(k4.overall_source == BoundKind::chordal);

  auto p4 = upper_bound_report(path(4));
  CHECK(p4.fink->bound == 2);
  CHECK(p4.overall == std::size_t{2});

  auto c4 = upper_bound_report(cycle(4));
  CHECK_FALSE(c4.chordal);
  CHECK(c4.overall == std::size_t{3});

  auto empty = upper_bound_report(Graph(3, {}));
  CHECK_FALSE(empty.overall);
}

TEST_CASE("bondage on named graphs", "[bondage]") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto r = bondage(corona(clique(n), clique(1)));
    CHECK(r.b == n);
    CHECK(r.gamma_before == n);
    CHECK(r.gamma_after == n + 1);
  }
  for (std::size_t k = 2; k <= 3; ++k) CHECK(bondage(quadrangulated_corona(k)).b == 3);

  REQUIRE(oracle::bondage(cycle(4)) == std::size_t{3});
  auto c4 = bondage(cycle(4));
  CHECK(c4.b == 3);
  CHECK(c4.b > clique_number(cycle(4)));

  REQUIRE(oracle::bondage(path(4)) == std::size_t{2});
  auto p4 = bondage(path(4));
  CHECK(p4.b == 2);
  CHECK(p4.witness.size() == 2);
  CHECK(gamma(remove_edges(path(4), p4.witness)).gamma == 3);

  CHECK(bondage(clique(2)).b == 1);
  CHECK(bondage(clique(3)).b == 2);
  CHECK(bondage(clique(4)).b == 2);
}

TEST_CASE("bondage witness is the lexicographically first in search order", "[bondage]") {
  // P_4 = 0-1-2-3: the first 2-subset raising gamma is {01, 12}.
  CHECK(bondage(path(4)).witness == EdgeSet{Edge(0, 1), Edge(1, 2)});
  auto g = corona(clique(3), clique(1));
  CHECK(bondage(g).witness == bondage(g).witness);
}

TEST_CASE("undefined bondage and limits", "[bondage]") {
  CHECK_THROWS_AS(bondage(Graph(1, {})), UndefinedBondage);
  CHECK_THROWS_AS(bondage(Graph(4, {})), UndefinedBondage);
  CHECK_FALSE(bondage_defined(Graph(4, {})));
  CHECK(bondage_defined(path(2)));
  // One edge plus isolated vertices: gamma can still grow.
  CHECK(bondage(Graph(3, {{0, 1}})).b == 1);

  CHECK_THROWS_AS(bondage(path(17)), LimitExceeded);
  CHECK_THROWS_AS(bondage(clique(9)), LimitExceeded);
  BondageLimits wide{20, 40};
  CHECK(bondage(clique(9), wide).b == 5);
}

TEST_CASE("exact bondage matches exhaustive search and stays under every bound", "[bondage][property]") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 6;
    Graph g = trial % 3 == 0 ? oracle::random_graph(n, 0.5, rng)
                             : random_chordal(n, 0.4, Seed{static_cast<std::uint64_t>(trial)});
    if (g.size() == 0 || g.size() > 12 || !bondage_defined(g)) continue;
    auto r = bondage(g);
    REQUIRE(std::optional(r.b) == oracle::bondage(g));
    auto ub = upper_bound_report(g);
    if (ub.fink) REQUIRE(r.b <= ub.fink->bound);
    if (ub.hartnell_rall) REQUIRE(r.b <= ub.hartnell_rall->bound);
    if (ub.chordal) REQUIRE(r.b <= *ub.chordal);
  }
}

TEST_CASE("no smaller edge set raises gamma", "[bondage][property]") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Graph g = random_chordal(4 + s % 6, 0.35, Seed{s + 500});
    if (g.size() > 14) continue;
    auto r = bondage(g);
    const auto edges = g.edges();
    const std::size_t g0 = r.gamma_before;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << edges.size()); ++sub) {
      if (static_cast<std::size_t>(__builtin_popcountll(sub)) + 1 != r.b) continue;
      REQUIRE(gamma(oracle::without(g, sub)).gamma == g0);
    }
  }
}

TEST_CASE("exact clique bondage", "[bondage]") {
  BondageLimits wide{16, 40};
  for (std::size_t n = 2; n <= 8; ++n) CHECK(bondage(clique(n), wide).b == ceil_half(n));
}

TEST_CASE("trees have bondage at most two", "[bondage][property]") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    Graph t = random_tree(2 + s % 13, Seed{s});
    auto b = bondage(t).b;
    REQUIRE(b >= 1);
    REQUIRE(b <= 2);
  }
}

TEST_CASE("block graphs have bondage at most the maximum degree", "[bondage][property]") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Graph g = random_block_graph(3 + s % 9, Seed{s});
    if (g.size() > 30) continue;
    REQUIRE(bondage(g).b <= degree_stats(g).max_degree);
  }
}
