#include <catch2/catch_amalgamated.hpp>

#include "chordbond/certifier.hpp"
#include "chordbond/families.hpp"
#include "support/oracles.hpp"

using namespace chordbond;

namespace {

// Triangle 0,1,2 with pendants 3-0, 4-1, 5-2.
Graph sun3() { return corona(clique(3), clique(1)); }

std::vector<Graph> chordal_corpus(std::size_t count, std::size_t max_n, std::uint64_t salt) {
  std::vector<Graph> out;
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    Seed s = derive_seed(Seed{salt}, i);
    SplitMix64 rng(s);
    const std::size_t n = 3 + rng.below(max_n - 2);
    Graph g = random_chordal(n, rng.unit() * 0.7, s);
    if (!is_complete(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST_CASE("partition_distance", "[certifier]") {
  auto p4 = partition_distance(path(4), VertexList{0});
  CHECK(p4.layers == std::vector<VertexList>{{0}, {1}, {2}, {3}});

  auto k5 = partition_distance(clique(5), VertexList{0, 1, 2, 3, 4});
  CHECK(k5.layers.size() == 1);

  auto s = partition_distance(sun3(), VertexList{0, 1, 2});
  CHECK(s.layers == std::vector<VertexList>{{0, 1, 2}, {3, 4, 5}});
  CHECK(s.base_clique == VertexList{0, 1, 2});

  CHECK_THROWS_AS(partition_distance(path(4), VertexList{0, 2}), InvalidArgument);
  CHECK_THROWS_AS(partition_distance(path(4), VertexList{}), InvalidArgument);
  CHECK_THROWS_AS(partition_distance(Graph(4, {{0, 1}, {2, 3}}), VertexList{0}), PreconditionFailed);
}

TEST_CASE("check_claim1", "[certifier]") {
  CHECK_FALSE(check_claim1(clique(4), partition_distance(clique(4), VertexList{0, 1, 2, 3})));

  // In C_4 seen from vertex 0, vertex 2 has the non-adjacent neighbours 1, 3.
  auto v = check_claim1(cycle(4), partition_distance(cycle(4), VertexList{0}));
  REQUIRE(v);
  CHECK(v->layer == 2);
  CHECK(v->component == VertexList{2});
  CHECK(std::min(v->q1, v->q2) == 1);
  CHECK(std::max(v->q1, v->q2) == 3);

  for (const auto& g : chordal_corpus(60, 12, 1)) {
    for (const auto& k : all_cliques(g)) REQUIRE_FALSE(check_claim1(g, partition_distance(g, k)));
  }
}

TEST_CASE("find_W", "[certifier]") {
  SECTION("sun, K = triangle") {
    REQUIRE(oracle::psi_of(sun3(), {0, 1, 2}) == std::size_t{6});
    auto w = find_W(sun3(), partition_distance(sun3(), VertexList{0, 1, 2}));
    REQUIRE(w);
    CHECK(w->layer == 0);
    CHECK(w->W == VertexList{0, 1, 2});
    CHECK(w->F == VertexList{3, 4, 5});
    CHECK(w->Q.empty());
    CHECK(w->psi == 6);
  }
  SECTION("sun, K = one triangle vertex") {
    REQUIRE(oracle::psi_of(sun3(), {0}) == std::size_t{4});
    auto w = find_W(sun3(), partition_distance(sun3(), VertexList{0}));
    REQUIRE(w);
    CHECK(w->layer == 1);
    CHECK(w->W == VertexList{1, 2});
    CHECK(w->F == VertexList{4, 5});
    CHECK(w->Q == VertexList{0});
    CHECK(w->psi == 4);
  }
  SECTION("P_4, K = {1}: every layer is independent") {
    REQUIRE_FALSE(oracle::psi_of(path(4), {1}));
    CHECK_FALSE(find_W(path(4), partition_distance(path(4), VertexList{1})));
  }
  SECTION("agrees with the definition on every clique") {
    for (const auto& g : chordal_corpus(40, 11, 2)) {
      for (const auto& k : all_cliques(g)) {
        auto w = find_W(g, partition_distance(g, k));
        auto ref = oracle::psi_of(g, k);
        REQUIRE(w.has_value() == ref.has_value());
        if (w) REQUIRE(w->psi == *ref);
      }
    }
  }
}

TEST_CASE("minimize_psi", "[certifier]") {
  // Frozen from the brute-force oracle: the sun reaches 4 from K = {0};
  // P_4 only qualifies with K = {1,2} (W = {1,2}, F = {0,3}); the star
  // K_{1,4} only with K = centre + leaf (W = K, F = other leaves).
  REQUIRE(oracle::min_psi(sun3()) == std::size_t{4});
  REQUIRE(oracle::min_psi(path(4)) == std::size_t{4});
  REQUIRE(oracle::min_psi(star(5)) == std::size_t{5});

  auto s = minimize_psi(sun3());
  REQUIRE(s);
  CHECK(s->psi == 4);
  CHECK(s->K == VertexList{0});
  CHECK(s->apex == VertexId{1});

  auto p = minimize_psi(path(4));
  REQUIRE(p);
  CHECK(p->psi == 4);
  CHECK(p->K == VertexList{1, 2});
  CHECK(p->F == VertexList{0, 3});

  auto st = minimize_psi(star(5));
  REQUIRE(st);
  CHECK(st->psi == 5);
  CHECK(st->K == VertexList{0, 1});

  CHECK_THROWS_AS(minimize_psi(clique(4)), PreconditionFailed);
  CHECK_THROWS_AS(minimize_psi(cycle(5)), NotChordal);
  CHECK_THROWS_AS(minimize_psi(path(30)), LimitExceeded);

  for (const auto& g : chordal_corpus(60, 11, 3)) {
    auto w = minimize_psi(g);
    auto ref = oracle::min_psi(g);
    REQUIRE(w.has_value() == ref.has_value());
    if (w) REQUIRE(w->psi == *ref);
  }
}

TEST_CASE("check_claims_2_3", "[certifier]") {
  SECTION("sun witness") {
    auto sw = *minimize_psi(sun3());
    auto r = check_claims_2_3(sun3(), sw);
    CHECK(r.status == ClaimStatus::holds);
    CHECK(r.apexes == VertexList{1, 2});
    CHECK(r.independent);
    CHECK(r.has_apex);
    CHECK(r.q_fits);
  }
  SECTION("empty Q makes every vertex of W an apex") {
    // P_4's witness sits in layer 0.
    auto sw = *minimize_psi(path(4));
    REQUIRE(sw.Q.empty());
    auto r = check_claims_2_3(path(4), sw);
    CHECK(r.apexes == sw.W);
    CHECK(r.status == ClaimStatus::holds);
  }
  SECTION("non-minimal witness is flagged as hypothesis not met") {
    auto w = *find_W(sun3(), partition_distance(sun3(), VertexList{0, 1, 2}));
    StructuralWitness sw{{0, 1, 2}, w.layer, w.W, w.F, w.Q, w.psi, VertexId{0}};
    auto r = check_claims_2_3(sun3(), sw);
    CHECK_FALSE(r.independent);
    CHECK_FALSE(r.psi_minimal);
    CHECK(r.status == ClaimStatus::hypothesis_not_met);
    CHECK(r.bundle.empty());
  }
  SECTION("claims hold on every psi-minimal witness") {
    for (const auto& g : chordal_corpus(120, 12, 4)) {
      auto sw = minimize_psi(g);
      if (!sw) continue;
      auto r = check_claims_2_3(g, *sw);
      INFO(r.detail);
      REQUIRE(r.status == ClaimStatus::holds);
      REQUIRE(sw->Q.size() + 1 <= clique_number(g));
    }
  }
}

TEST_CASE("certificate_verifies", "[certifier]") {
  CHECK(certificate_verifies(path(4), PairCertificate{0, 1, 2}));
  CHECK_FALSE(certificate_verifies(path(4), PairCertificate{0, 1, 3}));
  CHECK_FALSE(certificate_verifies(path(4), PairCertificate{0, 3, 2}));
  CHECK(certificate_verifies(path(4), EdgeCertificate{0, 1, 2}));
  CHECK_FALSE(certificate_verifies(path(4), EdgeCertificate{0, 2, 2}));

  // |A| = w + 1.
  CHECK_FALSE(certificate_verifies(path(4), DirectWitness{{Edge(0, 1), Edge(1, 2), Edge(2, 3)}}));
  // Removing 01 from P_4 keeps gamma = 2.
  CHECK_FALSE(certificate_verifies(path(4), DirectWitness{{Edge(0, 1)}}));
  CHECK(certificate_verifies(path(4), DirectWitness{{Edge(0, 1), Edge(1, 2)}}));

  CHECK_THROWS_AS(certificate_verifies(path(4), PairCertificate{0, 9, 1}), InvalidArgument);
  CHECK_THROWS_AS(certificate_verifies(path(4), DirectWitness{{Edge(0, 2)}}), InvalidArgument);
}

TEST_CASE("extract_certificate on named graphs", "[certifier]") {
  for (std::size_t n = 3; n <= 4; ++n) {
    Graph g = corona(clique(n), clique(1));
    auto c = extract_certificate(g);
    CHECK(c.omega == n);
    CHECK(certified_bound(c.certificate) <= n);
    CHECK(certificate_verifies(g, c.certificate));
  }
  auto p4 = extract_certificate(path(4));
  CHECK(certified_bound(p4.certificate) <= 2);

  auto st = extract_certificate(star(6));
  CHECK(certified_bound(st.certificate) <= 2);
  CHECK(std::holds_alternative<PairCertificate>(st.certificate));

  CHECK_THROWS_AS(extract_certificate(clique(3)), PreconditionFailed);
  CHECK_THROWS_AS(extract_certificate(cycle(4)), NotChordal);
  CHECK_THROWS_AS(extract_certificate(Graph(4, {{0, 1}, {2, 3}})), PreconditionFailed);
}

TEST_CASE("extract_certificate on random chordal graphs", "[certifier][property]") {
  std::map<CertificateBranch, int> seen;
  for (const auto& g : chordal_corpus(400, 14, 5)) {
    auto c = extract_certificate(g);
    INFO(diagnostic_bundle(g, "property test", c.witness));
    REQUIRE(certificate_verifies(g, c.certificate));
    REQUIRE(certified_bound(c.certificate) <= c.omega);
    CHECK(c.branch != CertificateBranch::fallback);
    ++seen[c.branch];

    if (const auto* d = std::get_if<DirectWitness>(&c.certificate); d && c.branch == CertificateBranch::direct) {
      REQUIRE(d->edges.size() <= c.witness->Q.size() + 1);
    }

    // With a unique apex and a W-vertex carrying two F-neighbours, the
    // certificate still comes from a pair bound within w.
    if (c.witness) {
      const auto& sw = *c.witness;
      const Mask f = to_mask(sw.F);
      const bool crowded = std::any_of(sw.W.begin(), sw.W.end(),
                                       [&](VertexId v) { return popcount(g.nbr_mask(v) & f) >= 2; });
      const auto r = check_claims_2_3(g, sw);
      if (crowded && r.apexes.size() == 1) {
        REQUIRE(std::holds_alternative<PairCertificate>(c.certificate));
        REQUIRE(certified_bound(c.certificate) <= c.omega);
      }
    }
  }
  CHECK(seen[CertificateBranch::degenerate_pair] > 0);
  CHECK(seen[CertificateBranch::two_apex] > 0);
  CHECK(seen[CertificateBranch::direct] > 0);
}

TEST_CASE("diagnostic bundle", "[certifier]") {
  auto sw = minimize_psi(sun3());
  std::string b = diagnostic_bundle(sun3(), "example\nreason", sw);
  CHECK(b ==
        "# chordbond diagnostic v1\n"
        "# reason: example reason\n"
        "6 6\n0 1\n0 2\n0 3\n1 2\n1 4\n2 5\n"
        "# K: 0\n# i: 1\n# W: 1 2\n# F: 4 5\n# Q: 0\n# psi: 4\n# apex: 1\n");
  CHECK(parse_edge_list(b) == sun3());
  CHECK(diagnostic_bundle(path(2), "r") == "# chordbond diagnostic v1\n# reason: r\n2 1\n0 1\n");
}
