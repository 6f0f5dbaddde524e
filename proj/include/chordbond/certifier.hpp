#pragma once

// Structural certificates that b(G) <= w(G) for connected chordal non-cliques.
//
// For a clique K the vertex set is layered by distance to K (A_0 = K,
// A_1, ..., A_k). A qualifying W is a connected component of some G[A_i]
// with at least two vertices whose outer neighbourhood F = N(W) & A_{i+1}
// is empty or independent and has no neighbour in A_{i+2}; its weight is
// psi = |F u W|. Q = N(W) & A_{i-1} (empty when i = 0). An apex is a vertex
// of W adjacent to all of Q.
//
// extract_certificate walks the case analysis built on these objects and
// returns the first certificate that survives numeric re-verification:
//
//   degenerate_pair  some clique has no qualifying W; the last layers give a
//                    pendant v hanging off a singleton component {u}
//   two_apex         the psi-minimal W has two apexes u, v; edge bound on uv
//   pendant_pair     one apex and F non-empty; pair bound through x in F
//   direct           one apex and F empty; remove E_v u E_w and re-check gamma
//
// If a branch produces nothing verifiable the certifier falls back to a plain
// scan (pair bounds, edge bounds, then exact bondage) and says so in the
// result. A certificate is never returned unverified.

#include <sstream>
#include <variant>

#include "bondage.hpp"
#include "edge_list.hpp"

namespace chordbond {

struct PartitionDistance {
  VertexList base_clique;
  std::vector<VertexList> layers;  // layers[0] == base_clique
};

struct Claim1Violation {
  std::size_t layer = 0;
  VertexList component;
  VertexId q1 = 0;
  VertexId q2 = 0;  // q1, q2 in N(component) & A_{layer-1}, not adjacent
};

struct WChoice {
  std::size_t layer = 0;
  VertexList W;
  VertexList F;
  VertexList Q;
  std::size_t psi = 0;
};

struct StructuralWitness {
  VertexList K;
  std::size_t layer = 0;
  VertexList W;
  VertexList F;
  VertexList Q;
  std::size_t psi = 0;
  std::optional<VertexId> apex;
};

struct PairCertificate {
  VertexId u = 0;
  VertexId v = 0;
  std::size_t bound = 0;
  friend bool operator==(const PairCertificate&, const PairCertificate&) = default;
};

struct EdgeCertificate {
  VertexId u = 0;
  VertexId v = 0;
  std::size_t bound = 0;
  friend bool operator==(const EdgeCertificate&, const EdgeCertificate&) = default;
};

struct DirectWitness {
  EdgeSet edges;
  friend bool operator==(const DirectWitness&, const DirectWitness&) = default;
};

using BondageCertificate = std::variant<PairCertificate, EdgeCertificate, DirectWitness>;

inline std::size_t certified_bound(const BondageCertificate& c) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, DirectWitness>) {
          return x.edges.size();
        } else {
          return x.bound;
        }
      },
      c);
}

inline const char* certificate_kind(const BondageCertificate& c) {
  switch (c.index()) {
    case 0: return "pair";
    case 1: return "edge";
    default: return "direct";
  }
}

enum class CertificateBranch { degenerate_pair, two_apex, pendant_pair, direct, fallback };

inline const char* to_string(CertificateBranch b) {
  switch (b) {
    case CertificateBranch::degenerate_pair: return "degenerate_pair";
    case CertificateBranch::two_apex: return "two_apex";
    case CertificateBranch::pendant_pair: return "pendant_pair";
    case CertificateBranch::direct: return "direct";
    case CertificateBranch::fallback: return "fallback";
  }
  return "?";
}

struct CertificateResult {
  BondageCertificate certificate;
  CertificateBranch branch = CertificateBranch::fallback;
  std::size_t omega = 0;
  std::optional<StructuralWitness> witness;  // psi-minimal witness when one exists
  std::string note;                          // why the fallback was needed, if it was
};

struct CertifierLimits {
  std::size_t max_cliques_n = kDefaultAllCliquesLimit;
  std::size_t gamma_n = kDefaultGammaLimit;
  BondageLimits bondage;
};

// Failure of a statement that must hold on every chordal input. Carries a
// diagnostic bundle (see diagnostic_bundle).
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& what, std::string detail_bundle)
      : Error(what), bundle(std::move(detail_bundle)) {}
  std::string bundle;
};

// ---------------------------------------------------------------------------
// Diagnostic bundle: an edge-list file whose trailing comment block names the
// structural objects. It re-parses as the graph it describes.

namespace detail {

inline void write_set(std::ostream& os, const char* name, const VertexList& s) {
  os << "# " << name << ':';
  for (VertexId v : s) os << ' ' << v;
  os << '\n';
}

}  // namespace detail

inline std::string diagnostic_bundle(const Graph& g, const std::string& reason,
                                     const std::optional<StructuralWitness>& sw = std::nullopt) {
  std::ostringstream os;
  os << "# chordbond diagnostic v1\n";
  std::string one_line = reason;
  std::replace(one_line.begin(), one_line.end(), '\n', ' ');
  os << "# reason: " << one_line << '\n';
  write_edge_list(os, g);
  if (sw) {
    detail::write_set(os, "K", sw->K);
    os << "# i: " << sw->layer << '\n';
    detail::write_set(os, "W", sw->W);
    detail::write_set(os, "F", sw->F);
    detail::write_set(os, "Q", sw->Q);
    os << "# psi: " << sw->psi << '\n';
    os << "# apex: ";
    if (sw->apex) {
      os << *sw->apex;
    } else {
      os << "none";
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Partition distance and the claims

namespace detail {

inline void require_connected_chordal(const Graph& g, const char* op) {
  if (g.order() == 0) throw PreconditionFailed(std::string(op) + " needs a non-empty graph");
  g.require_masks(op);
  if (!is_connected(g)) throw PreconditionFailed(std::string(op) + " needs a connected graph");
  auto ch = is_chordal(g);
  if (!ch.chordal) throw NotChordal(*ch.hole);
}

inline std::vector<Mask> layer_masks(const PartitionDistance& pd) {
  std::vector<Mask> out;
  out.reserve(pd.layers.size());
  for (const auto& l : pd.layers) out.push_back(to_mask(l));
  return out;
}

inline Mask layer_or_empty(const std::vector<Mask>& layers, std::size_t i) {
  return i < layers.size() ? layers[i] : 0;
}

inline bool independent(const Graph& g, Mask s) {
  for (Mask r = s; r != 0; r &= r - 1) {
    if ((g.nbr_mask(lowest(r)) & s) != 0) return false;
  }
  return true;
}

inline bool is_clique_mask(const Graph& g, Mask s) {
  for (Mask r = s; r != 0; r &= r - 1) {
    VertexId v = lowest(r);
    if ((s & ~bit(v) & ~g.nbr_mask(v)) != 0) return false;
  }
  return true;
}

}  // namespace detail

inline PartitionDistance partition_distance(const Graph& g, std::span<const VertexId> k) {
  g.require_masks("partition_distance");
  if (k.empty()) throw InvalidArgument("base clique must be non-empty");
  if (!is_clique(g, k)) throw InvalidArgument("base vertex set is not a clique");
  if (!is_connected(g)) throw PreconditionFailed("partition distance needs a connected graph");
  const auto dist = bfs_distances(g, k);
  std::size_t depth = *std::max_element(dist.begin(), dist.end());
  PartitionDistance pd;
  pd.layers.resize(depth + 1);
  for (VertexId v = 0; v < g.order(); ++v) pd.layers[dist[v]].push_back(v);
  pd.base_clique = pd.layers[0];
  return pd;
}

// Q = N(C) & A_{i-1} is a clique for every component C of every G[A_i], i >= 1.
inline std::optional<Claim1Violation> check_claim1(const Graph& g, const PartitionDistance& pd) {
  g.require_masks("check_claim1");
  const auto layers = detail::layer_masks(pd);
  for (std::size_t i = 1; i < layers.size(); ++i) {
    for (Mask c : components_within(g, layers[i])) {
      Mask q = open_nbhd(g, c) & layers[i - 1];
      for (Mask r = q; r != 0; r &= r - 1) {
        VertexId a = lowest(r);
        Mask missing = q & ~bit(a) & ~g.nbr_mask(a);
        if (missing != 0) return Claim1Violation{i, to_list(c), a, lowest(missing)};
      }
    }
  }
  return std::nullopt;
}

namespace detail {

inline bool better_w(const WChoice& a, const WChoice& b) {
  if (a.psi != b.psi) return a.psi < b.psi;
  if (a.layer != b.layer) return a.layer < b.layer;
  return a.W < b.W;
}

}  // namespace detail

// The qualifying W of minimum psi for this layering, ties by (layer, W).
inline std::optional<WChoice> find_W(const Graph& g, const PartitionDistance& pd) {
  g.require_masks("find_W");
  const auto layers = detail::layer_masks(pd);
  std::optional<WChoice> best;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    for (Mask w : components_within(g, layers[i])) {
      if (popcount(w) < 2) continue;
      const Mask nw = open_nbhd(g, w);
      const Mask f = nw & detail::layer_or_empty(layers, i + 1);
      if (!detail::independent(g, f)) continue;
      if ((open_nbhd(g, f) & detail::layer_or_empty(layers, i + 2)) != 0) continue;
      const Mask q = i == 0 ? 0 : nw & layers[i - 1];
      WChoice c{i, to_list(w), to_list(f), to_list(q), static_cast<std::size_t>(popcount(w | f))};
      if (!best || detail::better_w(c, *best)) best = std::move(c);
    }
  }
  return best;
}

namespace detail {

inline void require_certifiable(const Graph& g, std::size_t clique_limit, const char* op) {
  if (g.order() > clique_limit) throw LimitExceeded("all-cliques vertex", clique_limit, g.order());
  require_connected_chordal(g, op);
  if (is_complete(g)) throw PreconditionFailed(std::string(op) + " needs a graph that is not a clique");
}

inline std::vector<VertexId> apexes_of(const Graph& g, const VertexList& W, const VertexList& Q) {
  const Mask q = to_mask(Q);
  std::vector<VertexId> out;
  for (VertexId u : W) {
    if ((q & ~g.nbr_mask(u)) == 0) out.push_back(u);
  }
  return out;
}

inline StructuralWitness make_witness(const Graph& g, const VertexList& k, WChoice w) {
  StructuralWitness sw{k, w.layer, std::move(w.W), std::move(w.F), std::move(w.Q), w.psi, std::nullopt};
  auto ap = apexes_of(g, sw.W, sw.Q);
  if (!ap.empty()) sw.apex = ap.front();
  return sw;
}

}  // namespace detail

// Global psi minimum over every clique K (cliques in (size, vertex list)
// order; the first clique reaching the minimum wins). Cliques without a
// qualifying W count as psi = infinity; std::nullopt if no clique has one.
inline std::optional<StructuralWitness> minimize_psi(const Graph& g,
                                                     std::size_t clique_limit = kDefaultAllCliquesLimit) {
  detail::require_certifiable(g, clique_limit, "minimize_psi");
  std::optional<StructuralWitness> best;
  for (const auto& k : all_cliques(g, clique_limit)) {
    auto w = find_W(g, partition_distance(g, k));
    if (w && (!best || w->psi < best->psi)) best = detail::make_witness(g, k, std::move(*w));
  }
  return best;
}

enum class ClaimStatus { holds, hypothesis_not_met, theorem_violation };

inline const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::holds: return "holds";
    case ClaimStatus::hypothesis_not_met: return "hypothesis_not_met";
    case ClaimStatus::theorem_violation: return "theorem_violation";
  }
  return "?";
}

struct ClaimsReport {
  std::optional<VertexId> apex;  // smallest apex
  VertexList apexes;
  bool independent = true;  // for every apex u: W\{u}, N(u)&(F u W) independent; W within N[u]
  bool has_apex = true;
  bool q_fits = true;  // |Q| <= w - 1 when an apex exists
  bool psi_minimal = true;
  ClaimStatus status = ClaimStatus::holds;
  std::string detail;
  std::string bundle;  // diagnostic bundle when status == theorem_violation
};

// Checks the apex properties of sw: an apex exists, the independence
// conditions hold around every apex, and |Q| <= w - 1. Failures on a witness
// that is not globally psi-minimal are reported as hypothesis_not_met, since
// minimality is what the independence argument relies on.
inline ClaimsReport check_claims_2_3(const Graph& g, const StructuralWitness& sw,
                                     std::size_t clique_limit = kDefaultAllCliquesLimit) {
  detail::require_certifiable(g, clique_limit, "check_claims_2_3");
  ClaimsReport r;
  const Mask w = to_mask(sw.W);
  const Mask fw = w | to_mask(sw.F);
  r.apexes = detail::apexes_of(g, sw.W, sw.Q);
  r.has_apex = !r.apexes.empty();
  if (r.has_apex) r.apex = r.apexes.front();
  std::ostringstream why;
  if (!r.has_apex) why << "no vertex of W is adjacent to all of Q; ";
  for (VertexId u : r.apexes) {
    if (!detail::independent(g, w & ~bit(u))) {
      r.independent = false;
      why << "W\\{" << u << "} not independent; ";
    }
    if (!detail::independent(g, g.nbr_mask(u) & fw)) {
      r.independent = false;
      why << "N(" << u << ")&(F u W) not independent; ";
    }
    if ((w & ~g.closed_mask(u)) != 0) {
      r.independent = false;
      why << "W not within N[" << u << "]; ";
    }
  }
  if (r.has_apex) {
    const std::size_t omega = clique_number(g);
    r.q_fits = sw.Q.size() + 1 <= omega;
    if (!r.q_fits) why << "|Q| = " << sw.Q.size() << " > w - 1 = " << omega - 1 << "; ";
  }
  r.detail = why.str();
  if (r.independent && r.has_apex && r.q_fits) return r;

  auto best = minimize_psi(g, clique_limit);
  r.psi_minimal = best && best->psi == sw.psi;
  if (!r.psi_minimal) {
    r.status = ClaimStatus::hypothesis_not_met;
  } else {
    r.status = ClaimStatus::theorem_violation;
    r.bundle = diagnostic_bundle(g, "apex properties: " + r.detail, sw);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Certificates

inline bool certificate_verifies(const Graph& g, const BondageCertificate& c,
                                 std::size_t gamma_limit = kDefaultGammaLimit) {
  const std::size_t omega = clique_number(g);
  if (const auto* p = std::get_if<PairCertificate>(&c)) {
    check_vertex(g, p->u);
    check_vertex(g, p->v);
    if (p->u == p->v) return false;
    auto d = distance(g, p->u, p->v);
    return d && *d <= 2 && p->bound == g.degree(p->u) + g.degree(p->v) - 1 && p->bound <= omega;
  }
  if (const auto* e = std::get_if<EdgeCertificate>(&c)) {
    check_vertex(g, e->u);
    check_vertex(g, e->v);
    return e->u != e->v && g.adjacent(e->u, e->v) && e->bound == edge_bound_value(g, e->u, e->v) &&
           e->bound <= omega;
  }
  const auto& a = std::get<DirectWitness>(c).edges;
  for (const Edge& e : a) {
    check_vertex(g, e.u);
    check_vertex(g, e.v);
    if (e.u == e.v || !g.adjacent(e.u, e.v)) {
      throw InvalidArgument("certificate edge " + to_string(e) + " is not an edge of the graph");
    }
  }
  if (canonical(a).size() != a.size() || a.size() > omega || a.empty()) return false;
  const std::size_t before = gamma(g, gamma_limit).gamma;
  return !dominated_within(remove_edges(g, a), before, gamma_limit);
}

namespace detail {

struct CertifyContext {
  const Graph& g;
  std::size_t omega;
  std::size_t gamma_limit;

  std::optional<PairCertificate> pair(VertexId u, VertexId v) const {
    if (u == v) return std::nullopt;
    PairCertificate c{std::min(u, v), std::max(u, v), g.degree(u) + g.degree(v) - 1};
    if (!certificate_verifies(g, c, gamma_limit)) return std::nullopt;
    return c;
  }

  std::optional<EdgeCertificate> edge(VertexId u, VertexId v) const {
    if (u == v || !g.adjacent(u, v)) return std::nullopt;
    EdgeCertificate c{std::min(u, v), std::max(u, v), edge_bound_value(g, u, v)};
    if (!certificate_verifies(g, c, gamma_limit)) return std::nullopt;
    return c;
  }
};

inline void keep_better(std::optional<PairCertificate>& best, std::optional<PairCertificate> c) {
  if (c && (!best || c->bound < best->bound)) best = c;
}

// Pendant-pair candidates: two vertices of `f` sharing a neighbour in `w`.
inline void sibling_pendants(const CertifyContext& cx, Mask w, Mask f, std::optional<PairCertificate>& best) {
  for (Mask r = w; r != 0; r &= r - 1) {
    const auto hanging = to_list(cx.g.nbr_mask(lowest(r)) & f);
    for (std::size_t i = 0; i < hanging.size(); ++i) {
      for (std::size_t j = i + 1; j < hanging.size(); ++j) keep_better(best, cx.pair(hanging[i], hanging[j]));
    }
  }
}

// No qualifying W for this layering: the deepest layer is independent and a
// singleton component {u} of the layer above carries a pendant v.
inline std::optional<PairCertificate> degenerate_pair(const CertifyContext& cx, const PartitionDistance& pd) {
  const auto layers = layer_masks(pd);
  if (layers.size() < 2) return std::nullopt;
  const std::size_t k = layers.size() - 1;
  std::optional<PairCertificate> best;
  for (Mask c : components_within(cx.g, layers[k - 1])) {
    const Mask down = open_nbhd(cx.g, c) & layers[k];
    if (down == 0 || popcount(c) != 1) continue;
    const VertexId u = lowest(c);
    const auto pendants = to_list(down);
    for (std::size_t i = 0; i < pendants.size(); ++i) {
      keep_better(best, cx.pair(u, pendants[i]));
      for (std::size_t j = i + 1; j < pendants.size(); ++j) keep_better(best, cx.pair(pendants[i], pendants[j]));
    }
  }
  return best;
}

inline std::optional<BondageCertificate> two_apex(const CertifyContext& cx, const StructuralWitness& sw,
                                                  const std::vector<VertexId>& apexes) {
  for (std::size_t i = 0; i < apexes.size(); ++i) {
    for (std::size_t j = i + 1; j < apexes.size(); ++j) {
      if (auto e = cx.edge(apexes[i], apexes[j])) return BondageCertificate{*e};
    }
  }
  const Mask f = to_mask(sw.F);
  std::optional<PairCertificate> best;
  for (VertexId a : apexes) {
    for (VertexId x : to_list(cx.g.nbr_mask(a) & f)) keep_better(best, cx.pair(a, x));
  }
  sibling_pendants(cx, to_mask(sw.W), f, best);
  if (best) return BondageCertificate{*best};
  return std::nullopt;
}

inline std::optional<PairCertificate> pendant_pair(const CertifyContext& cx, const StructuralWitness& sw,
                                                   VertexId apex) {
  std::optional<PairCertificate> best;
  for (VertexId v : sw.W) {
    if (v == apex) continue;
    for (VertexId x : sw.F) keep_better(best, cx.pair(v, x));
  }
  sibling_pendants(cx, to_mask(sw.W), to_mask(sw.F), best);
  return best;
}

// E_v: every edge at v. E_w: edges from w to Q \ N(v).
inline EdgeSet direct_edges(const Graph& g, const StructuralWitness& sw, VertexId v, VertexId w) {
  EdgeSet a;
  for (VertexId x : g.neighbors(v)) a.emplace_back(v, x);
  const Mask qw = to_mask(sw.Q) & g.nbr_mask(w) & ~g.nbr_mask(v);
  for (VertexId q : to_list(qw)) a.emplace_back(w, q);
  return canonical(a);
}

inline std::optional<DirectWitness> direct(const CertifyContext& cx, const StructuralWitness& sw, VertexId apex) {
  for (VertexId v : sw.W) {
    if (v == apex) continue;
    for (VertexId w : sw.W) {
      if (w == v) continue;
      DirectWitness d{direct_edges(cx.g, sw, v, w)};
      if (d.edges.size() <= cx.omega && certificate_verifies(cx.g, d, cx.gamma_limit)) return d;
    }
  }
  return std::nullopt;
}

inline std::optional<BondageCertificate> fallback(const CertifyContext& cx, const CertifierLimits& limits) {
  std::optional<PairCertificate> best_pair;
  for (VertexId u = 0; u < cx.g.order(); ++u) {
    for (VertexId v = u + 1; v < cx.g.order(); ++v) {
      auto d = distance(cx.g, u, v);
      if (d && *d <= 2 && cx.g.degree(u) + cx.g.degree(v) - 1 <= cx.omega) keep_better(best_pair, cx.pair(u, v));
    }
  }
  if (best_pair) return BondageCertificate{*best_pair};
  for (const Edge& e : cx.g.edges()) {
    if (auto c = cx.edge(e.u, e.v)) return BondageCertificate{*c};
  }
  if (cx.g.order() <= limits.bondage.max_n && cx.g.size() <= limits.bondage.max_m) {
    auto b = bondage(cx.g, limits.bondage);
    DirectWitness d{b.witness};
    if (b.b <= cx.omega && certificate_verifies(cx.g, d, cx.gamma_limit)) return BondageCertificate{d};
  }
  return std::nullopt;
}

}  // namespace detail

inline CertificateResult extract_certificate(const Graph& g, const CertifierLimits& limits = {}) {
  detail::require_certifiable(g, limits.max_cliques_n, "extract_certificate");
  if (g.order() > limits.gamma_n) throw LimitExceeded("domination vertex", limits.gamma_n, g.order());
  const std::size_t omega = clique_number(g);
  const detail::CertifyContext cx{g, omega, limits.gamma_n};

  CertificateResult out;
  out.omega = omega;
  std::ostringstream gaps;

  // Walk the cliques once: the first clique without a qualifying W goes
  // through the degenerate branch; the others feed the psi minimisation.
  std::optional<StructuralWitness> best;
  bool degenerate_seen = false;
  for (const auto& k : all_cliques(g, limits.max_cliques_n)) {
    const auto pd = partition_distance(g, k);
    if (auto w = find_W(g, pd)) {
      if (!best || w->psi < best->psi) best = detail::make_witness(g, k, std::move(*w));
      continue;
    }
    if (degenerate_seen) continue;
    degenerate_seen = true;
    if (auto p = detail::degenerate_pair(cx, pd)) {
      out.certificate = *p;
      out.branch = CertificateBranch::degenerate_pair;
      return out;
    }
    gaps << "no verifiable degenerate pair for K = {";
    for (VertexId v : k) gaps << ' ' << v;
    gaps << " }; ";
  }
  out.witness = best;

  if (best) {
    const StructuralWitness& sw = *best;
    const auto apexes = detail::apexes_of(g, sw.W, sw.Q);
    if (apexes.size() >= 2) {
      if (auto c = detail::two_apex(cx, sw, apexes)) {
        out.certificate = *c;
        out.branch = CertificateBranch::two_apex;
        return out;
      }
      gaps << "two-apex branch produced nothing verifiable; ";
    } else if (apexes.size() == 1 && !sw.F.empty()) {
      if (auto c = detail::pendant_pair(cx, sw, apexes.front())) {
        out.certificate = *c;
        out.branch = CertificateBranch::pendant_pair;
        return out;
      }
      gaps << "pendant-pair branch produced nothing verifiable; ";
    } else if (apexes.size() == 1) {
      if (auto c = detail::direct(cx, sw, apexes.front())) {
        out.certificate = *c;
        out.branch = CertificateBranch::direct;
        return out;
      }
      gaps << "no E_v u E_w removal raised gamma; ";
    } else {
      gaps << "psi-minimal W has no apex; ";
    }
  } else if (!degenerate_seen) {
    gaps << "no clique admits a qualifying W; ";
  }

  out.note = gaps.str();
  if (auto c = detail::fallback(cx, limits)) {
    out.certificate = *c;
    out.branch = CertificateBranch::fallback;
    return out;
  }
  throw TheoremViolation("no certificate with bound <= w(G) = " + std::to_string(omega) + ": " + out.note,
                         diagnostic_bundle(g, "certificate extraction failed: " + out.note, best));
}

}  // namespace chordbond
