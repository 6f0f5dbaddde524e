#pragma once

// Exact bondage number and the upper bounds used to cap its search.
//
// Bounds:
//   pair bound   min over u != v with d(u,v) <= 2 of d(u) + d(v) - 1
//   edge bound   min over uv in E of d(u) + d(v) - 1 - |N(u) & N(v)|
//   chordal      ceil(w/2) for a clique, w otherwise (connected chordal only)
//
// The exact search walks edge subsets by size, lexicographically within a
// size, and stops at the first subset whose removal raises the domination
// number. It never goes past the smallest applicable bound: reaching it
// without success means a bound was violated, which is reported as an error.

#include "chordal.hpp"
#include "domination.hpp"

namespace chordbond {

struct PairBound {
  std::size_t bound = 0;
  VertexId u = 0;
  VertexId v = 0;
};

struct EdgeBound {
  std::size_t bound = 0;
  Edge edge;
};

enum class BoundKind { pair, edge, chordal, edge_count };

inline const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::pair: return "fink";
    case BoundKind::edge: return "hartnell_rall";
    case BoundKind::chordal: return "chordal";
    case BoundKind::edge_count: return "edge_count";
  }
  return "?";
}

struct UpperBoundReport {
  std::optional<PairBound> fink;
  std::optional<EdgeBound> hartnell_rall;
  std::optional<std::size_t> chordal;
  std::optional<std::size_t> overall;
  std::optional<BoundKind> overall_source;
};

struct BondageResult {
  std::size_t b = 0;
  EdgeSet witness;
  std::size_t gamma_before = 0;
  std::size_t gamma_after = 0;
  std::size_t cap = 0;
  BoundKind bound_used = BoundKind::edge_count;
};

struct BondageLimits {
  std::size_t max_n = 16;
  std::size_t max_m = 30;
};

// gamma(G - A) can never exceed gamma(G) for any A (e.g. edgeless graphs).
class UndefinedBondage : public Error {
 public:
  using Error::Error;
};

// The exact search exhausted the cap without success.
class BoundViolation : public Error {
 public:
  using Error::Error;
};

class NotChordal : public PreconditionFailed {
 public:
  explicit NotChordal(HoleWitness h)
      : PreconditionFailed("graph is not chordal (hole of length " + std::to_string(h.cycle.size()) + ")"),
        hole(std::move(h)) {}
  HoleWitness hole;
};

// ---------------------------------------------------------------------------

inline std::optional<PairBound> fink_bound(const Graph& g) {
  std::optional<PairBound> best;
  for (VertexId u = 0; u < g.order(); ++u) {
    // Vertices within distance 2 of u.
    std::vector<bool> near(g.order(), false);
    for (VertexId x : g.neighbors(u)) {
      near[x] = true;
      for (VertexId y : g.neighbors(x)) near[y] = true;
    }
    for (VertexId v = u + 1; v < g.order(); ++v) {
      if (!near[v]) continue;
      std::size_t bound = g.degree(u) + g.degree(v) - 1;
      if (!best || bound < best->bound) best = PairBound{bound, u, v};
    }
  }
  return best;
}

inline std::size_t common_neighbors(const Graph& g, VertexId u, VertexId v) {
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

inline std::size_t edge_bound_value(const Graph& g, VertexId u, VertexId v) {
  return g.degree(u) + g.degree(v) - 1 - common_neighbors(g, u, v);
}

inline std::optional<EdgeBound> hartnell_rall_bound(const Graph& g) {
  std::optional<EdgeBound> best;
  for (const Edge& e : g.edges()) {
    std::size_t bound = edge_bound_value(g, e.u, e.v);
    if (!best || bound < best->bound) best = EdgeBound{bound, e};
  }
  return best;
}

inline std::size_t ceil_half(std::size_t x) { return (x + 1) / 2; }

inline std::size_t chordal_upper_bound(const Graph& g) {
  if (g.order() < 2) throw PreconditionFailed("chordal bound needs at least two vertices");
  auto ch = is_chordal(g);
  if (!ch.chordal) throw NotChordal(*ch.hole);
  if (!is_connected(g)) throw PreconditionFailed("chordal bound needs a connected graph");
  const std::size_t w = max_clique_chordal(g, ch.peo).size;
  return is_complete(g) ? ceil_half(w) : w;
}

// Edge set of K_n whose removal raises the domination number from 1 to 2:
// a perfect matching, plus one edge at the unmatched vertex when n is odd.
inline EdgeSet clique_bondage_witness(std::size_t n) {
  if (n < 2) throw InvalidArgument("clique bondage witness needs n >= 2");
  EdgeSet out;
  for (VertexId i = 0; i + 1 < n; i += 2) out.emplace_back(i, i + 1);
  if (n % 2 == 1) out.emplace_back(0, static_cast<VertexId>(n - 1));
  return canonical(out);
}

inline UpperBoundReport upper_bound_report(const Graph& g) {
  UpperBoundReport r;
  r.fink = fink_bound(g);
  r.hartnell_rall = hartnell_rall_bound(g);
  if (g.order() >= 2 && is_connected(g) && is_chordal(g).chordal) r.chordal = chordal_upper_bound(g);

  auto consider = [&](std::optional<std::size_t> value, BoundKind kind) {
    if (value && (!r.overall || *value < *r.overall)) {
      r.overall = value;
      r.overall_source = kind;
    }
  };
  consider(r.fink ? std::optional(r.fink->bound) : std::nullopt, BoundKind::pair);
  consider(r.hartnell_rall ? std::optional(r.hartnell_rall->bound) : std::nullopt, BoundKind::edge);
  consider(r.chordal, BoundKind::chordal);
  return r;
}

// ---------------------------------------------------------------------------

namespace detail {

// Calls visit(indices) for every k-subset of [0, m) in lexicographic order;
// stops early when visit returns true.
template <class Visit>
bool for_each_combination(std::size_t m, std::size_t k, Visit&& visit) {
  if (k > m) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(std::span<const std::size_t>(idx))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

inline bool bondage_defined(const Graph& g, std::size_t gamma_limit = kDefaultGammaLimit) {
  return g.size() > 0 && gamma(g, gamma_limit).gamma < g.order();
}

inline BondageResult bondage(const Graph& g, const BondageLimits& limits = {}) {
  if (g.order() > limits.max_n) throw LimitExceeded("bondage vertex", limits.max_n, g.order());
  if (g.size() > limits.max_m) throw LimitExceeded("bondage edge", limits.max_m, g.size());
  g.require_masks("bondage");

  const auto base = detail::adjacency_masks(g);
  const std::size_t gamma0 = popcount(detail::min_dominating_set(base));
  if (g.size() == 0 || gamma0 >= g.order()) {
    throw UndefinedBondage("domination number cannot increase (gamma = n = " +
                           std::to_string(g.order()) + ")");
  }

  const auto bounds = upper_bound_report(g);
  BondageResult r;
  r.gamma_before = gamma0;
  r.cap = g.size();
  if (bounds.overall && *bounds.overall < r.cap) {
    r.cap = *bounds.overall;
    r.bound_used = *bounds.overall_source;
  }

  const EdgeSet edges = g.edges();
  std::vector<Mask> adj(base.begin(), base.end());
  for (std::size_t k = 1; k <= r.cap; ++k) {
    bool found = detail::for_each_combination(edges.size(), k, [&](std::span<const std::size_t> idx) {
      for (std::size_t i : idx) {
        adj[edges[i].u] &= ~bit(edges[i].v);
        adj[edges[i].v] &= ~bit(edges[i].u);
      }
      bool raised = !detail::dominated_within(adj, gamma0);
      for (std::size_t i : idx) {
        adj[edges[i].u] |= bit(edges[i].v);
        adj[edges[i].v] |= bit(edges[i].u);
      }
      if (raised) {
        for (std::size_t i : idx) r.witness.push_back(edges[i]);
      }
      return raised;
    });
    if (found) {
      r.b = k;
      r.gamma_after = gamma(remove_edges(g, r.witness), limits.max_n).gamma;
      if (r.gamma_after != gamma0 + 1) {
        throw Error("internal: bondage witness moved gamma from " + std::to_string(gamma0) + " to " +
                    std::to_string(r.gamma_after));
      }
      return r;
    }
  }
  throw BoundViolation(std::string("no edge set of size <= ") + std::to_string(r.cap) +
                       " raises the domination number, contradicting the " + to_string(r.bound_used) +
                       " bound");
}

}  // namespace chordbond
