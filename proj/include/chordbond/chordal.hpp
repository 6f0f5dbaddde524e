#pragma once

// Chordality recognition and clique machinery.
//
// Recognition runs maximum cardinality search, then checks the reversed visit
// order as a perfect elimination ordering (PEO). A failed check yields a
// vertex with two non-adjacent later neighbours, which seeds an explicit hole
// witness so callers never get a bare "false".

#include <map>
#include <set>

#include "graph.hpp"

namespace chordbond {

// order[0] is eliminated first.
struct EliminationOrdering {
  VertexList order;
};

// Induced cycle of length >= 4, listed in cyclic order.
struct HoleWitness {
  VertexList cycle;
};

struct ChordalityResult {
  bool chordal = true;
  std::optional<HoleWitness> hole;
  EliminationOrdering peo;  // valid PEO when chordal
};

struct CliqueResult {
  std::size_t size = 0;
  VertexList vertices;
};

inline constexpr std::size_t kDefaultAllCliquesLimit = 24;

// Maximum cardinality search. The returned elimination ordering is the
// reverse of the visit order; it is a PEO iff g is chordal.
inline EliminationOrdering maximum_cardinality_search(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> visited(n, false);
  // Buckets of unvisited vertices by weight; smallest id wins ties.
  std::vector<std::set<VertexId>> bucket(n + 1);
  for (VertexId v = 0; v < n; ++v) bucket[0].insert(v);
  std::size_t top = 0;
  VertexList visit;
  visit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    while (bucket[top].empty()) --top;
    VertexId v = *bucket[top].begin();
    bucket[top].erase(bucket[top].begin());
    visited[v] = true;
    visit.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      if (visited[w]) continue;
      bucket[weight[w]].erase(w);
      ++weight[w];
      bucket[weight[w]].insert(w);
      top = std::max(top, weight[w]);
    }
  }
  std::reverse(visit.begin(), visit.end());
  return {std::move(visit)};
}

namespace detail {

inline std::vector<std::size_t> positions(const EliminationOrdering& peo, std::size_t n) {
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t i = 0; i < peo.order.size(); ++i) pos[peo.order[i]] = i;
  return pos;
}

inline VertexList later_neighbors(const Graph& g, const std::vector<std::size_t>& pos, VertexId v) {
  VertexList out;
  for (VertexId w : g.neighbors(v)) {
    if (pos[w] > pos[v]) out.push_back(w);
  }
  return out;
}

// Shortest x-y path avoiding `blocked`; empty when none exists.
inline VertexList shortest_path_avoiding(const Graph& g, VertexId x, VertexId y,
                                         const std::vector<bool>& blocked) {
  std::vector<std::optional<VertexId>> prev(g.order());
  std::vector<bool> seen(g.order(), false);
  std::queue<VertexId> q;
  q.push(x);
  seen[x] = true;
  while (!q.empty()) {
    VertexId a = q.front();
    q.pop();
    if (a == y) break;
    for (VertexId b : g.neighbors(a)) {
      if (seen[b] || blocked[b]) continue;
      seen[b] = true;
      prev[b] = a;
      q.push(b);
    }
  }
  if (!seen[y]) return {};
  VertexList path{y};
  while (path.back() != x) path.push_back(*prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// v with non-adjacent neighbours x, y: close a hole through a shortest x-y
// path that avoids N[v] except x and y.
inline std::optional<HoleWitness> hole_through(const Graph& g, VertexId v, VertexId x, VertexId y) {
  std::vector<bool> blocked(g.order(), false);
  blocked[v] = true;
  for (VertexId w : g.neighbors(v)) blocked[w] = true;
  blocked[x] = false;
  blocked[y] = false;
  VertexList path = shortest_path_avoiding(g, x, y, blocked);
  if (path.empty()) return std::nullopt;
  VertexList cycle{v};
  cycle.insert(cycle.end(), path.begin(), path.end());
  return HoleWitness{std::move(cycle)};
}

}  // namespace detail

// True iff `cycle` is an induced cycle of length >= 4 in g.
inline bool is_hole(const Graph& g, const HoleWitness& h) {
  const auto& c = h.cycle;
  const std::size_t k = c.size();
  if (k < 4) return false;
  for (VertexId v : c) {
    if (v >= g.order()) return false;
  }
  VertexList sorted = c;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(c[i], c[j]) != consecutive) return false;
    }
  }
  return true;
}

// First violation of the PEO property: v with later neighbours x, y that are
// not adjacent. std::nullopt when `peo` is perfect.
struct PeoViolation {
  VertexId v;
  VertexId x;
  VertexId y;
};

inline std::optional<PeoViolation> find_peo_violation(const Graph& g, const EliminationOrdering& peo) {
  if (peo.order.size() != g.order()) throw InvalidArgument("ordering length differs from vertex count");
  const auto pos = detail::positions(peo, g.order());
  for (VertexId v : peo.order) {
    VertexList later = detail::later_neighbors(g, pos, v);
    if (later.size() < 2) continue;
    VertexId parent = *std::min_element(later.begin(), later.end(),
                                        [&](VertexId a, VertexId b) { return pos[a] < pos[b]; });
    for (VertexId w : later) {
      if (w != parent && !g.adjacent(parent, w)) return PeoViolation{v, parent, w};
    }
  }
  return std::nullopt;
}

inline bool is_perfect_elimination_ordering(const Graph& g, const EliminationOrdering& peo) {
  return !find_peo_violation(g, peo);
}

// Searches every (v, x, y) with x, y non-adjacent neighbours of v.
inline std::optional<HoleWitness> find_hole(const Graph& g) {
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        if (auto h = detail::hole_through(g, v, nb[i], nb[j])) return h;
      }
    }
  }
  return std::nullopt;
}

inline ChordalityResult is_chordal(const Graph& g) {
  ChordalityResult r;
  r.peo = maximum_cardinality_search(g);
  auto bad = find_peo_violation(g, r.peo);
  if (!bad) return r;
  r.chordal = false;
  r.hole = detail::hole_through(g, bad->v, bad->x, bad->y);
  if (!r.hole) r.hole = find_hole(g);
  if (!r.hole || !is_hole(g, *r.hole)) {
    throw Error("internal: PEO check failed but no valid hole witness was found");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Cliques

namespace detail {

// {v} plus its later neighbours, for every v; these contain every maximal
// clique of a chordal graph.
inline std::vector<VertexList> peo_cliques(const Graph& g, const EliminationOrdering& peo) {
  const auto pos = positions(peo, g.order());
  std::vector<VertexList> out;
  out.reserve(g.order());
  for (VertexId v : peo.order) {
    VertexList c = later_neighbors(g, pos, v);
    c.push_back(v);
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

inline bool better_clique(const VertexList& a, const VertexList& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

// Bron-Kerbosch with pivoting over masks; calls emit(R) for every maximal clique.
template <class Emit>
void bron_kerbosch(const Graph& g, Mask r, Mask p, Mask x, Emit& emit) {
  if (p == 0 && x == 0) {
    emit(r);
    return;
  }
  VertexId pivot = lowest(p | x);
  int best = -1;
  for (Mask c = p | x; c != 0; c &= c - 1) {
    VertexId u = lowest(c);
    int cover = popcount(p & g.nbr_mask(u));
    if (cover > best) {
      best = cover;
      pivot = u;
    }
  }
  for (Mask cand = p & ~g.nbr_mask(pivot); cand != 0; cand &= cand - 1) {
    VertexId v = lowest(cand);
    bron_kerbosch(g, r | bit(v), p & g.nbr_mask(v), x & g.nbr_mask(v), emit);
    p &= ~bit(v);
    x |= bit(v);
  }
}

}  // namespace detail

// Exact maximum clique for any graph with n <= 64. Ties go to the
// lexicographically smallest sorted vertex set.
inline CliqueResult max_clique_exact(const Graph& g) {
  if (g.empty()) return {};
  g.require_masks("max_clique_exact");
  VertexList best;
  auto emit = [&](Mask r) {
    VertexList c = to_list(r);
    if (best.empty() || detail::better_clique(c, best)) best = std::move(c);
  };
  detail::bron_kerbosch(g, 0, g.vertex_mask(), 0, emit);
  return {best.size(), best};
}

// Maximum clique from a known PEO (chordal graphs).
inline CliqueResult max_clique_chordal(const Graph& g, const EliminationOrdering& peo) {
  if (g.empty()) return {};
  VertexList best;
  for (auto& c : detail::peo_cliques(g, peo)) {
    if (best.empty() || detail::better_clique(c, best)) best = std::move(c);
  }
  if (!is_clique(g, best)) throw Error("internal: PEO candidate is not a clique");
  return {best.size(), best};
}

// Dispatches on chordality: PEO fast path, branch-and-bound otherwise.
inline CliqueResult max_clique(const Graph& g) {
  if (g.empty()) return {};
  auto chordal = is_chordal(g);
  if (chordal.chordal) return max_clique_chordal(g, chordal.peo);
  return max_clique_exact(g);
}

inline std::size_t clique_number(const Graph& g) { return max_clique(g).size; }

// Every maximal clique of a chordal graph, sorted lexicographically.
inline std::vector<VertexList> maximal_cliques(const Graph& g) {
  auto chordal = is_chordal(g);
  if (!chordal.chordal) {
    throw PreconditionFailed("maximal_cliques requires a chordal graph; use maximal_cliques_exact");
  }
  auto cands = detail::peo_cliques(g, chordal.peo);
  std::vector<VertexList> out;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < cands.size() && !contained; ++j) {
      if (i == j || cands[j].size() <= cands[i].size()) continue;
      contained = std::includes(cands[j].begin(), cands[j].end(), cands[i].begin(), cands[i].end());
    }
    if (!contained) out.push_back(cands[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Bron-Kerbosch listing for arbitrary graphs, n <= 64.
inline std::vector<VertexList> maximal_cliques_exact(const Graph& g) {
  std::vector<VertexList> out;
  if (g.empty()) return out;
  g.require_masks("maximal_cliques_exact");
  auto emit = [&](Mask r) { out.push_back(to_list(r)); };
  detail::bron_kerbosch(g, 0, g.vertex_mask(), 0, emit);
  std::sort(out.begin(), out.end());
  return out;
}

// Orders cliques by (size, sorted vertex list).
struct CliqueOrder {
  bool operator()(const VertexList& a, const VertexList& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Every non-empty clique of a chordal graph exactly once, in CliqueOrder.
inline std::vector<VertexList> all_cliques(const Graph& g, std::size_t limit = kDefaultAllCliquesLimit) {
  if (g.order() > limit) throw LimitExceeded("all-cliques vertex", limit, g.order());
  std::set<VertexList, CliqueOrder> seen;
  for (const auto& mc : maximal_cliques(g)) {
    const std::size_t k = mc.size();
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << k); ++sub) {
      VertexList c;
      for (std::size_t b = 0; b < k; ++b) {
        if (sub >> b & 1U) c.push_back(mc[b]);
      }
      seen.insert(std::move(c));
    }
  }
  return {seen.begin(), seen.end()};
}

// Length of the longest induced cycle (0 when acyclic) by subset scan.
// Exponential; n <= 20.
inline std::size_t longest_induced_cycle(const Graph& g) {
  constexpr std::size_t kLimit = 20;
  if (g.order() > kLimit) throw LimitExceeded("induced-cycle scan vertex", kLimit, g.order());
  std::size_t best = 0;
  const Mask all = g.vertex_mask();
  for (Mask s = 1; s <= all; ++s) {
    const auto k = static_cast<std::size_t>(popcount(s));
    if (k < 3 || k <= best) continue;
    bool two_regular = true;
    for (Mask r = s; r != 0 && two_regular; r &= r - 1) {
      two_regular = popcount(g.nbr_mask(lowest(r)) & s) == 2;
    }
    if (two_regular && components_within(g, s).size() == 1) best = k;
  }
  return best;
}

}  // namespace chordbond
