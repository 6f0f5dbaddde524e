#pragma once

// Immutable simple undirected graph with dense 0-based vertex ids.
//
// Adjacency is held twice: sorted neighbour lists (any n) and 64-bit
// neighbourhood masks (only when n <= kMaskLimit). The exact solvers work on
// masks; the chordality and clique code works on lists and scales further.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace chordbond {

using VertexId = std::uint32_t;
using VertexList = std::vector<VertexId>;  // always sorted, no duplicates
using Mask = std::uint64_t;

inline constexpr std::size_t kMaskLimit = 64;
inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

// ---------------------------------------------------------------------------
// Mask helpers

inline constexpr Mask bit(VertexId v) { return Mask{1} << v; }
inline constexpr int popcount(Mask m) { return std::popcount(m); }
inline constexpr VertexId lowest(Mask m) { return static_cast<VertexId>(std::countr_zero(m)); }
inline constexpr Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline VertexList to_list(Mask m) {
  VertexList out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for (; m != 0; m &= m - 1) out.push_back(lowest(m));
  return out;
}

inline Mask to_mask(std::span<const VertexId> vs) {
  Mask m = 0;
  for (VertexId v : vs) m |= bit(v);
  return m;
}

// ---------------------------------------------------------------------------
// Edges

// Unordered pair stored with the smaller endpoint first.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// Sorted, duplicate-free edge collection.
using EdgeSet = std::vector<Edge>;

inline EdgeSet canonical(EdgeSet edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

// ---------------------------------------------------------------------------

class Graph {
 public:
  Graph() = default;

  // Builds the graph on vertices 0..n-1. Duplicate pairs (in either
  // orientation) collapse; self-loops and out-of-range endpoints throw.
  Graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> pairs) : adj_(n) {
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw InvalidArgument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                              ") has an endpoint outside [0," + std::to_string(n) + ")");
      }
      if (a == b) {
        throw InvalidArgument("self-loop (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
    finish();
  }

  Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    for (const Edge& e : edges) {
      if (e.v >= n) {
        throw InvalidArgument("edge " + to_string(e) + " has an endpoint outside [0," +
                              std::to_string(n) + ")");
      }
      if (e.u == e.v) throw InvalidArgument("self-loop " + to_string(e));
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    finish();
  }

  Graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> pairs)
      : Graph(n, std::span<const std::pair<VertexId, VertexId>>(pairs.begin(), pairs.size())) {}

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return m_; }
  bool empty() const { return adj_.empty(); }

  const VertexList& neighbors(VertexId v) const { return adj_.at(v); }
  std::size_t degree(VertexId v) const { return adj_.at(v).size(); }

  bool adjacent(VertexId u, VertexId v) const {
    if (has_masks()) return (masks_[u] & bit(v)) != 0;
    const auto& nu = adj_.at(u);
    return std::binary_search(nu.begin(), nu.end(), v);
  }

  bool has_masks() const { return adj_.size() <= kMaskLimit; }

  // Open neighbourhood as a mask. Requires order() <= kMaskLimit.
  Mask nbr_mask(VertexId v) const { return masks_[v]; }
  Mask closed_mask(VertexId v) const { return masks_[v] | bit(v); }
  Mask vertex_mask() const { return full_mask(order()); }

  // Canonical (sorted) edge list.
  EdgeSet edges() const {
    EdgeSet out;
    out.reserve(m_);
    for (VertexId u = 0; u < order(); ++u) {
      for (VertexId v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  void require_masks(const char* what) const {
    if (!has_masks()) throw LimitExceeded(std::string(what) + " vertex", kMaskLimit, order());
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  void finish() {
    m_ = 0;
    for (auto& nb : adj_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      m_ += nb.size();
    }
    m_ /= 2;
    if (has_masks()) {
      masks_.assign(adj_.size(), 0);
      for (VertexId v = 0; v < adj_.size(); ++v) masks_[v] = to_mask(adj_[v]);
    }
  }

  std::vector<VertexList> adj_;
  std::vector<Mask> masks_;
  std::size_t m_ = 0;
};

// ---------------------------------------------------------------------------
// Operations

inline Graph build_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> pairs) {
  return Graph(n, pairs);
}

inline void check_vertex(const Graph& g, VertexId v) {
  if (v >= g.order()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " outside [0," +
                          std::to_string(g.order()) + ")");
  }
}

inline void check_vertices(const Graph& g, std::span<const VertexId> s) {
  for (VertexId v : s) check_vertex(g, v);
}

// G - A. Every edge of A must be present in g.
inline Graph remove_edges(const Graph& g, std::span<const Edge> a) {
  EdgeSet removed(a.begin(), a.end());
  std::sort(removed.begin(), removed.end());
  for (const Edge& e : removed) {
    if (e.v >= g.order() || !g.adjacent(e.u, e.v)) {
      throw InvalidArgument("edge " + to_string(e) + " is not an edge of the graph");
    }
  }
  EdgeSet kept;
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(removed.begin(), removed.end(), e)) kept.push_back(e);
  }
  return Graph(g.order(), kept);
}

// BFS distances from a set of sources; kUnreachable where disconnected.
inline std::vector<std::size_t> bfs_distances(const Graph& g, std::span<const VertexId> sources) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::queue<VertexId> q;
  for (VertexId s : sources) {
    check_vertex(g, s);
    if (dist[s] != 0) {
      dist[s] = 0;
      q.push(s);
    }
  }
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    for (VertexId y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

// Shortest-path length, or std::nullopt when u and v are disconnected.
inline std::optional<std::size_t> distance(const Graph& g, VertexId u, VertexId v) {
  check_vertex(g, v);
  const VertexId src[] = {u};
  auto d = bfs_distances(g, src)[v];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

// Components, each sorted, listed by minimum element.
inline std::vector<VertexList> connected_components(const Graph& g) {
  std::vector<VertexList> out;
  std::vector<bool> seen(g.order(), false);
  for (VertexId s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexList comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (VertexId y : g.neighbors(comp[head])) {
        if (!seen[y]) {
          seen[y] = true;
          comp.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

// Components of the subgraph induced by `within` (mask form, n <= 64).
inline std::vector<Mask> components_within(const Graph& g, Mask within) {
  std::vector<Mask> out;
  while (within != 0) {
    Mask comp = bit(lowest(within));
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= g.nbr_mask(lowest(f));
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    within &= ~comp;
  }
  return out;
}

struct InducedSubgraph {
  Graph graph;
  VertexList to_parent;                 // local id -> parent id
  std::vector<std::optional<VertexId>> to_local;  // parent id -> local id
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> s) {
  check_vertices(g, s);
  VertexList keep(s.begin(), s.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::optional<VertexId>> to_local(g.order());
  for (VertexId i = 0; i < keep.size(); ++i) to_local[keep[i]] = i;
  std::vector<Edge> edges;
  for (VertexId i = 0; i < keep.size(); ++i) {
    for (VertexId y : g.neighbors(keep[i])) {
      if (to_local[y] && keep[i] < y) edges.emplace_back(i, *to_local[y]);
    }
  }
  return {Graph(keep.size(), edges), std::move(keep), std::move(to_local)};
}

struct DegreeStats {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::vector<std::size_t> degrees;
};

inline DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  if (g.empty()) return s;
  s.degrees.reserve(g.order());
  for (VertexId v = 0; v < g.order(); ++v) s.degrees.push_back(g.degree(v));
  auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
  s.min_degree = *lo;
  s.max_degree = *hi;
  return s;
}

inline bool is_independent_set(const Graph& g, std::span<const VertexId> s) {
  check_vertices(g, s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] != s[j] && g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

inline bool is_clique(const Graph& g, std::span<const VertexId> s) {
  check_vertices(g, s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] != s[j] && !g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

// The whole vertex set is a clique (K_n, including K_0 and K_1).
inline bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return n == 0 || g.size() == n * (n - 1) / 2;
}

// N(U): neighbours of U outside U.
inline Mask open_nbhd(const Graph& g, Mask u) {
  Mask out = 0;
  for (Mask r = u; r != 0; r &= r - 1) out |= g.nbr_mask(lowest(r));
  return out & ~u;
}

}  // namespace chordbond
