#pragma once

// Graph families: fixed constructions and seeded random generators.
//
// Random generators draw from SplitMix64 (Steele, Lea, Flood 2014):
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// Integers in [0, k) are taken as next() % k and probabilities as
// (next() >> 11) * 2^-53, so a seed reproduces the same graph on any
// platform and in any language that follows these steps.

#include <cstdint>

#include "chordal.hpp"

namespace chordbond {

struct Seed {
  std::uint64_t value = 0;
};

class SplitMix64 {
 public:
  explicit SplitMix64(Seed seed) : state_(seed.value) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, k), k > 0.
  std::uint64_t below(std::uint64_t k) { return next() % k; }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::uint64_t state_;
};

// Derives an independent seed for instance `index` of a sweep.
inline Seed derive_seed(Seed base, std::uint64_t index) {
  SplitMix64 mix(Seed{base.value ^ (0xD1B54A32D192ED03ULL * (index + 1))});
  return Seed{mix.next()};
}

// ---------------------------------------------------------------------------
// Fixed families

inline Graph path(std::size_t n) {
  if (n < 1) throw InvalidArgument("path needs n >= 1");
  std::vector<Edge> e;
  for (VertexId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  std::vector<Edge> e;
  for (VertexId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, static_cast<VertexId>(n - 1));
  return Graph(n, e);
}

inline Graph clique(std::size_t n) {
  if (n < 1) throw InvalidArgument("clique needs n >= 1");
  std::vector<Edge> e;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

// K_{1,n-1} with centre 0.
inline Graph star(std::size_t n) {
  if (n < 1) throw InvalidArgument("star needs n >= 1");
  std::vector<Edge> e;
  for (VertexId i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph(n, e);
}

// g1's vertices keep their ids; copy i of g2 occupies
// n1 + i*n2 .. n1 + (i+1)*n2 - 1 and every vertex of it is joined to i.
inline Graph corona(const Graph& g1, const Graph& g2) {
  if (g1.empty() || g2.empty()) throw InvalidArgument("corona operands must be non-empty");
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  std::vector<Edge> e = g1.edges();
  for (VertexId i = 0; i < n1; ++i) {
    const auto base = static_cast<VertexId>(n1 + i * n2);
    for (const Edge& f : g2.edges()) e.emplace_back(base + f.u, base + f.v);
    for (VertexId j = 0; j < n2; ++j) e.emplace_back(i, base + j);
  }
  return Graph(n1 * (1 + n2), e);
}

// Vertex (a, b) gets id a * |V(h)| + b.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.empty() || h.empty()) throw InvalidArgument("cartesian product operands must be non-empty");
  const std::size_t nh = h.order();
  auto id = [nh](VertexId a, VertexId b) { return static_cast<VertexId>(a * nh + b); };
  std::vector<Edge> e;
  for (VertexId a = 0; a < g.order(); ++a) {
    for (const Edge& f : h.edges()) e.emplace_back(id(a, f.u), id(a, f.v));
  }
  for (const Edge& f : g.edges()) {
    for (VertexId b = 0; b < nh; ++b) e.emplace_back(id(f.u, b), id(f.v, b));
  }
  return Graph(g.order() * nh, e);
}

// (P_2 x P_k) o K_1: ladder with a pendant on every rung vertex.
inline Graph quadrangulated_corona(std::size_t k) {
  if (k < 1) throw InvalidArgument("ladder length must be >= 1");
  return corona(cartesian_product(path(2), path(k)), clique(1));
}

// ---------------------------------------------------------------------------
// Random families

// Uniform labelled tree: decode a random Pruefer sequence.
inline Graph random_tree(std::size_t n, Seed seed) {
  if (n < 1) throw InvalidArgument("tree needs n >= 1");
  if (n <= 2) return path(n);
  SplitMix64 rng(seed);
  std::vector<VertexId> code(n - 2);
  for (auto& c : code) c = static_cast<VertexId>(rng.below(n));
  std::vector<std::size_t> degree(n, 1);
  for (VertexId c : code) ++degree[c];
  std::vector<Edge> e;
  std::set<VertexId> leaves;
  for (VertexId v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  for (VertexId c : code) {
    VertexId leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    e.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  VertexId a = *leaves.begin();
  VertexId b = *std::next(leaves.begin());
  e.emplace_back(a, b);
  return Graph(n, e);
}

// Connected chordal graph grown in reverse elimination order. Vertex t joins
// a clique of the graph on 0..t-1: start at a uniform random vertex, then
// repeatedly add a uniform random common neighbour until the clique reaches
// the target size 1 + Binomial(w_t, density) or cannot grow, where w_t is
// the current clique number.
inline Graph random_chordal(std::size_t n, double density, Seed seed) {
  if (n < 1) throw InvalidArgument("random_chordal needs n >= 1");
  if (!(density >= 0.0 && density <= 1.0)) throw InvalidArgument("density must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<Edge> e;
  std::size_t omega = 1;
  for (VertexId t = 1; t < n; ++t) {
    std::size_t target = 1;
    for (std::size_t i = 0; i < omega; ++i) target += rng.bernoulli(density) ? 1 : 0;
    VertexList chosen{static_cast<VertexId>(rng.below(t))};
    while (chosen.size() < target) {
      VertexList common;
      for (VertexId c = 0; c < t; ++c) {
        if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
        if (std::all_of(chosen.begin(), chosen.end(), [&](VertexId x) { return adj[x][c]; })) common.push_back(c);
      }
      if (common.empty()) break;
      chosen.push_back(common[rng.below(common.size())]);
    }
    for (VertexId c : chosen) {
      adj[c][t] = adj[t][c] = true;
      e.emplace_back(c, t);
    }
    omega = std::max(omega, chosen.size() + 1);
  }
  return Graph(n, e);
}

struct BlockSizes {
  std::size_t min = 2;
  std::size_t max = 4;
};

// Tree of cliques: each new block of uniform size in [min, max] shares one
// uniformly chosen existing vertex. The last block is cut short to hit n.
inline Graph random_block_graph(std::size_t n, Seed seed, BlockSizes sizes = {}) {
  if (n < 1) throw InvalidArgument("block graph needs n >= 1");
  if (sizes.min < 2 || sizes.max < sizes.min) throw InvalidArgument("block sizes need 2 <= min <= max");
  SplitMix64 rng(seed);
  std::vector<Edge> e;
  std::size_t count = 1;
  while (count < n) {
    std::size_t size = sizes.min + rng.below(sizes.max - sizes.min + 1);
    size = std::min(size, n - count + 1);
    VertexList block{static_cast<VertexId>(rng.below(count))};
    for (std::size_t j = 1; j < size; ++j) block.push_back(static_cast<VertexId>(count++));
    for (std::size_t a = 0; a < block.size(); ++a) {
      for (std::size_t b = a + 1; b < block.size(); ++b) e.emplace_back(block[a], block[b]);
    }
  }
  return Graph(n, e);
}

// Erdos-Renyi G(n, p): each pair (u, v), u < v, in lexicographic order keeps
// its edge when unit() < p.
inline Graph random_gnp(std::size_t n, double p, Seed seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("edge probability must lie in [0,1]");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

// No induced K_4 minus an edge; brute force over 4-subsets.
inline bool is_diamond_free(const Graph& g) {
  const std::size_t n = g.order();
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      for (VertexId c = b + 1; c < n; ++c) {
        for (VertexId d = c + 1; d < n; ++d) {
          const VertexId q[] = {a, b, c, d};
          int edges = 0;
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) edges += g.adjacent(q[i], q[j]) ? 1 : 0;
          }
          if (edges == 5) return false;
        }
      }
    }
  }
  return true;
}

inline bool is_forest(const Graph& g) { return g.size() + connected_components(g).size() == g.order(); }

}  // namespace chordbond
