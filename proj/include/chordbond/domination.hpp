#pragma once

// Exact domination number by branch-and-bound over 64-bit vertex masks.
//
// Each connected component is solved on its own and the results summed.
// Inside a component the search picks the undominated vertex with the fewest
// possible dominators and branches over its closed neighbourhood. Pruning
// uses a greedy upper bound and the larger of two lower bounds: a packing of
// undominated vertices with pairwise disjoint closed neighbourhoods, and
// ceil(|undominated| / best single-vertex coverage).

#include <array>

#include "graph.hpp"

namespace chordbond {

inline constexpr std::size_t kDefaultGammaLimit = 32;

struct DominationResult {
  std::size_t gamma = 0;
  VertexList witness;
};

inline bool is_dominating(const Graph& g, std::span<const VertexId> s) {
  check_vertices(g, s);
  std::vector<bool> covered(g.order(), false);
  for (VertexId v : s) {
    covered[v] = true;
    for (VertexId w : g.neighbors(v)) covered[w] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

inline Mask dominated_by(const Graph& g, Mask s) {
  Mask d = 0;
  for (; s != 0; s &= s - 1) d |= g.closed_mask(lowest(s));
  return d;
}

namespace detail {

// Open neighbourhood masks, one per vertex.
using MaskAdjacency = std::span<const Mask>;

inline Mask closed(MaskAdjacency adj, VertexId v) { return adj[v] | bit(v); }

inline std::vector<Mask> components_of(MaskAdjacency adj) {
  std::vector<Mask> out;
  Mask within = full_mask(adj.size());
  while (within != 0) {
    Mask comp = bit(lowest(within));
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[lowest(f)];
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    within &= ~comp;
  }
  return out;
}

class DomSearch {
 public:
  DomSearch(MaskAdjacency adj, Mask component) : adj_(adj), comp_(component) {}

  // Minimum dominating set of the component with fewer than `cap` vertices,
  // or std::nullopt if none exists.
  std::optional<Mask> solve(std::size_t cap) {
    Mask greedy = greedy_cover();
    best_size_ = cap;
    found_ = false;
    if (static_cast<std::size_t>(popcount(greedy)) < cap) {
      best_size_ = static_cast<std::size_t>(popcount(greedy));
      best_ = greedy;
      found_ = true;
    }
    search(0, 0, 0);
    if (!found_) return std::nullopt;
    return best_;
  }

 private:
  Mask greedy_cover() const {
    Mask chosen = 0;
    Mask undominated = comp_;
    while (undominated != 0) {
      VertexId pick = lowest(comp_);
      int gain = -1;
      for (Mask c = comp_; c != 0; c &= c - 1) {
        VertexId x = lowest(c);
        int cover = popcount(closed(adj_, x) & undominated);
        if (cover > gain) {
          gain = cover;
          pick = x;
        }
      }
      chosen |= bit(pick);
      undominated &= ~closed(adj_, pick);
    }
    return chosen;
  }

  std::size_t lower_bound(Mask undominated) const {
    std::size_t packing = 0;
    Mask used = 0;
    int max_cover = 0;
    for (Mask u = undominated; u != 0; u &= u - 1) {
      Mask cn = closed(adj_, lowest(u));
      if ((cn & used) == 0) {
        ++packing;
        used |= cn;
      }
    }
    for (Mask c = comp_; c != 0; c &= c - 1) {
      max_cover = std::max(max_cover, popcount(closed(adj_, lowest(c)) & undominated));
    }
    const auto need = static_cast<std::size_t>(popcount(undominated));
    const auto cover = static_cast<std::size_t>(max_cover);
    return std::max(packing, (need + cover - 1) / cover);
  }

  void search(std::size_t size, Mask chosen, Mask dominated) {
    const Mask undominated = comp_ & ~dominated;
    if (undominated == 0) {
      if (size < best_size_) {
        best_size_ = size;
        best_ = chosen;
        found_ = true;
      }
      return;
    }
    if (size + lower_bound(undominated) >= best_size_) return;

    // Undominated vertex with the fewest candidate dominators.
    VertexId target = lowest(undominated);
    int fewest = 65;
    for (Mask u = undominated; u != 0; u &= u - 1) {
      VertexId v = lowest(u);
      int c = popcount(closed(adj_, v) & comp_);
      if (c < fewest) {
        fewest = c;
        target = v;
      }
    }

    // Branch over N[target], most new coverage first.
    std::array<std::pair<int, VertexId>, 64> order{};
    std::size_t count = 0;
    for (Mask o = closed(adj_, target) & comp_; o != 0; o &= o - 1) {
      VertexId x = lowest(o);
      order[count++] = {-popcount(closed(adj_, x) & undominated), x};
    }
    std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count));
    for (std::size_t i = 0; i < count; ++i) {
      VertexId x = order[i].second;
      search(size + 1, chosen | bit(x), dominated | closed(adj_, x));
      if (size + 1 >= best_size_) return;
    }
  }

  MaskAdjacency adj_;
  Mask comp_;
  std::size_t best_size_ = 0;
  Mask best_ = 0;
  bool found_ = false;
};

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order());
  for (VertexId v = 0; v < g.order(); ++v) adj[v] = g.nbr_mask(v);
  return adj;
}

inline void check_gamma_limit(const Graph& g, std::size_t limit) {
  if (g.order() > limit) throw LimitExceeded("domination vertex", limit, g.order());
  g.require_masks("domination");
}

inline Mask min_dominating_set(MaskAdjacency adj) {
  Mask witness = 0;
  for (Mask comp : components_of(adj)) {
    DomSearch search(adj, comp);
    witness |= *search.solve(static_cast<std::size_t>(popcount(comp)) + 1);
  }
  return witness;
}

// True iff the graph has a dominating set of at most k vertices.
inline bool dominated_within(MaskAdjacency adj, std::size_t k) {
  const auto comps = components_of(adj);
  if (comps.size() > k) return false;
  std::size_t budget = k;
  for (Mask comp : comps) {
    DomSearch search(adj, comp);
    auto best = search.solve(budget + 1);
    if (!best) return false;
    budget -= static_cast<std::size_t>(popcount(*best));
  }
  return true;
}

}  // namespace detail

inline DominationResult gamma(const Graph& g, std::size_t limit = kDefaultGammaLimit) {
  detail::check_gamma_limit(g, limit);
  const auto adj = detail::adjacency_masks(g);
  Mask witness = detail::min_dominating_set(adj);
  return {static_cast<std::size_t>(popcount(witness)), to_list(witness)};
}

// True iff g has a dominating set of at most k vertices.
inline bool dominated_within(const Graph& g, std::size_t k, std::size_t limit = kDefaultGammaLimit) {
  detail::check_gamma_limit(g, limit);
  return detail::dominated_within(detail::adjacency_masks(g), k);
}

// Every dominating set of size gamma(g), sorted lexicographically.
inline std::vector<VertexList> all_min_dominating_sets(const Graph& g,
                                                       std::size_t limit = kDefaultGammaLimit) {
  const std::size_t target = gamma(g, limit).gamma;
  std::vector<VertexList> out;
  // Branch on the lowest undominated vertex; a dominator tried in an earlier
  // sibling branch is forbidden afterwards, so each set is produced once.
  auto rec = [&](auto&& self, std::size_t size, Mask chosen, Mask dominated, Mask forbidden) -> void {
    const Mask undominated = g.vertex_mask() & ~dominated;
    if (undominated == 0) {
      out.push_back(to_list(chosen));
      return;
    }
    if (size == target) return;
    VertexId v = lowest(undominated);
    Mask forb = forbidden;
    for (Mask o = g.closed_mask(v) & ~forbidden; o != 0; o &= o - 1) {
      VertexId x = lowest(o);
      self(self, size + 1, chosen | bit(x), dominated | g.closed_mask(x), forb);
      forb |= bit(x);
    }
  };
  rec(rec, 0, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chordbond
