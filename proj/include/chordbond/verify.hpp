#pragma once

// Seeded verification sweeps behind `chordbond verify <suite>`.
//
// Instance i of a sweep with base seed s draws its parameters from
// SplitMix64(derive_seed(t, 0)) and its graph from seed t, where
// t = derive_seed(derive_seed(s, i), attempt) and attempt counts rejected
// draws. Every instance line prints n, the density and t, so
// `chordbond generate <family> -n N -d D --seed T` rebuilds the graph.

#include <cinttypes>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include "certifier.hpp"
#include "families.hpp"

namespace chordbond {

struct SizeRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

struct SweepOptions {
  Seed seed{1};
  std::optional<std::size_t> count;
  std::optional<SizeRange> n_range;
  std::optional<double> density;
  BondageLimits limits;
  std::size_t cliques_n = kDefaultAllCliquesLimit;
  std::size_t gamma_n = kDefaultGammaLimit;
};

struct CorpusEntry {
  std::size_t index = 0;
  Seed seed;
  double density = 0.0;  // unused for trees
  Graph g;
};

struct InstanceOutcome {
  std::size_t index = 0;
  bool pass = true;
  std::string detail;
  std::string bundle;  // set on failure
};

struct SuiteResult {
  std::string name;
  std::vector<InstanceOutcome> instances;
  std::vector<std::string> notes;  // observations that are not pass/fail

  std::size_t failed() const {
    return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(),
                                                  [](const InstanceOutcome& o) { return !o.pass; }));
  }
  std::size_t passed() const { return instances.size() - failed(); }
  bool ok() const { return failed() == 0; }
};

struct SuiteDefaults {
  std::size_t count;
  SizeRange n_range;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"chordal-bound", "tree-bound",  "block-bound", "claims",
                                              "certificates",  "clique-exact", "tightness",  "quadrangulated"};
  return names;
}

inline SuiteDefaults suite_defaults(const std::string& suite) {
  if (suite == "chordal-bound" || suite == "certificates") return {500, {4, 13}};
  if (suite == "tree-bound") return {300, {2, 14}};
  if (suite == "block-bound") return {200, {2, 12}};
  if (suite == "claims") return {200, {2, 12}};
  if (suite == "clique-exact") return {7, {2, 8}};
  if (suite == "tightness") return {4, {2, 5}};
  if (suite == "quadrangulated") return {60, {4, 10}};  // random samples; the family itself is always run
  throw InvalidArgument("unknown suite '" + suite + "'");
}

namespace detail {

inline std::string format_density(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

inline std::string hex_seed(Seed s) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%016" PRIx64, s.value);
  return buf;
}

inline std::string describe(const CorpusEntry& e, const char* family, bool with_density) {
  std::ostringstream os;
  os << family << " n=" << e.g.order();
  if (with_density) os << " d=" << format_density(e.density);
  os << " seed=" << hex_seed(e.seed) << " m=" << e.g.size();
  return os.str();
}

inline std::optional<StructuralWitness> witness_or_none(const Graph& g, std::size_t cliques_n) {
  try {
    return minimize_psi(g, cliques_n);
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline SizeRange checked_range(const SweepOptions& o, const SuiteDefaults& d, std::size_t min_lo) {
  SizeRange r = o.n_range.value_or(d.n_range);
  if (r.lo > r.hi) throw InvalidArgument("empty size range");
  if (r.lo < min_lo) throw InvalidArgument("size range must start at " + std::to_string(min_lo) + " or more");
  return r;
}

// Draws graphs until `accept` holds. Gives up after a fixed number of tries
// so an unsatisfiable filter fails loudly instead of spinning.
template <class Make, class Accept>
CorpusEntry draw(Seed base, std::size_t index, Make&& make, Accept&& accept) {
  constexpr std::size_t kAttempts = 10000;
  const Seed inst = derive_seed(base, index);
  for (std::size_t a = 0; a < kAttempts; ++a) {
    CorpusEntry e;
    e.index = index;
    e.seed = derive_seed(inst, a);
    SplitMix64 params(derive_seed(e.seed, 0));
    make(e, params);
    if (accept(e.g)) return e;
  }
  throw Error("instance " + std::to_string(index) + ": no acceptable graph after " + std::to_string(kAttempts) +
              " draws");
}

}  // namespace detail

// Connected chordal graphs with n in the range. `non_clique` drops cliques;
// `max_m` caps the edge count (the bondage search is exponential in it).
inline std::vector<CorpusEntry> chordal_corpus(Seed seed, std::size_t count, SizeRange range,
                                               std::optional<double> density, bool non_clique,
                                               std::size_t max_m) {
  if (non_clique && range.hi < 3) throw InvalidArgument("non-clique connected graphs need n >= 3");
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(detail::draw(
        seed, i,
        [&](CorpusEntry& e, SplitMix64& p) {
          const std::size_t n = range.lo + p.below(range.hi - range.lo + 1);
          e.density = density ? *density : 0.6 * p.unit();
          e.g = random_chordal(n, e.density, e.seed);
        },
        [&](const Graph& g) { return g.size() <= max_m && !(non_clique && is_complete(g)); }));
  }
  return out;
}

inline std::vector<CorpusEntry> tree_corpus(Seed seed, std::size_t count, SizeRange range) {
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(detail::draw(
        seed, i,
        [&](CorpusEntry& e, SplitMix64& p) {
          e.g = random_tree(range.lo + p.below(range.hi - range.lo + 1), e.seed);
        },
        [](const Graph&) { return true; }));
  }
  return out;
}

inline std::vector<CorpusEntry> block_corpus(Seed seed, std::size_t count, SizeRange range, std::size_t max_m) {
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(detail::draw(
        seed, i,
        [&](CorpusEntry& e, SplitMix64& p) {
          e.g = random_block_graph(range.lo + p.below(range.hi - range.lo + 1), e.seed);
        },
        [&](const Graph& g) { return g.size() <= max_m; }));
  }
  return out;
}

// Connected graphs whose longest induced cycle is exactly 4, by rejection from
// G(n, p) with p drawn in [0.3, 0.9).
inline std::vector<CorpusEntry> quadrangulated_corpus(Seed seed, std::size_t count, SizeRange range,
                                                      std::size_t max_m) {
  if (range.lo < 4 || range.hi > 20) throw InvalidArgument("quadrangulated samples need n in [4,20]");
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(detail::draw(
        seed, i,
        [&](CorpusEntry& e, SplitMix64& p) {
          const std::size_t n = range.lo + p.below(range.hi - range.lo + 1);
          e.density = 0.3 + 0.6 * p.unit();
          e.g = random_gnp(n, e.density, e.seed);
        },
        [&](const Graph& g) { return g.size() <= max_m && is_connected(g) && longest_induced_cycle(g) == 4; }));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Per-instance checks. Each returns an outcome whose detail line carries the
// numbers that were compared.

inline InstanceOutcome check_chordal_bound(const CorpusEntry& e, const SweepOptions& o) {
  InstanceOutcome out{e.index, true, detail::describe(e, "random-chordal", true), {}};
  const std::size_t omega = clique_number(e.g);
  const std::size_t delta = degree_stats(e.g).max_degree;
  const auto r = bondage(e.g, o.limits);
  out.detail += " omega=" + std::to_string(omega) + " Delta=" + std::to_string(delta) + " b=" +
                std::to_string(r.b);
  if (r.b > omega || omega > delta) {
    out.pass = false;
    out.bundle = diagnostic_bundle(e.g, "b <= omega <= Delta fails: " + out.detail,
                                   detail::witness_or_none(e.g, o.cliques_n));
  }
  return out;
}

inline InstanceOutcome check_tree_bound(const CorpusEntry& e, const SweepOptions& o) {
  InstanceOutcome out{e.index, true, detail::describe(e, "random-tree", false), {}};
  const auto r = bondage(e.g, o.limits);
  out.detail += " b=" + std::to_string(r.b);
  if (r.b < 1 || r.b > 2) {
    out.pass = false;
    out.bundle = diagnostic_bundle(e.g, "tree with b outside {1,2}: " + out.detail);
  }
  return out;
}

inline InstanceOutcome check_block_bound(const CorpusEntry& e, const SweepOptions& o) {
  InstanceOutcome out{e.index, true, detail::describe(e, "random-block", false), {}};
  const std::size_t delta = degree_stats(e.g).max_degree;
  out.detail += " Delta=" + std::to_string(delta);
  if (!bondage_defined(e.g)) {
    out.detail += " b=undefined";
    return out;
  }
  const auto r = bondage(e.g, o.limits);
  out.detail += " b=" + std::to_string(r.b);
  if (r.b > delta) {
    out.pass = false;
    out.bundle = diagnostic_bundle(e.g, "block graph with b > Delta: " + out.detail);
  }
  return out;
}

// G[Q] is a clique for every clique K, and the apex properties hold on the
// psi-minimal witness when the graph is not a clique and one exists.
inline InstanceOutcome check_claims(const CorpusEntry& e, const SweepOptions& o) {
  InstanceOutcome out{e.index, true, detail::describe(e, "random-chordal", true), {}};
  std::size_t checked = 0;
  for (const VertexList& k : all_cliques(e.g, o.cliques_n)) {
    ++checked;
    if (auto v = check_claim1(e.g, partition_distance(e.g, k))) {
      out.pass = false;
      std::ostringstream os;
      os << "G[Q] is not a clique for K of size " << k.size() << " at layer " << v->layer << " (" << v->q1 << " and "
         << v->q2 << " not adjacent)";
      out.detail += " " + os.str();
      std::ostringstream kk;
      for (VertexId x : k) kk << ' ' << x;
      out.bundle = diagnostic_bundle(e.g, os.str() + "; K =" + kk.str());
      return out;
    }
  }
  out.detail += " cliques=" + std::to_string(checked);
  if (is_complete(e.g)) {
    out.detail += " apex=n/a(clique)";
    return out;
  }
  auto sw = minimize_psi(e.g, o.cliques_n);
  if (!sw) {
    out.detail += " apex=n/a(no witness)";
    return out;
  }
  auto cr = check_claims_2_3(e.g, *sw, o.cliques_n);
  out.detail += " psi=" + std::to_string(sw->psi) + " |Q|=" + std::to_string(sw->Q.size()) +
                " apex=" + to_string(cr.status);
  if (cr.status != ClaimStatus::holds) {
    out.pass = false;
    out.detail += " (" + cr.detail + ")";
    out.bundle = cr.bundle.empty() ? diagnostic_bundle(e.g, "apex properties: " + cr.detail, sw) : cr.bundle;
  }
  return out;
}

inline InstanceOutcome check_certificate(const CorpusEntry& e, const SweepOptions& o) {
  InstanceOutcome out{e.index, true, detail::describe(e, "random-chordal", true), {}};
  try {
    CertifierLimits lim{o.cliques_n, o.gamma_n, o.limits};
    auto c = extract_certificate(e.g, lim);
    const std::size_t bound = certified_bound(c.certificate);
    out.detail += std::string(" omega=") + std::to_string(c.omega) + " cert=" + certificate_kind(c.certificate) +
                  " bound=" + std::to_string(bound) + " branch=" + to_string(c.branch);
    std::string why;
    if (!certificate_verifies(e.g, c.certificate, o.gamma_n)) why = "certificate does not verify";
    if (bound > c.omega) why = "certified bound exceeds omega";
    if (const auto* d = std::get_if<DirectWitness>(&c.certificate)) {
      const std::size_t before = gamma(e.g, o.gamma_n).gamma;
      const std::size_t after = gamma(remove_edges(e.g, d->edges), o.gamma_n).gamma;
      if (after < before + 1) why = "direct witness does not raise gamma";
    }
    if (!why.empty()) {
      out.pass = false;
      out.detail += " (" + why + ")";
      out.bundle = diagnostic_bundle(e.g, why + ": " + out.detail, c.witness);
    }
  } catch (const TheoremViolation& tv) {
    out.pass = false;
    out.detail += std::string(" (") + tv.what() + ")";
    out.bundle = tv.bundle;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites

inline SuiteResult run_suite(const std::string& suite, const SweepOptions& o,
                             const std::function<void(const InstanceOutcome&)>& on_instance = {}) {
  const SuiteDefaults d = suite_defaults(suite);
  SuiteResult res{suite, {}, {}};
  auto record = [&](InstanceOutcome out) {
    if (on_instance) on_instance(out);
    res.instances.push_back(std::move(out));
  };
  const std::size_t count = o.count.value_or(d.count);

  if (suite == "chordal-bound" || suite == "certificates") {
    const auto range = detail::checked_range(o, d, 3);
    for (const auto& e : chordal_corpus(o.seed, count, range, o.density, true, o.limits.max_m)) {
      record(suite == "chordal-bound" ? check_chordal_bound(e, o) : check_certificate(e, o));
    }
  } else if (suite == "tree-bound") {
    for (const auto& e : tree_corpus(o.seed, count, detail::checked_range(o, d, 2))) record(check_tree_bound(e, o));
  } else if (suite == "block-bound") {
    for (const auto& e : block_corpus(o.seed, count, detail::checked_range(o, d, 1), o.limits.max_m)) {
      record(check_block_bound(e, o));
    }
  } else if (suite == "claims") {
    const auto range = detail::checked_range(o, d, 1);
    for (const auto& e : chordal_corpus(o.seed, count, range, o.density, false, o.limits.max_m)) {
      record(check_claims(e, o));
    }
  } else if (suite == "clique-exact") {
    const auto range = detail::checked_range(o, d, 2);
    BondageLimits wide{std::max(o.limits.max_n, range.hi), std::max(o.limits.max_m, range.hi * (range.hi - 1) / 2)};
    for (std::size_t n = range.lo; n <= range.hi; ++n) {
      const Graph g = clique(n);
      const auto r = bondage(g, wide);
      const auto w = clique_bondage_witness(n);
      const std::size_t after = gamma(remove_edges(g, w)).gamma;
      InstanceOutcome out{n - range.lo, true, {}, {}};
      out.detail = "clique n=" + std::to_string(n) + " b=" + std::to_string(r.b) + " expected=" +
                   std::to_string(ceil_half(n)) + " witness=" + std::to_string(w.size()) + " gamma(G-A)=" +
                   std::to_string(after);
      if (r.b != ceil_half(n) || w.size() != ceil_half(n) || after != 2) {
        out.pass = false;
        out.bundle = diagnostic_bundle(g, "clique bondage mismatch: " + out.detail);
      }
      record(std::move(out));
    }
  } else if (suite == "tightness") {
    const auto range = detail::checked_range(o, d, 2);
    for (std::size_t n = range.lo; n <= range.hi; ++n) {
      const Graph g = corona(clique(n), clique(1));
      const std::size_t gm = gamma(g).gamma;
      const std::size_t omega = clique_number(g);
      const auto r = bondage(g, o.limits);
      InstanceOutcome out{n - range.lo, true, {}, {}};
      out.detail = "corona clique:" + std::to_string(n) + " gamma=" + std::to_string(gm) + " omega=" +
                   std::to_string(omega) + " b=" + std::to_string(r.b);
      if (gm != n || omega != n || r.b != n) {
        out.pass = false;
        out.bundle = diagnostic_bundle(g, "tightness family mismatch: " + out.detail);
      }
      record(std::move(out));
    }
  } else if (suite == "quadrangulated") {
    for (std::size_t k = 2; k <= 3; ++k) {
      const Graph g = quadrangulated_corona(k);
      const std::size_t gm = gamma(g).gamma;
      const std::size_t omega = clique_number(g);
      const std::size_t cyc = longest_induced_cycle(g);
      const auto r = bondage(g, o.limits);
      InstanceOutcome out{k - 2, true, {}, {}};
      out.detail = "quadrangulated k=" + std::to_string(k) + " gamma=" + std::to_string(gm) + " omega=" +
                   std::to_string(omega) + " longest_induced_cycle=" + std::to_string(cyc) + " b=" +
                   std::to_string(r.b);
      if (gm != 2 * k || omega != 2 || cyc != 4 || r.b != 3) {
        out.pass = false;
        out.bundle = diagnostic_bundle(g, "quadrangulated family mismatch: " + out.detail);
      }
      record(std::move(out));
    }
    // Samples only record b - omega; no bound is asserted for them.
    const auto range = detail::checked_range(o, d, 4);
    long best = std::numeric_limits<long>::min();
    std::size_t defined = 0;
    for (const auto& e : quadrangulated_corpus(o.seed, count, range, o.limits.max_m)) {
      InstanceOutcome out{2 + e.index, true, {}, {}};
      out.detail = detail::describe(e, "random-gnp", true);
      const auto omega = static_cast<long>(clique_number(e.g));
      if (bondage_defined(e.g)) {
        const auto b = static_cast<long>(bondage(e.g, o.limits).b);
        best = std::max(best, b - omega);
        ++defined;
        out.detail += " omega=" + std::to_string(omega) + " b=" + std::to_string(b) + " b-omega=" +
                      std::to_string(b - omega);
      } else {
        out.detail += " b=undefined";
      }
      record(std::move(out));
    }
    if (defined > 0) {
      res.notes.push_back("max b - omega over " + std::to_string(defined) + " quadrangulated samples: " +
                          std::to_string(best));
    }
  }
  return res;
}

}  // namespace chordbond
