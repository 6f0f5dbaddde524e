#pragma once

// SolveReport: everything `chordbond analyze` computes for one graph, and its
// JSON form. Stages that were skipped leave their fields out; the JSON keeps
// insertion order so output is stable byte for byte.

#include <chrono>
#include <cmath>

#include <json.hpp>

#include "certifier.hpp"

namespace chordbond {

using Json = nlohmann::ordered_json;

struct AnalyzeOptions {
  BondageLimits bondage;
  std::size_t cliques_n = kDefaultAllCliquesLimit;
  std::size_t gamma_n = kDefaultGammaLimit;
  bool run_bondage = true;
  bool emit_certificate = false;
};

struct CertificateSummary {
  CertificateResult result;
  bool verified = false;
};

struct SolveReport {
  Json input;  // {"path": ...} or {"family": ..., "params": ..., "seed": ...}
  std::size_t n = 0;
  std::size_t m = 0;
  bool connected = false;
  bool is_chordal = false;
  std::optional<HoleWitness> hole;
  bool is_clique = false;
  std::optional<CliqueResult> omega;
  std::string omega_status;
  std::size_t delta_max = 0;
  std::size_t delta_min = 0;
  std::optional<DominationResult> gamma;
  std::string gamma_status;
  UpperBoundReport bounds;
  std::optional<BondageResult> bondage;
  std::string bondage_status;  // "ok", "undefined", "skipped: ...", "not requested"
  std::optional<CertificateSummary> certificate;
  std::string certificate_status;
  std::vector<std::pair<std::string, double>> timings_ms;
};

namespace detail {

class StageTimer {
 public:
  explicit StageTimer(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}

  template <class F>
  void run(const std::string& stage, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
    sink_.emplace_back(stage, std::round(dt.count() * 1000.0) / 1000.0);
  }

 private:
  std::vector<std::pair<std::string, double>>& sink_;
};

}  // namespace detail

inline SolveReport analyze(const Graph& g, Json input, const AnalyzeOptions& opt = {}) {
  SolveReport r;
  r.input = std::move(input);
  r.n = g.order();
  r.m = g.size();
  detail::StageTimer timer(r.timings_ms);

  std::optional<ChordalityResult> chordal;
  timer.run("chordality", [&] {
    chordal = is_chordal(g);
    r.is_chordal = chordal->chordal;
    r.hole = chordal->hole;
    r.connected = is_connected(g);
    r.is_clique = is_complete(g);
    auto ds = degree_stats(g);
    r.delta_max = ds.max_degree;
    r.delta_min = ds.min_degree;
  });

  timer.run("omega", [&] {
    if (r.is_chordal) {
      r.omega = max_clique_chordal(g, chordal->peo);
      r.omega_status = "ok";
    } else if (g.has_masks()) {
      r.omega = max_clique_exact(g);
      r.omega_status = "ok";
    } else {
      r.omega_status = "skipped: non-chordal graph above " + std::to_string(kMaskLimit) + " vertices";
    }
  });

  timer.run("gamma", [&] {
    try {
      r.gamma = chordbond::gamma(g, opt.gamma_n);
      r.gamma_status = "ok";
    } catch (const LimitExceeded& e) {
      r.gamma_status = std::string("skipped: ") + e.what();
    }
  });

  timer.run("bounds", [&] { r.bounds = upper_bound_report(g); });

  if (!opt.run_bondage) {
    r.bondage_status = "not requested";
  } else {
    timer.run("bondage", [&] {
      try {
        r.bondage = chordbond::bondage(g, opt.bondage);
        r.bondage_status = "ok";
      } catch (const UndefinedBondage&) {
        r.bondage_status = "undefined";
      } catch (const LimitExceeded& e) {
        r.bondage_status = std::string("skipped: ") + e.what();
      }
    });
  }

  if (!opt.emit_certificate) {
    r.certificate_status = "not requested";
  } else if (!r.is_chordal || !r.connected || r.is_clique || r.n < 2) {
    r.certificate_status = "not applicable: needs a connected chordal graph that is not a clique";
  } else {
    timer.run("certificate", [&] {
      try {
        CertifierLimits lim{opt.cliques_n, opt.gamma_n, opt.bondage};
        auto c = extract_certificate(g, lim);
        bool ok = certificate_verifies(g, c.certificate, opt.gamma_n);
        r.certificate = CertificateSummary{std::move(c), ok};
        r.certificate_status = "ok";
      } catch (const LimitExceeded& e) {
        r.certificate_status = std::string("skipped: ") + e.what();
      }
    });
  }
  return r;
}

// ---------------------------------------------------------------------------
// JSON

inline Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

inline Json to_json(const EdgeSet& es) {
  Json a = Json::array();
  for (const Edge& e : es) a.push_back(to_json(e));
  return a;
}

inline Json to_json(const VertexList& vs) {
  Json a = Json::array();
  for (VertexId v : vs) a.push_back(v);
  return a;
}

inline Json to_json(const UpperBoundReport& b) {
  Json j = Json::object();
  if (b.fink) j["fink"] = {{"bound", b.fink->bound}, {"u", b.fink->u}, {"v", b.fink->v}};
  if (b.hartnell_rall) {
    j["hartnell_rall"] = {{"bound", b.hartnell_rall->bound}, {"edge", to_json(b.hartnell_rall->edge)}};
  }
  if (b.chordal) j["chordal"] = *b.chordal;
  if (b.overall) {
    j["overall"] = *b.overall;
    j["overall_source"] = to_string(*b.overall_source);
  }
  return j;
}

inline Json to_json(const BondageCertificate& c) {
  Json j;
  j["kind"] = certificate_kind(c);
  if (const auto* p = std::get_if<PairCertificate>(&c)) {
    j["u"] = p->u;
    j["v"] = p->v;
    j["bound"] = p->bound;
  } else if (const auto* e = std::get_if<EdgeCertificate>(&c)) {
    j["u"] = e->u;
    j["v"] = e->v;
    j["bound"] = e->bound;
  } else {
    const auto& d = std::get<DirectWitness>(c);
    j["edges"] = to_json(d.edges);
    j["bound"] = d.edges.size();
  }
  return j;
}

inline Json to_json(const StructuralWitness& sw) {
  Json j;
  j["K"] = to_json(sw.K);
  j["i"] = sw.layer;
  j["W"] = to_json(sw.W);
  j["F"] = to_json(sw.F);
  j["Q"] = to_json(sw.Q);
  j["psi"] = sw.psi;
  if (sw.apex) j["apex"] = *sw.apex;
  return j;
}

inline Json to_json(const SolveReport& r) {
  Json j;
  j["input"] = r.input;
  j["n"] = r.n;
  j["m"] = r.m;
  j["connected"] = r.connected;
  j["is_chordal"] = r.is_chordal;
  if (r.hole) j["hole"] = to_json(r.hole->cycle);
  j["is_clique"] = r.is_clique;
  if (r.omega) {
    j["omega"] = r.omega->size;
    j["max_clique"] = to_json(r.omega->vertices);
  } else {
    j["omega_status"] = r.omega_status;
  }
  j["delta_max"] = r.delta_max;
  j["delta_min"] = r.delta_min;
  if (r.gamma) {
    j["gamma"] = r.gamma->gamma;
    j["gamma_witness"] = to_json(r.gamma->witness);
  } else {
    j["gamma_status"] = r.gamma_status;
  }
  j["bounds"] = to_json(r.bounds);
  if (r.bondage) {
    j["bondage"] = r.bondage->b;
    j["bondage_witness"] = to_json(r.bondage->witness);
    j["bondage_cap"] = r.bondage->cap;
    j["bondage_bound_used"] = to_string(r.bondage->bound_used);
  } else {
    j["bondage"] = r.bondage_status;
  }
  if (r.certificate) {
    Json c = to_json(r.certificate->result.certificate);
    c["branch"] = to_string(r.certificate->result.branch);
    c["verified"] = r.certificate->verified;
    if (r.certificate->result.witness) c["witness"] = to_json(*r.certificate->result.witness);
    if (!r.certificate->result.note.empty()) c["note"] = r.certificate->result.note;
    j["certificate"] = c;
  } else {
    j["certificate_status"] = r.certificate_status;
  }
  Json t = Json::object();
  for (const auto& [stage, ms] : r.timings_ms) t[stage] = ms;
  j["timings_ms"] = t;
  return j;
}

inline std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace chordbond
