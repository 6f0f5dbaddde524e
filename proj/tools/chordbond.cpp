// chordbond: analyze, generate and verify from the command line.
//
// Exit codes: 0 success, 1 property violation, 2 usage or parse error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "chordbond/edge_list.hpp"
#include "chordbond/report.hpp"
#include "chordbond/verify.hpp"

namespace fs = std::filesystem;
using namespace chordbond;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

std::uint64_t parse_seed(const std::string& s) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-') throw UsageError("bad seed '" + s + "'");
  return v;
}

SizeRange parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      auto n = static_cast<std::size_t>(std::stoul(s));
      return {n, n};
    }
    return {static_cast<std::size_t>(std::stoul(s.substr(0, dots))),
            static_cast<std::size_t>(std::stoul(s.substr(dots + 2)))};
  } catch (const std::exception&) {
    throw UsageError("bad size range '" + s + "' (expected a..b)");
  }
}

// "clique:4", "path:3", "cycle:5", "star:4"
Graph parse_graph_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("bad graph spec '" + spec + "' (expected family:n)");
  const std::string fam = spec.substr(0, colon);
  std::size_t n = 0;
  try {
    n = static_cast<std::size_t>(std::stoul(spec.substr(colon + 1)));
  } catch (const std::exception&) {
    throw UsageError("bad graph spec '" + spec + "'");
  }
  if (fam == "clique") return clique(n);
  if (fam == "path") return path(n);
  if (fam == "cycle") return cycle(n);
  if (fam == "star") return star(n);
  throw UsageError("unknown graph spec family '" + fam + "'");
}

Graph read_graph_file(const std::string& file) {
  if (file == "-") return read_edge_list(std::cin);
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open '" + file + "'");
  return read_edge_list(in);
}

void print_summary(std::ostream& os, const SolveReport& r) {
  os << "n=" << r.n << " m=" << r.m << " chordal=" << (r.is_chordal ? "yes" : "no");
  if (r.hole) {
    os << " hole=";
    for (std::size_t i = 0; i < r.hole->cycle.size(); ++i) os << (i ? "-" : "") << r.hole->cycle[i];
  }
  if (r.omega) os << " omega=" << r.omega->size;
  os << " Delta=" << r.delta_max;
  if (r.gamma) os << " gamma=" << r.gamma->gamma;
  os << " bondage=";
  if (r.bondage) {
    os << r.bondage->b << " {";
    for (std::size_t i = 0; i < r.bondage->witness.size(); ++i) os << (i ? " " : "") << to_string(r.bondage->witness[i]);
    os << "}";
  } else {
    os << r.bondage_status;
  }
  if (r.bounds.overall) os << " bound=" << *r.bounds.overall << " (" << to_string(*r.bounds.overall_source) << ")";
  if (r.certificate) {
    os << " certificate=" << certificate_kind(r.certificate->result.certificate) << "/"
       << to_string(r.certificate->result.branch) << (r.certificate->verified ? " verified" : " NOT VERIFIED");
  }
  os << '\n';
}

struct LimitFlags {
  std::size_t bondage_n = BondageLimits{}.max_n;
  std::size_t bondage_m = BondageLimits{}.max_m;
  std::size_t cliques_n = kDefaultAllCliquesLimit;
  std::size_t gamma_n = kDefaultGammaLimit;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--limit-bondage-n", bondage_n, "largest n for exact bondage")->capture_default_str();
    cmd->add_option("--limit-bondage-m", bondage_m, "largest edge count for exact bondage")->capture_default_str();
    cmd->add_option("--limit-cliques-n", cliques_n, "largest n for all-cliques enumeration")->capture_default_str();
    cmd->add_option("--limit-gamma-n", gamma_n, "largest n for exact domination")->capture_default_str();
  }
};

int cmd_analyze(const std::string& file, const LimitFlags& lim, bool emit_certificate, bool no_bondage) {
  Graph g;
  try {
    g = read_graph_file(file);
  } catch (const ParseError& e) {
    std::cerr << "chordbond: " << file << ": " << e.what() << '\n';
    return kUsage;
  }
  AnalyzeOptions opt;
  opt.bondage = {lim.bondage_n, lim.bondage_m};
  opt.cliques_n = lim.cliques_n;
  opt.gamma_n = lim.gamma_n;
  opt.emit_certificate = emit_certificate;
  opt.run_bondage = !no_bondage;
  const SolveReport r = analyze(g, Json{{"path", file}}, opt);
  std::cout << dump_report(to_json(r));
  print_summary(std::cerr, r);
  if (r.certificate && !r.certificate->verified) return kViolation;
  return kOk;
}

struct GenerateFlags {
  std::string family;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  double density = 0.4;
  std::string seed = "1";
  std::string base = "clique:3";
  std::string attach = "clique:1";
  std::string left = "path:2";
  std::string right = "path:2";
  std::size_t min_block = BlockSizes{}.min;
  std::size_t max_block = BlockSizes{}.max;
  std::string output = "-";
};

std::size_t need(const std::optional<std::size_t>& v, const char* flag, const std::string& family) {
  if (!v) throw UsageError("family '" + family + "' needs " + flag);
  return *v;
}

Graph generate_graph(const GenerateFlags& f) {
  const std::string& fam = f.family;
  if (fam == "path") return path(need(f.n, "-n", fam));
  if (fam == "cycle") return cycle(need(f.n, "-n", fam));
  if (fam == "clique") return clique(need(f.n, "-n", fam));
  if (fam == "star") return star(need(f.n, "-n", fam));
  if (fam == "corona") return corona(parse_graph_spec(f.base), parse_graph_spec(f.attach));
  if (fam == "cartesian") return cartesian_product(parse_graph_spec(f.left), parse_graph_spec(f.right));
  if (fam == "quadrangulated") return quadrangulated_corona(need(f.k, "-k", fam));
  const Seed seed{parse_seed(f.seed)};
  if (fam == "random-tree") return random_tree(need(f.n, "-n", fam), seed);
  if (fam == "random-chordal") return random_chordal(need(f.n, "-n", fam), f.density, seed);
  if (fam == "random-gnp") return random_gnp(need(f.n, "-n", fam), f.density, seed);
  if (fam == "random-block") return random_block_graph(need(f.n, "-n", fam), seed, {f.min_block, f.max_block});
  throw UsageError("unknown family '" + fam + "'");
}

int cmd_generate(const GenerateFlags& f) {
  const Graph g = generate_graph(f);
  if (f.output == "-") {
    write_edge_list(std::cout, g);
    return kOk;
  }
  std::ofstream out(f.output);
  if (!out) throw UsageError("cannot write '" + f.output + "'");
  write_edge_list(out, g);
  return kOk;
}

struct VerifyFlags {
  std::string suite;
  std::string seed = "1";
  std::optional<std::size_t> count;
  std::optional<std::string> n_range;
  std::optional<double> density;
  std::string diagnostics_dir = "diagnostics";
  bool quiet = false;
};

int cmd_verify(const VerifyFlags& f, const LimitFlags& lim) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), f.suite) == names.end()) {
    throw UsageError("unknown suite '" + f.suite + "'");
  }
  SweepOptions o;
  o.seed = Seed{parse_seed(f.seed)};
  o.count = f.count;
  if (f.n_range) o.n_range = parse_range(*f.n_range);
  o.density = f.density;
  o.limits = {lim.bondage_n, lim.bondage_m};
  o.cliques_n = lim.cliques_n;
  o.gamma_n = lim.gamma_n;

  std::vector<std::string> bundles;
  auto on_instance = [&](const InstanceOutcome& out) {
    std::string where;
    if (!out.pass) {
      fs::create_directories(f.diagnostics_dir);
      const fs::path p = fs::path(f.diagnostics_dir) / (f.suite + "-" + std::to_string(out.index) + ".txt");
      std::ofstream(p) << out.bundle;
      bundles.push_back(p.string());
      where = " bundle=" + p.string();
    }
    if (!f.quiet || !out.pass) {
      char idx[16];
      std::snprintf(idx, sizeof idx, "#%04zu", out.index);
      std::cout << f.suite << ' ' << idx << ' ' << out.detail << ' ' << (out.pass ? "PASS" : "FAIL") << where << '\n';
    }
  };
  const SuiteResult res = run_suite(f.suite, o, on_instance);
  std::cout << f.suite << ": " << res.instances.size() << " instances, " << res.passed() << " passed, "
            << res.failed() << " failed\n";
  for (const auto& note : res.notes) std::cout << f.suite << ": " << note << '\n';
  for (const auto& b : bundles) std::cerr << "diagnostic bundle: " << b << '\n';
  return res.ok() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bondage numbers and structural certificates for chordal graphs"};
  app.require_subcommand(1);

  LimitFlags lim;

  auto* analyze_cmd = app.add_subcommand("analyze", "report chordality, omega, gamma, bounds and bondage as JSON");
  std::string file;
  bool emit_certificate = false;
  bool no_bondage = false;
  analyze_cmd->add_option("file", file, "edge-list file, or - for standard input")->required();
  analyze_cmd->add_flag("--emit-certificate", emit_certificate, "extract and verify a bondage certificate");
  analyze_cmd->add_flag("--no-bondage", no_bondage, "skip the exact bondage search");
  lim.add_to(analyze_cmd);

  auto* gen_cmd = app.add_subcommand("generate", "write a graph family member as an edge list");
  GenerateFlags gf;
  gen_cmd->add_option("family", gf.family,
                      "path, cycle, clique, star, corona, cartesian, quadrangulated, random-tree, "
                      "random-chordal, random-gnp, random-block")
      ->required();
  gen_cmd->add_option("-n", gf.n, "vertex count");
  gen_cmd->add_option("-k", gf.k, "ladder length for quadrangulated");
  gen_cmd->add_option("-d,--density", gf.density, "random-chordal density or random-gnp edge probability")->capture_default_str();
  gen_cmd->add_option("--seed", gf.seed, "seed (decimal or 0x hex)")->capture_default_str();
  gen_cmd->add_option("--base", gf.base, "corona base graph, e.g. clique:4")->capture_default_str();
  gen_cmd->add_option("--attach", gf.attach, "corona attached graph")->capture_default_str();
  gen_cmd->add_option("--left", gf.left, "cartesian left factor")->capture_default_str();
  gen_cmd->add_option("--right", gf.right, "cartesian right factor")->capture_default_str();
  gen_cmd->add_option("--min-block", gf.min_block, "smallest random-block block")->capture_default_str();
  gen_cmd->add_option("--max-block", gf.max_block, "largest random-block block")->capture_default_str();
  gen_cmd->add_option("-o,--output", gf.output, "output path, - for standard output")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "run a seeded verification sweep");
  VerifyFlags vf;
  verify_cmd->add_option("suite", vf.suite,
                         "chordal-bound, tree-bound, block-bound, claims, certificates, clique-exact, "
                         "tightness, quadrangulated")
      ->required();
  verify_cmd->add_option("--seed", vf.seed, "base seed (decimal or 0x hex)")->capture_default_str();
  verify_cmd->add_option("--count", vf.count, "number of instances");
  verify_cmd->add_option("-n,--n-range", vf.n_range, "vertex count range a..b");
  verify_cmd->add_option("-d,--density", vf.density, "fixed random-chordal density");
  verify_cmd->add_option("--diagnostics-dir", vf.diagnostics_dir, "where failing instances are written")
      ->capture_default_str();
  verify_cmd->add_flag("-q,--quiet", vf.quiet, "print failing instances only");
  lim.add_to(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(file, lim, emit_certificate, no_bondage);
    if (gen_cmd->parsed()) return cmd_generate(gf);
    return cmd_verify(vf, lim);
  } catch (const InvalidArgument& e) {
    std::cerr << "chordbond: " << e.what() << '\n';
    return kUsage;
  } catch (const LimitExceeded& e) {
    std::cerr << "chordbond: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "chordbond: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "chordbond: " << e.what() << '\n';
    return kViolation;
  }
}
