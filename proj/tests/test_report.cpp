#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "chordbond/edge_list.hpp"
#include "chordbond/report.hpp"
#include "chordbond/families.hpp"
#include "support/oracles.hpp"

using namespace chordbond;

namespace {

Json report_for(const Graph& g, bool certificate = false) {
  AnalyzeOptions opt;
  opt.emit_certificate = certificate;
  return to_json(analyze(g, Json{{"path", "test"}}, opt));
}

bool has_null(const Json& j) {
  if (j.is_null()) return true;
  if (j.is_structured()) {
    for (const auto& x : j) {
      if (has_null(x)) return true;
    }
  }
  return false;
}

Json without_timings(Json j) {
  for (auto& [stage, ms] : j["timings_ms"].items()) ms = 0;
  return j;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("report values on named graphs", "[report]") {
  SECTION("K_4") {
    Json j = report_for(clique(4));
    CHECK(j["gamma"] == 1);
    CHECK(j["bondage"] == 2);
    CHECK(j["omega"] == 4);
    CHECK(j["is_clique"] == true);
    CHECK(j["bondage_witness"].size() == 2);
    CHECK(j["certificate_status"] == "not requested");
  }
  SECTION("sun") {
    Json j = report_for(corona(clique(3), clique(1)), true);
    CHECK(j["gamma"] == 3);
    CHECK(j["bondage"] == 3);
    CHECK(j["certificate"]["verified"] == true);
    CHECK(j["certificate"]["bound"] <= 3);
  }
  SECTION("C_4") {
    Json j = report_for(cycle(4), true);
    CHECK(j["is_chordal"] == false);
    REQUIRE(j.contains("hole"));
    CHECK(j["hole"].size() == 4);
    CHECK(j["bondage"] == 3);
    CHECK_FALSE(j["bounds"].contains("chordal"));
    CHECK(j["certificate_status"].get<std::string>().rfind("not applicable", 0) == 0);
  }
}

TEST_CASE("skipped stages leave fields out", "[report]") {
  Json big = report_for(path(40));
  CHECK(big["bondage"].get<std::string>().rfind("skipped: ", 0) == 0);
  CHECK_FALSE(big.contains("gamma"));
  CHECK(big.contains("gamma_status"));
  CHECK_FALSE(big.contains("bondage_witness"));
  CHECK_FALSE(big["timings_ms"].contains("certificate"));

  Json empty = report_for(Graph(3, {}));
  CHECK(empty["bondage"] == "undefined");
  CHECK(empty["bounds"] == Json::object());

  for (const Json& j : {big, empty, report_for(cycle(5), true), report_for(star(6), true)}) CHECK_FALSE(has_null(j));
}

TEST_CASE("report JSON round-trips byte for byte", "[report]") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Graph g = s % 4 == 0 ? cycle(4 + s % 5) : random_chordal(3 + s % 9, 0.35, Seed{s});
    const std::string once = dump_report(report_for(g, true));
    const std::string twice = dump_report(Json::parse(once));
    REQUIRE(once == twice);
    CHECK(Json::parse(once)["gamma"] == oracle::gamma(g));
  }
}

TEST_CASE("golden analyze report", "[report]") {
  const Graph sun = corona(clique(3), clique(1));
  const std::string got = dump_report(without_timings(report_for(sun, true)));
  const std::string want = slurp(std::string(CHORDBOND_GOLDEN_DIR) + "/sun3.json");
  REQUIRE_FALSE(want.empty());
  CHECK(got == want);
}
