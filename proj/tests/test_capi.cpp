#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstring>
#include <string>

#include "thetawb.h"

namespace {

// Owns a handle for the duration of a test block.
struct GraphPtr {
  twb_graph* g = nullptr;
  ~GraphPtr() { twb_graph_free(g); }
  twb_graph** out() { return &g; }
};

struct StringPtr {
  char* s = nullptr;
  ~StringPtr() { twb_string_free(s); }
  char** out() { return &s; }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

double fraction_value(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return std::stod(s);
  return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
}

}  // namespace

TEST_CASE("build and query") {
  const int edges[] = {0, 1, 1, 2, 2, 0, 2, 3};
  GraphPtr g;
  REQUIRE(twb_graph_build(4, edges, 4, g.out()) == TWB_OK);
  CHECK(twb_graph_order(g.g) == 4);
  CHECK(twb_graph_edge_count(g.g) == 4);
  CHECK(twb_graph_has_edge(g.g, 0, 2) == 1);
  CHECK(twb_graph_has_edge(g.g, 0, 3) == 0);
  CHECK(twb_graph_has_edge(g.g, 0, 9) == 0);
  CHECK(twb_graph_is_bipartite(g.g) == 0);
  CHECK(twb_graph_odd_girth(g.g) == 3);
}

TEST_CASE("errors set a readable message") {
  const int loop[] = {1, 1};
  GraphPtr g;
  CHECK(twb_graph_build(3, loop, 1, g.out()) == TWB_ERR_INVALID_ARGUMENT);
  CHECK(g.g == nullptr);
  CHECK(std::strlen(twb_last_error()) > 0);

  CHECK(twb_graph_build(3, nullptr, 1, g.out()) == TWB_ERR_INVALID_ARGUMENT);
  CHECK(twb_graph_build(3, loop, 1, nullptr) == TWB_ERR_INVALID_ARGUMENT);
  CHECK(twb_graph_from_graph6("Dh", g.out()) == TWB_ERR_PARSE);
  CHECK(twb_graph_build(65, nullptr, 0, g.out()) == TWB_ERR_TOO_LARGE);

  twb_graph_free(nullptr);   // both are explicit no-ops
  twb_string_free(nullptr);
}

TEST_CASE("graph6 in and out") {
  GraphPtr c5;
  REQUIRE(twb_graph_from_graph6("Dhc", c5.out()) == TWB_OK);
  CHECK(twb_graph_order(c5.g) == 5);
  CHECK(twb_graph_edge_count(c5.g) == 5);
  CHECK(twb_graph_odd_girth(c5.g) == 5);
  StringPtr s;
  REQUIRE(twb_graph_to_graph6(c5.g, s.out()) == TWB_OK);
  CHECK(s.str() == "Dhc");
}

TEST_CASE("canonical forms and isomorphism") {
  const int a_edges[] = {0, 1, 1, 2, 2, 3, 3, 4, 4, 0};
  const int b_edges[] = {0, 2, 2, 4, 4, 1, 1, 3, 3, 0};  // relabeled five-cycle
  GraphPtr a, b;
  REQUIRE(twb_graph_build(5, a_edges, 5, a.out()) == TWB_OK);
  REQUIRE(twb_graph_build(5, b_edges, 5, b.out()) == TWB_OK);

  StringPtr fa, fb;
  REQUIRE(twb_canonical_form(a.g, fa.out()) == TWB_OK);
  REQUIRE(twb_canonical_form(b.g, fb.out()) == TWB_OK);
  CHECK(fa.str() == fb.str());

  int iso = 0;
  REQUIRE(twb_is_isomorphic(a.g, b.g, &iso) == TWB_OK);
  CHECK(iso == 1);

  GraphPtr canon;
  REQUIRE(twb_graph_canonical(a.g, canon.out()) == TWB_OK);
  StringPtr cf;
  REQUIRE(twb_graph_to_graph6(canon.g, cf.out()) == TWB_OK);
  CHECK(cf.str() == fa.str());

  GraphPtr path;
  const int p_edges[] = {0, 1, 1, 2, 2, 3, 3, 4};
  REQUIRE(twb_graph_build(5, p_edges, 4, path.out()) == TWB_OK);
  REQUIRE(twb_is_isomorphic(a.g, path.g, &iso) == TWB_OK);
  CHECK(iso == 0);
}

TEST_CASE("theta containment") {
  GraphPtr k4;
  const int edges[] = {0, 1, 0, 2, 0, 3, 1, 2, 1, 3, 2, 3};
  REQUIRE(twb_graph_build(4, edges, 6, k4.out()) == TWB_OK);
  const int tri[] = {1, 2};
  int hit = 0;
  REQUIRE(twb_contains_theta(k4.g, tri, 2, &hit) == TWB_OK);
  CHECK(hit == 1);

  GraphPtr c5;
  REQUIRE(twb_graph_from_graph6("Dhc", c5.out()) == TWB_OK);
  REQUIRE(twb_contains_theta(c5.g, tri, 2, &hit) == TWB_OK);
  CHECK(hit == 0);

  const int bad[] = {1, 1};
  CHECK(twb_contains_theta(k4.g, bad, 2, &hit) == TWB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("constructions") {
  GraphPtr t;
  REQUIRE(twb_construct_turan(7, 3, t.out()) == TWB_OK);
  CHECK(twb_graph_order(t.g) == 7);
  CHECK(twb_graph_edge_count(t.g) == 16);

  GraphPtr c;
  REQUIRE(twb_construct("cycle", 7, c.out()) == TWB_OK);
  CHECK(twb_graph_odd_girth(c.g) == 7);

  GraphPtr s;
  REQUIRE(twb_construct("subdivided-bipartite", 9, s.out()) == TWB_OK);
  CHECK(twb_graph_order(s.g) == 9);
  CHECK(twb_graph_edge_count(s.g) == 4 * 4 + 1);
  CHECK(twb_graph_odd_girth(s.g) == 5);

  GraphPtr apex;
  REQUIRE(twb_construct_sides("apex-triangle", 3, 4, apex.out()) == TWB_OK);
  CHECK(twb_graph_order(apex.g) == 8);
  CHECK(twb_graph_edge_count(apex.g) == 14);
  CHECK(twb_graph_odd_girth(apex.g) == 3);

  GraphPtr bad;
  CHECK(twb_construct("no-such-construction", 9, bad.out()) == TWB_ERR_INVALID_ARGUMENT);
  CHECK(bad.g == nullptr);
}

TEST_CASE("spectral queries") {
  GraphPtr c5, k4;
  REQUIRE(twb_graph_from_graph6("Dhc", c5.out()) == TWB_OK);
  const int edges[] = {0, 1, 0, 2, 0, 3, 1, 2, 1, 3, 2, 3};
  REQUIRE(twb_graph_build(4, edges, 6, k4.out()) == TWB_OK);

  StringPtr lo, hi;
  REQUIRE(twb_rho_bracket(c5.g, 1e-8, lo.out(), hi.out()) == TWB_OK);
  CHECK(fraction_value(lo.str()) <= 2.0);
  CHECK(2.0 <= fraction_value(hi.str()));
  CHECK(fraction_value(hi.str()) - fraction_value(lo.str()) < 1e-4);

  int cmp = 0;
  REQUIRE(twb_compare_rho(k4.g, c5.g, &cmp) == TWB_OK);
  CHECK(cmp == 1);
  REQUIRE(twb_compare_rho(c5.g, k4.g, &cmp) == TWB_OK);
  CHECK(cmp == -1);
  REQUIRE(twb_compare_rho(c5.g, c5.g, &cmp) == TWB_OK);
  CHECK(cmp == 0);
}

TEST_CASE("search report") {
  const int tri[] = {1, 2};
  StringPtr report;
  REQUIRE(twb_search_run(5, tri, 2, 1, "edges", 1, report.out()) == TWB_OK);
  auto doc = nlohmann::json::parse(report.str());
  CHECK(doc.at("schema") == "thetawb-search/1");
  CHECK(doc.at("best_edges") == 5);
  CHECK(doc.at("verified") == true);
  CHECK(doc.at("maximizers").size() == 1);

  StringPtr bad;
  CHECK(twb_search_run(5, tri, 2, 1, "entropy", 1, bad.out()) == TWB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("claims through the C surface") {
  StringPtr ids;
  REQUIRE(twb_claim_list(ids.out()) == TWB_OK);
  CHECK(ids.str().find("class-counts\n") != std::string::npos);
  CHECK(ids.str().find("odd-girth-bound\n") != std::string::npos);

  StringPtr report;
  int passed = 0;
  REQUIRE(twb_verify("class-counts", 1, 5, -1, 2026, 1, "json", report.out(), &passed) == TWB_OK);
  CHECK(passed == 1);
  CHECK(report.str().find("thetawb-report/1") != std::string::npos);

  StringPtr csv;
  REQUIRE(twb_verify("class-counts", 1, 5, -1, 2026, 1, "csv", csv.out(), &passed) == TWB_OK);
  CHECK(passed == 1);
  CHECK(csv.str().find("claim") != std::string::npos);

  StringPtr bad;
  CHECK(twb_verify("no-such-claim", -1, -1, -1, 2026, 1, "json", bad.out(), &passed) ==
        TWB_ERR_INVALID_ARGUMENT);
}
